// SPDX-License-Identifier: Apache-2.0
//
// Sparse polynomials with rational coefficients. Only used where minors of
// monomial matrices have to be expanded.

#pragma once

#include "toricdec/integer_matrix.hpp"
#include "toricdec/linear_algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace toricdec {

class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial monomial(const Rational& coef, const IntVector& exponent);

  std::size_t nvars() const { return nvars_; }
  const std::map<IntVector, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Exactly one term.
  bool is_monomial() const { return terms_.size() == 1; }

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  bool operator==(const Polynomial& rhs) const = default;

  std::string to_string() const;

 private:
  void add_term(const IntVector& exponent, const Rational& coef);

  std::size_t nvars_ = 0;
  std::map<IntVector, Rational> terms_;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Laplace expansion along the first row, memoized on column subsets.
Polynomial determinant(const PolyMatrix& m, std::size_t nvars);

/// All k x k minors, rows and columns chosen in lexicographic order.
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k, std::size_t nvars);

}  // namespace toricdec
