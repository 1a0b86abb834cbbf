// SPDX-License-Identifier: Apache-2.0
//
// Exact linear algebra over Q: matrices, canonical (RREF) subspaces and the
// handful of operations the module engine needs.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace toricdec {

using Rational = mpq_class;
using RatVector = std::vector<Rational>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  RatVector row(std::size_t i) const;
  RatVector operator*(const RatVector& v) const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix transpose() const;
  bool operator==(const RatMatrix& rhs) const = default;

  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector>& rows, std::size_t cols);
std::size_t rank(const RatMatrix& m);
/// Basis of {x : M x = 0}.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// A subspace of Q^n held as a canonical reduced row echelon basis, so equal
/// subspaces compare equal structurally.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, std::vector<RatVector> vectors);
  static Subspace whole(std::size_t ambient);
  /// Span of the standard basis vectors e_i with mask[i] set.
  static Subspace coordinate(const std::vector<bool>& mask);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<RatVector>& basis() const { return basis_; }

  bool contains(const RatVector& v) const;
  bool contains(const Subspace& other) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// {y : <y, x> = 0 for all x in this}.
  Subspace annihilator() const;

  bool operator==(const Subspace& other) const = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<RatVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// M(U) for M : Q^cols -> Q^rows.
Subspace image(const RatMatrix& m, const Subspace& domain);
/// {v in domain : M v in target}.
Subspace preimage(const RatMatrix& m, const Subspace& domain, const Subspace& target);

/// Vectors of `sub`'s basis completing a basis of `rel` to one of `rel + sub`.
std::vector<RatVector> complement_basis(const Subspace& sub, const Subspace& rel);

/// Coefficients of v in the independent family `basis` modulo `rel`; throws
/// if v is not in span(basis) + rel.
RatVector coordinates_modulo(const RatVector& v, const std::vector<RatVector>& basis,
                             const Subspace& rel);

std::string to_string(const RatVector& v);

}  // namespace toricdec
