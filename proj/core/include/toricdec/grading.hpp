// SPDX-License-Identifier: Apache-2.0
//
// The Cox ring S = k[x_0, ..., x_{r-1}] with its fine Z^r grading, the class
// grading by A = Z^r / ker(cl) and the irrelevant ideal B.

#pragma once

#include "toricdec/fan.hpp"
#include "toricdec/integer_matrix.hpp"
#include "toricdec/linear_algebra.hpp"
#include "toricdec/monomial_ideal.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

namespace toricdec {

/// A matrix entry c * x^exponent. A zero coefficient stands for the zero entry.
struct Monomial {
  Rational coef = 0;
  IntVector exponent;

  bool is_zero() const { return coef == 0; }
  bool operator==(const Monomial& rhs) const = default;
};

struct LaurentMonomial {
  IntVector exponent;
  bool operator==(const LaurentMonomial& rhs) const = default;
};

class GradingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using ClassElement = std::vector<Integer>;

class GradingSetup {
 public:
  static GradingSetup from_fan(std::shared_ptr<const Fan> fan);

  /// class_matrix has one row per coordinate of Z^f + Z/t_1 + ... + Z/t_k:
  /// the first f rows are free, the last k rows are read modulo `torsion`.
  /// Throws GradingError if the class map is not surjective.
  static GradingSetup explicit_grading(std::size_t num_vars, const IntMatrix& class_matrix,
                                       const std::vector<Integer>& torsion,
                                       const std::vector<IntVector>& irrelevant_gens);

  std::size_t num_vars() const { return num_vars_; }
  const AbelianGroupPresentation& class_group() const { return group_; }
  ClassElement class_of(const IntVector& fine_degree) const { return group_.project(fine_degree); }
  const std::vector<ClassElement>& class_of_vars() const { return var_classes_; }
  const MonomialIdeal& irrelevant() const { return irrelevant_; }

  bool has_fan() const { return fan_ != nullptr; }
  /// Throws std::logic_error for explicit setups.
  const Fan& fan() const;
  std::shared_ptr<const Fan> fan_ptr() const { return fan_; }

  /// x^m = prod x_rho^<m, n(rho)>. Needs a fan.
  LaurentMonomial char_monomial(const IntVector& m) const;

  /// Columns form a lattice basis of ker(cl) in Z^r (the div matrix for fans).
  const IntMatrix& degree_zero_lattice() const { return kernel_; }
  /// Points L*lambda for |lambda|_inf <= bound, in lexicographic order of lambda.
  std::vector<IntVector> degree_zero_points(std::int64_t bound) const;

  /// Monomials x^c whose non-vanishing sets cover the quotient: the generators
  /// of B (x(sigma) over maximal cones, in cone order, for fans).
  std::vector<IntVector> chart_monomials() const;

  /// B is not contained in <x_i : i in P>.
  bool relevant(const VarSet& prime) const;
  /// Dimension of the quotient: r minus the free rank of A.
  std::int64_t dimension() const {
    return static_cast<std::int64_t>(num_vars_) - static_cast<std::int64_t>(group_.free_rank);
  }
  /// The classes of the variables dividing x^c generate A, so the chart
  /// {x^c != 0} carries invertible homogeneous functions in every degree.
  bool free_on_chart(const IntVector& c) const;

 private:
  GradingSetup() = default;
  void finish();

  std::size_t num_vars_ = 0;
  IntMatrix kernel_;
  AbelianGroupPresentation group_;
  std::vector<ClassElement> var_classes_;
  MonomialIdeal irrelevant_;
  std::shared_ptr<const Fan> fan_;
};

}  // namespace toricdec
