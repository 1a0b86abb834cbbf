// SPDX-License-Identifier: Apache-2.0
//
// Degreewise evaluation of module expressions, localization along a monomial
// and Fitting ideals of monomial matrices.

#pragma once

#include "toricdec/grading.hpp"
#include "toricdec/module_expr.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricdec {

/// Basis element x^exponent * e_generator of the ambient free module.
struct BasisLabel {
  std::size_t generator = 0;
  IntVector exponent;
  bool operator==(const BasisLabel& rhs) const = default;
};

struct GradedPiece {
  IntVector degree;
  std::vector<BasisLabel> labels;
  // Rows over `labels`.
  std::vector<RatVector> span;
  std::vector<RatVector> relations;
  std::vector<RatVector> basis;
  // The same data in ambient coordinates.
  Subquotient full;
  std::vector<RatVector> full_basis;

  std::size_t dim() const { return full.dim(); }
};

/// Subquotient at fine degree a, cached per node.
Subquotient evaluate(const ModuleExpr& expr, const IntVector& a);
GradedPiece piece(const ModuleExpr& expr, const IntVector& a);

/// Multiplication by x^c as a dim(a + c) x dim(a) matrix in the chosen bases.
RatMatrix mult_map(const ModuleExpr& expr, const IntVector& a, const IntVector& c);

/// Smallest K >= 0 past which the pieces at a + k c no longer change: every
/// support shift s that is ever <= a + k c already is at k = K.
std::int64_t stabilization_bound(const ModuleExpr& expr, const IntVector& a, const IntVector& c);

enum class ChartStatus { Stable, Inconclusive };

struct ChartPiece {
  GradedPiece piece;         // at a + k_star * c
  std::int64_t k_star = 0;   // first step from which every transition is bijective
  std::int64_t bound = 0;    // stabilization_bound
  ChartStatus status = ChartStatus::Inconclusive;
  bool transitions_bijective = false;

  std::size_t dim() const { return piece.dim(); }
};

/// Degree-a part of expr localized at x^c: the colimit of the pieces at
/// a + k c along multiplication by x^c. Inconclusive when the scan would need
/// more than k_max steps.
ChartPiece localized_piece(const ModuleExpr& expr, const IntVector& a, const IntVector& c,
                           std::int64_t k_max = 20);

/// F^sigma_m for the maximal cone `cone_index` of the setup's fan.
ChartPiece chart_piece(const ModuleExpr& expr, const GradingSetup& setup, std::size_t cone_index,
                       const IntVector& m, std::int64_t k_max = 20);

class SizeBoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct FittingIdeal {
  bool monomial = true;
  MonomialIdeal ideal;                 // meaningful when monomial
  std::vector<Polynomial> generators;  // nonzero minors
};

/// Ideal of (rows - k)-minors.
FittingIdeal fitting_ideal(const PolyMatrix& m, std::size_t nvars, std::size_t k, std::size_t bound = 6);
FittingIdeal fitting_ideal(const MonomialMatrix& m, std::size_t k, std::size_t bound = 6);

/// {a >= lower : sum(a - lower) <= total}, sorted by graded lex order of a - lower.
std::vector<IntVector> degree_box(const IntVector& lower, std::int64_t total);
/// Componentwise minimum of the ambient shifts.
IntVector box_lower(const ModuleExpr& expr);

std::string to_string(ChartStatus status);

}  // namespace toricdec
