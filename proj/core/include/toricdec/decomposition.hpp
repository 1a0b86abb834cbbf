// SPDX-License-Identifier: Apache-2.0
//
// Equivariant primary decomposition: equivariance of monomial matrices, gap
// modules, torsion with respect to the irrelevant ideal, descent and box
// certified primary checks.

#pragma once

#include "toricdec/engine.hpp"
#include "toricdec/grading.hpp"
#include "toricdec/module_expr.hpp"
#include "toricdec/polynomial.hpp"
#include "toricdec/report.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toricdec {

struct Shifts {
  std::vector<IntVector> target;  // a_i, one per row
  std::vector<IntVector> source;  // b_j, one per column
};

/// Shifts with exponent(i, j) = b_j - a_i for every nonzero entry, or nullopt.
/// Each connected component of the row/column graph gets its first row at 0.
std::optional<Shifts> equivariant_shifts(const MonomialGrid& grid, std::size_t nvars);

/// Every minor of every size is zero or a single term.
bool minors_all_monomial(const MonomialGrid& grid, std::size_t nvars, std::size_t bound = 6);
/// The first minor with two or more terms (smallest size first), if any.
std::optional<Polynomial> non_monomial_minor(const MonomialGrid& grid, std::size_t nvars, std::size_t bound = 6);

/// N :_E J^infinity as an intersection of saturations, one per generator of J.
ModuleExpr gap_module(const ModuleExpr& n, const ModuleExpr& e, const MonomialIdeal& j);
/// Variable primes P, relevant for the setup, with dim - |P| <= d.
std::vector<VarSet> primes_of_dimension_at_most(const GradingSetup& setup, std::int64_t d);
/// gap_module with respect to the intersection of those primes.
ModuleExpr dimension_gap_module(const ModuleExpr& n, const ModuleExpr& e, const GradingSetup& setup,
                                std::int64_t d);

struct CheckOptions {
  std::int64_t box = 6;
  std::int64_t k_max = 20;
  unsigned jobs = 1;
};

/// Localized degree-zero pieces at every chart monomial and every class-zero
/// degree with coordinates bounded by options.box all vanish.
Verdict sheafification_zero(const ModuleExpr& expr, const GradingSetup& setup, const CheckOptions& options);

struct PrimaryComponent {
  ModuleExpr module;  // Q inside the ambient E
  VarSet prime;
  bool relevant = true;
  std::string label;
};

PrimaryComponent make_component(ModuleExpr q, VarSet prime, const GradingSetup& setup, std::string label = {});

struct DescentResult {
  std::vector<PrimaryComponent> kept;
  std::vector<std::pair<PrimaryComponent, std::string>> dropped;
  /// Charts whose variables' classes fail to generate A.
  std::vector<IntVector> non_free_charts;
};

/// Keeps the components whose prime does not contain B.
DescentResult descent_filter(const std::vector<PrimaryComponent>& components, const GradingSetup& setup);
/// descent_filter, then drops components Q with E/Q sheafifying to zero, and
/// records the charts without invertible functions in every degree.
DescentResult descend(const std::vector<PrimaryComponent>& components, const ModuleExpr& e,
                      const GradingSetup& setup, const CheckOptions& options);

/// E/Q is P-torsion, nonzero in the box, and every x_i with i outside P acts
/// injectively. With a presentation of E/Q the radical of its zeroth Fitting
/// ideal is compared to <x_P> as well.
std::vector<Verdict> verify_primary(const ModuleExpr& q, const ModuleExpr& e, const VarSet& prime,
                                    const CheckOptions& options,
                                    const std::optional<MonomialMatrix>& presentation = std::nullopt);

struct FineAssociatedPrime {
  VarSet prime;
  IntVector degree;
  RatVector witness;  // ambient coordinates
  bool operator==(const FineAssociatedPrime& rhs) const = default;
};

/// Proper variable primes annihilating some homogeneous element of a degree in
/// the box exactly, one witness each (the first degree in box order).
std::vector<FineAssociatedPrime> ass_fine(const ModuleExpr& expr, const CheckOptions& options);

/// Degreewise equality of the intersection of `components` with `target`.
Verdict intersect_check(const std::vector<ModuleExpr>& components, const ModuleExpr& target,
                        const CheckOptions& options, const std::string& check = "intersection");

/// Degreewise equality of two expressions over the box.
Verdict equality_check(const ModuleExpr& lhs, const ModuleExpr& rhs, const CheckOptions& options,
                       const std::string& check);

/// The submodule of `ambient_quotient` generated by `sub`: sub + relations.
ModuleExpr submodule_in(const ModuleExpr& ambient_quotient, const ModuleExpr& sub);

}  // namespace toricdec
