// SPDX-License-Identifier: Apache-2.0
//
// Zariski 1-forms of a toric variety as the kernel of the first Ishida map
// beta : S^n -> (+)_rho S/<x_rho>, v -> (<v, n(rho)> mod x_rho)_rho, and its
// decomposition into the kernels F_rho of the single components.

#pragma once

#include "toricdec/decomposition.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace toricdec {

struct IshidaData {
  std::shared_ptr<const Fan> fan;
  GradingSetup setup;
  IntMatrix pairing;                       // rows n(rho), one per ray
  MonomialMatrix beta;                     // S^n -> S^r with the pairing coefficients
  MonomialMatrix boundary;                 // (+)_rho S(-e_rho) -> S^r, diagonal x_rho
  ModuleExpr omega;                        // ker beta modulo the diagonal
  std::vector<ModuleExpr> f_rho;           // kernels of the single rows
  std::vector<MonomialMatrix> f_rho_gens;  // generator matrices of the F_rho
  ModuleExpr cokernel;                     // S^r / (im beta + im boundary)
};

IshidaData build_ishida(std::shared_ptr<const Fan> fan);

/// Kernel basis of n(rho)^T in degree 0 together with x_rho * w, <w, n(rho)> = 1.
MonomialMatrix f_rho_generators(const Fan& fan, std::size_t rho);

/// Omega = intersection of the F_rho, each F_rho D_rho-primary, generator
/// matrices generate the F_rho, and the closed chart forms match the engine
/// for |m|_inf <= chart_bound.
DecompositionReport omega_decomposition_check(std::shared_ptr<const Fan> fan, const CheckOptions& options,
                                              std::int64_t chart_bound = 4);

struct SiplRank {
  bool member = false;  // m in sigma^vee
  Cone i_m;             // rays of sigma orthogonal to m
  std::size_t rank = 0;
  bool surjective = false;
};

/// Rank of lambda -> (<lambda, n(rho)>)_{rho in I_m}. Throws std::invalid_argument
/// when m is not in sigma^vee.
SiplRank sipl_rank_report(const Fan& fan, const Cone& cone, const IntVector& m);

/// Cones sigma having some m in sigma^vee, |m|_inf <= bound, with B_m not onto.
std::vector<Cone> cokernel_support(const Fan& fan, std::int64_t bound);
/// The same set read off the engine: cones whose localized pieces of the
/// cokernel module are nonzero at some m in the box.
std::vector<Cone> cokernel_support_engine(const IshidaData& data, std::int64_t bound, std::int64_t k_max = 20);

/// 0 if m is outside sigma^vee, otherwise the joint kernel of n(rho), rho in I_m.
Subspace chart_omega_closed_form(const Fan& fan, const Cone& cone, const IntVector& m);

/// All m in [-bound, bound]^n.
std::vector<IntVector> character_box(std::size_t dim, std::int64_t bound);

}  // namespace toricdec
