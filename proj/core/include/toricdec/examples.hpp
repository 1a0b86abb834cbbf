// SPDX-License-Identifier: Apache-2.0
//
// Built-in worked examples: sheaves supported on the three coordinate lines
// of P^2, a module over the quadric cone living in a torsion degree, and a
// Z-graded module in four variables that is torsion for the maximal ideal.

#pragma once

#include "toricdec/decomposition.hpp"

#include <array>

namespace toricdec {

struct P2CubicExample {
  GradingSetup setup;
  ModuleExpr e;                 // O(-1) + O as a free module, generators in degrees e0 and 0
  MonomialMatrix a;             // 2x2, det = -x0 x1 x2
  ModuleExpr f;                 // coker(a)
  std::array<MonomialMatrix, 3> b;        // b[nu] * a_factor[nu] = a
  std::array<MonomialMatrix, 3> a_factor;
  std::array<ModuleExpr, 3> components;   // F_nu inside F
  std::array<ModuleExpr, 3> quotients;    // F / F_nu
};

P2CubicExample p2_cubic_example();
DecompositionReport p2_cubic_report(const CheckOptions& options);

struct TorsionExample {
  GradingSetup setup;
  ModuleExpr e;
  std::vector<PrimaryComponent> components;
};

/// k in class 1 of Z/2 over the quadric cone.
TorsionExample quadric_cone_example();
/// x0 * S / <x0^2, x1, x2, x3> with degrees (1, -1, -1, 1) and B = S.
TorsionExample z_graded_4var_example();
DecompositionReport torsion_report(const std::string& title, const TorsionExample& ex, const CheckOptions& options);

}  // namespace toricdec
