// SPDX-License-Identifier: Apache-2.0

#include "sweeps.hpp"

#include "toricdec/decomposition.hpp"
#include "toricdec/examples.hpp"

#include <doctest.h>

using namespace toricdec;

namespace {

Monomial mono(long c, IntVector e) { return {Rational(c), std::move(e)}; }

ModuleExpr ideal(std::size_t n, const std::vector<IntVector>& gens) {
  MonomialGrid row(1);
  for (const auto& g : gens) row[0].push_back(mono(1, g));
  return ModuleExpr::image(MonomialMatrix(FreeModuleSpec(n, gens), FreeModuleSpec::standard(n, 1), row));
}

const CheckOptions small{4, 20, 1};

bool all_verified(const std::vector<Verdict>& vs) {
  for (const auto& v : vs)
    if (!v.ok()) return false;
  return true;
}

}  // namespace

TEST_CASE("shift search agrees with minor expansion on 240 random matrices") {
  const sweeps::Result r = sweeps::equivariance_sweep(76, 240);
  INFO(r.first_failure);
  CHECK(r.total == 240);
  CHECK(r.agree == r.total);
  CHECK(r.positive > 20);
  CHECK(r.total - r.positive > 20);
}

TEST_CASE("equivariant shifts of small matrices") {
  // [x, y; y, x] has the non-monomial minor x^2 - y^2
  const MonomialGrid bad{{mono(1, {1, 0}), mono(1, {0, 1})}, {mono(1, {0, 1}), mono(1, {1, 0})}};
  CHECK_FALSE(equivariant_shifts(bad, 2));
  REQUIRE(non_monomial_minor(bad, 2));
  CHECK(non_monomial_minor(bad, 2)->to_string() == "x0^2 - x1^2");
  const MonomialGrid good{{mono(1, {0, 1}), mono(1, {0, 0})}, {mono(1, {1, 1}), Monomial{}}};
  const auto s = equivariant_shifts(good, 2);
  REQUIRE(s);
  CHECK(s->target[0] == IntVector{0, 0});
  CHECK_THROWS_AS(minors_all_monomial(MonomialGrid(7, std::vector<Monomial>(7)), 2), SizeBoundExceeded);
}

TEST_CASE("cubic example: factorizations and equivariance") {
  const P2CubicExample ex = p2_cubic_example();
  for (std::size_t nu = 0; nu < 3; ++nu) CHECK(ex.b[nu] * ex.a_factor[nu] == ex.a);
  CHECK(equivariant_shifts(ex.a.entries(), 3));
  const FittingIdeal f = fitting_ideal(ex.a, 0);
  CHECK(f.monomial);
  CHECK(f.ideal == MonomialIdeal(3, {{1, 1, 1}}));
}

TEST_CASE("cubic example: components intersect to zero and are primary") {
  const P2CubicExample ex = p2_cubic_example();
  CHECK(intersect_check({ex.components[0], ex.components[1], ex.components[2]}, ModuleExpr::zero(ex.f), small).ok());
  for (std::size_t nu = 0; nu < 3; ++nu) CHECK(all_verified(verify_primary(ex.components[nu], ex.f, {nu}, small, ex.b[nu])));
  // a wrong prime must fail
  CHECK_FALSE(all_verified(verify_primary(ex.components[0], ex.f, {1}, small)));
  // two components do not intersect to zero: the failure names a degree
  const Verdict v = intersect_check({ex.components[0], ex.components[1]}, ModuleExpr::zero(ex.f), small);
  CHECK(v.status == VerdictStatus::Failed);
  CHECK_FALSE(v.degree.empty());
}

TEST_CASE("cubic example: associated primes and gap modules") {
  const P2CubicExample ex = p2_cubic_example();
  std::vector<VarSet> primes;
  for (const auto& a : ass_fine(ex.f, small)) primes.push_back(a.prime);
  CHECK(primes == std::vector<VarSet>{{0}, {1}, {2}});
  for (std::size_t nu = 0; nu < 3; ++nu) {
    IntVector c(3, 1);
    c[nu] = 0;
    const ModuleExpr gap = gap_module(ModuleExpr::zero(ex.f), ex.f, MonomialIdeal(3, {c}));
    CHECK(equality_check(ex.components[nu], gap, small, "gap").ok());
  }
}

TEST_CASE("cubic example: Hilbert function 3d + 1") {
  const P2CubicExample ex = p2_cubic_example();
  std::vector<std::size_t> h(7, 0);
  for (const auto& a : degree_box({0, 0, 0}, 6)) h[static_cast<std::size_t>(total_degree(a))] += evaluate(ex.f, a).dim();
  for (std::size_t d = 0; d < h.size(); ++d) CHECK(h[d] == 3 * d + 1);
}

TEST_CASE("gap modules of monomial ideals") {
  // <x^2 y> :_S <x>^infinity = <y>
  const ModuleExpr s = ModuleExpr::free(FreeModuleSpec::standard(2, 1));
  const ModuleExpr g = gap_module(ideal(2, {{2, 1}}), s, MonomialIdeal(2, {{1, 0}}));
  CHECK(equality_check(g, ideal(2, {{0, 1}}), small, "gap").ok());
}

TEST_CASE("descent drops irrelevant and sheaf-zero components") {
  const TorsionExample q = quadric_cone_example();
  const DescentResult f = descent_filter(q.components, q.setup);
  CHECK(f.kept.size() == 1);  // the maximal ideal does not contain B = <1>
  const DescentResult d = descend(q.components, q.e, q.setup, small);
  CHECK(d.kept.empty());
  CHECK(d.dropped.size() == 1);

  const GradingSetup p2 = GradingSetup::from_fan(standard_fans::projective_plane());
  const ModuleExpr s = ModuleExpr::free(FreeModuleSpec::standard(3, 1));
  const PrimaryComponent irrelevant = make_component(ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), {0, 1, 2}, p2, "m");
  CHECK_FALSE(irrelevant.relevant);
  CHECK(descent_filter({irrelevant}, p2).kept.empty());
}

TEST_CASE("sheafification zero and its control") {
  for (const TorsionExample& ex : {quadric_cone_example(), z_graded_4var_example()}) {
    CHECK(sheafification_zero(ex.e, ex.setup, small).ok());
    const ModuleExpr s = ModuleExpr::free(FreeModuleSpec::standard(ex.setup.num_vars(), 1));
    CHECK(sheafification_zero(s, ex.setup, small).status == VerdictStatus::Failed);
  }
}

TEST_CASE("primes by dimension") {
  const GradingSetup p2 = GradingSetup::from_fan(standard_fans::projective_plane());
  CHECK(primes_of_dimension_at_most(p2, 0) == std::vector<VarSet>{{0, 1}, {0, 2}, {1, 2}});
}
