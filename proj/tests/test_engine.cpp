// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include "toricdec/engine.hpp"
#include "toricdec/fan.hpp"
#include "toricdec/ishida.hpp"
#include "toricdec/parallel.hpp"

#include <doctest.h>

using namespace toricdec;

namespace {

Monomial mono(long c, IntVector e) { return {Rational(c), std::move(e)}; }

// x^e : S(-e) -> S in n variables
MonomialMatrix times(std::size_t n, const IntVector& e) {
  return MonomialMatrix(FreeModuleSpec(n, {e}), FreeModuleSpec::standard(n, 1), {{mono(1, e)}});
}

ModuleExpr ideal(std::size_t n, const std::vector<IntVector>& gens) {
  MonomialGrid row(1);
  for (const auto& g : gens) row[0].push_back(mono(1, g));
  return ModuleExpr::image(MonomialMatrix(FreeModuleSpec(n, gens), FreeModuleSpec::standard(n, 1), row));
}

std::size_t dim(const ModuleExpr& e, const IntVector& a) { return evaluate(e, a).dim(); }

const ModuleExpr S2 = ModuleExpr::free(FreeModuleSpec::standard(2, 1));

}  // namespace

TEST_CASE("free module pieces") {
  const ModuleExpr e = ModuleExpr::free(FreeModuleSpec(2, {{0, 0}, {1, 0}}));
  CHECK(dim(e, {0, 0}) == 1);
  CHECK(dim(e, {1, 2}) == 2);
  CHECK(dim(e, {-1, 0}) == 0);
  const GradedPiece p = piece(e, {1, 1});
  REQUIRE(p.labels.size() == 2);
  CHECK(p.labels[0].exponent == IntVector{1, 1});
  CHECK(p.labels[1].exponent == IntVector{0, 1});
}

TEST_CASE("images, kernels and cokernels of x") {
  const MonomialMatrix x = times(2, {1, 0});
  CHECK(dim(ModuleExpr::image(x), {0, 3}) == 0);
  CHECK(dim(ModuleExpr::image(x), {2, 3}) == 1);
  CHECK(dim(ModuleExpr::cokernel(x), {0, 3}) == 1);
  CHECK(dim(ModuleExpr::cokernel(x), {1, 0}) == 0);
  CHECK(dim(ModuleExpr::kernel(x), {4, 4}) == 0);
  // kernel of x modulo x*y: everything that x sends into <xy>, i.e. <y>
  const ModuleExpr k = ModuleExpr::kernel(x, ideal(2, {{1, 1}}));
  CHECK(dim(k, {3, 0}) == 0);
  CHECK(dim(k, {3, 1}) == 1);
}

TEST_CASE("intersection, sum, quotient and zero") {
  const ModuleExpr xs = ideal(2, {{1, 0}}), ys = ideal(2, {{0, 1}});
  const ModuleExpr cap = ModuleExpr::intersection({xs, ys});
  const ModuleExpr cup = ModuleExpr::sum({xs, ys});
  CHECK(dim(cap, {1, 0}) == 0);
  CHECK(dim(cap, {1, 1}) == 1);
  CHECK(dim(cup, {1, 0}) == 1);
  CHECK(dim(cup, {0, 0}) == 0);
  const ModuleExpr q = ModuleExpr::quotient(S2, cup);
  CHECK(dim(q, {0, 0}) == 1);
  CHECK(dim(q, {2, 0}) == 0);
  CHECK(dim(ModuleExpr::zero(q), {0, 0}) == 0);
}

TEST_CASE("colon, saturation and shift") {
  const ModuleExpr n = ideal(2, {{2, 1}});
  const ModuleExpr col = ModuleExpr::colon(n, S2, {1, 0});  // <x y>
  CHECK(dim(col, {1, 1}) == 1);
  CHECK(dim(col, {0, 1}) == 0);
  const ModuleExpr sat = ModuleExpr::saturation(n, S2, {1, 0});  // <y>
  CHECK(dim(sat, {0, 0}) == 0);
  CHECK(dim(sat, {0, 1}) == 1);
  CHECK(dim(sat, {7, 1}) == 1);
  const ModuleExpr sh = ModuleExpr::shift(S2, {1, 0});  // S(e_x)
  CHECK(dim(sh, {-1, 0}) == 1);
  CHECK(dim(sh, {-2, 0}) == 0);
}

TEST_CASE("mismatched ambients are rejected") {
  const ModuleExpr s3 = ModuleExpr::free(FreeModuleSpec::standard(2, 2));
  CHECK_THROWS_AS(ModuleExpr::intersection({S2, s3}), AmbientMismatch);
  CHECK_THROWS_AS(MonomialMatrix(FreeModuleSpec(2, {{1, 0}}), FreeModuleSpec::standard(2, 1), {{mono(1, {0, 1})}}),
                  std::invalid_argument);
}

TEST_CASE("rank plus nullity for maps of free modules") {
  // [x, y] : S(-e_x) + S(-e_y) -> S, and its kernel spanned by (y, -x)
  const MonomialMatrix m(FreeModuleSpec(2, {{1, 0}, {0, 1}}), FreeModuleSpec::standard(2, 1),
                         {{mono(1, {1, 0}), mono(1, {0, 1})}});
  const ModuleExpr src = ModuleExpr::free(m.source());
  for (const auto& a : degree_box({0, 0}, 6)) {
    const std::size_t k = dim(ModuleExpr::kernel(m), a), i = dim(ModuleExpr::image(m), a);
    CHECK(k + i == dim(src, a));
    CHECK(k == ((a[0] >= 1 && a[1] >= 1) ? 1u : 0u));
  }
}

TEST_CASE("multiplication maps commute") {
  const ModuleExpr e = ModuleExpr::cokernel(times(2, {1, 1}));
  const IntVector c{1, 0}, d{0, 1};
  for (const auto& a : degree_box({0, 0}, 4)) {
    const IntVector ac{a[0] + 1, a[1]}, ad{a[0], a[1] + 1};
    const RatMatrix cd = mult_map(e, ac, d) * mult_map(e, a, c);
    const RatMatrix dc = mult_map(e, ad, c) * mult_map(e, a, d);
    CHECK(cd == dc);
    CHECK(cd == mult_map(e, a, {1, 1}));
  }
}

TEST_CASE("localization along a monomial") {
  CHECK(stabilization_bound(S2, {-3, 0}, {1, 0}) == 3);
  const ChartPiece a = localized_piece(S2, {-2, 0}, {1, 0});
  CHECK(a.status == ChartStatus::Stable);
  CHECK(a.dim() == 1);
  CHECK(localized_piece(S2, {0, -1}, {1, 0}).dim() == 0);
  // S/<x> vanishes after inverting x
  const ModuleExpr q = ModuleExpr::cokernel(times(2, {1, 0}));
  CHECK(localized_piece(q, {0, 2}, {1, 0}).dim() == 0);
  CHECK(localized_piece(q, {0, 2}, {0, 1}).dim() == 1);
}

TEST_CASE("stabilization flags are honest") {
  const ChartPiece cp = localized_piece(S2, {-30, 0}, {1, 0}, 5);
  CHECK(cp.status == ChartStatus::Inconclusive);
  const ModuleExpr q = ModuleExpr::cokernel(times(2, {1, 0}));
  for (const auto& a : degree_box({-3, -3}, 6))
    for (const IntVector& c : {IntVector{1, 0}, IntVector{0, 1}, IntVector{1, 1}}) {
      const ChartPiece p = localized_piece(q, a, c, 4);
      if (p.status == ChartStatus::Stable) CHECK(p.transitions_bijective);
      CHECK((p.status == ChartStatus::Inconclusive) == (p.bound + 2 > 4));
    }
}

// h0(Omega(2)) on P2 from the Euler sequence: the kernel of the 6 x 9 matrix
// of (x0, x1, x2) : S(1)^3 -> S(2) on global sections.
TEST_CASE("one-forms on P2 against the Euler sequence") {
  std::vector<oracle::Vec> quad = oracle::monomials_up_to(3, 2);
  std::erase_if(quad, [](const oracle::Vec& v) { return oracle::total(v) != 2; });
  REQUIRE(quad.size() == 6);
  oracle::RatRows m(6, std::vector<oracle::Rat>(9));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      oracle::Vec v(3, 0);
      ++v[i];
      ++v[j];
      const auto row = std::find(quad.begin(), quad.end(), v) - quad.begin();
      m[static_cast<std::size_t>(row)][3 * i + j] = 1;
    }
  const std::size_t expected = 9 - oracle::rank(m);
  CHECK(expected == 3);

  const IshidaData d = build_ishida(standard_fans::projective_plane());
  std::size_t total = 0;
  for (const auto& a : degree_box({0, 0, 0}, 2))
    if (total_degree(a) == 2) total += dim(d.omega, a);
  CHECK(total == expected);
}

TEST_CASE("evaluation is thread safe and deterministic") {
  const IshidaData d = build_ishida(standard_fans::p1_x_p1());
  const auto box = degree_box({0, 0, 0, 0}, 4);
  const auto par = parallel_map<std::size_t>(box.size(), 8, [&](std::size_t i) { return dim(d.omega, box[i]); });
  for (std::size_t i = 0; i < box.size(); ++i) CHECK(par[i] == dim(d.omega, box[i]));
}

TEST_CASE("fitting ideals of monomial matrices") {
  const MonomialMatrix m(FreeModuleSpec(2, {{1, 0}, {0, 1}}), FreeModuleSpec::standard(2, 1),
                         {{mono(1, {1, 0}), mono(1, {0, 1})}});
  const FittingIdeal f = fitting_ideal(m, 0);
  CHECK(f.monomial);
  CHECK(f.ideal == MonomialIdeal(2, {{1, 0}, {0, 1}}));
}
