// SPDX-License-Identifier: Apache-2.0

#include "toricdec/examples.hpp"

#include <sstream>

namespace toricdec {

namespace {

Monomial mono(std::int64_t coef, IntVector exponent) { return {Rational(coef), std::move(exponent)}; }
Monomial zero() { return {}; }

IntVector e(std::size_t n, std::size_t i) {
  IntVector v(n, 0);
  v[i] = 1;
  return v;
}

IntVector add(IntVector a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

std::string primes_string(const std::vector<FineAssociatedPrime>& primes) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < primes.size(); ++i) os << (i ? ", " : "") << varset_string(primes[i].prime);
  os << '}';
  return os.str();
}

Verdict expect_primes(const std::string& check, const std::vector<FineAssociatedPrime>& got,
                      const std::vector<VarSet>& want) {
  std::vector<VarSet> primes;
  for (const auto& p : got) primes.push_back(p.prime);
  if (primes == want) return Verdict::verified(check, primes_string(got));
  return Verdict::failed(check, got.empty() ? IntVector{} : got.front().degree, "found " + primes_string(got));
}

}  // namespace

P2CubicExample p2_cubic_example() {
  constexpr std::size_t r = 3;
  const IntVector z(r, 0), e0 = e(r, 0), e1 = e(r, 1), e2 = e(r, 2);
  GradingSetup setup = GradingSetup::from_fan(standard_fans::projective_plane());

  const FreeModuleSpec target(r, {e0, z});
  const FreeModuleSpec source(r, {add(e0, e1), add(e0, e2)});
  MonomialMatrix a(source, target, {{mono(1, e1), mono(1, e2)}, {mono(1, add(e0, e1)), zero()}});

  // b[nu] : S(-s_0) + S(-s_1) -> target, a_factor[nu] : source -> that module.
  const FreeModuleSpec mid0(r, {e0, e0}), mid1(r, {e0, e1}), mid2(r, {e0, e2});
  MonomialMatrix b0(mid0, target, {{mono(1, z), zero()}, {zero(), mono(1, e0)}});
  MonomialMatrix a0(source, mid0, {{mono(1, e1), mono(1, e2)}, {mono(1, e1), zero()}});
  MonomialMatrix b1(mid1, target, {{mono(1, z), zero()}, {zero(), mono(1, e1)}});
  MonomialMatrix a1(source, mid1, {{mono(1, e1), mono(1, e2)}, {mono(1, e0), zero()}});
  MonomialMatrix b2(mid2, target, {{mono(1, z), zero()}, {mono(1, e0), mono(1, e2)}});
  MonomialMatrix a2(source, mid2, {{mono(1, e1), mono(1, e2)}, {zero(), mono(-1, e0)}});

  ModuleExpr ambient = ModuleExpr::free(target);
  ModuleExpr f = ModuleExpr::cokernel(a);
  std::array<MonomialMatrix, 3> b{b0, b1, b2};
  std::array<ModuleExpr, 3> comps{submodule_in(f, ModuleExpr::image(b0)), submodule_in(f, ModuleExpr::image(b1)),
                                  submodule_in(f, ModuleExpr::image(b2))};
  std::array<ModuleExpr, 3> quots{ModuleExpr::quotient(f, comps[0]), ModuleExpr::quotient(f, comps[1]),
                                  ModuleExpr::quotient(f, comps[2])};
  return {std::move(setup), ambient, a, f, b, {a0, a1, a2}, comps, quots};
}

DecompositionReport p2_cubic_report(const CheckOptions& options) {
  const P2CubicExample ex = p2_cubic_example();
  const std::size_t r = 3;
  DecompositionReport rep;
  rep.title = "cubic support sheaf on P^2: F = coker A, A = " + ex.a.to_string();
  rep.target = ex.f.to_string();
  rep.box = options.box;
  rep.k_max = options.k_max;
  for (std::size_t nu = 0; nu < 3; ++nu)
    rep.components.push_back({"F" + std::to_string(nu), {nu}, ex.setup.relevant({nu}), true, "image of B" + std::to_string(nu)});

  auto& v = rep.verdicts;
  for (std::size_t nu = 0; nu < 3; ++nu) {
    const std::string check = "B" + std::to_string(nu) + " * A" + std::to_string(nu) + " = A";
    const MonomialMatrix prod = ex.b[nu] * ex.a_factor[nu];
    if (prod == ex.a)
      v.push_back(Verdict::verified(check, "exact monomial matrix identity"));
    else
      v.push_back(Verdict::failed(check, {}, "product is " + prod.to_string()));
  }

  const auto shifts = equivariant_shifts(ex.a.entries(), r);
  v.push_back(shifts ? Verdict::verified("A is equivariant", "degree shifts exist")
                     : Verdict::failed("A is equivariant", {}, "no consistent shifts"));
  const FittingIdeal fitt = fitting_ideal(ex.a, 0);
  const MonomialIdeal lines(r, {{1, 1, 1}});
  if (fitt.monomial && fitt.ideal == lines)
    v.push_back(Verdict::verified("Fitt_0(A) = <x0*x1*x2>", "support is the union of the coordinate lines"));
  else
    v.push_back(Verdict::failed("Fitt_0(A) = <x0*x1*x2>", {}, "got " + fitt.ideal.to_string()));

  v.push_back(intersect_check({ex.components[0], ex.components[1], ex.components[2]}, ModuleExpr::zero(ex.f),
                              options, "F0 n F1 n F2 = 0"));
  for (std::size_t nu = 0; nu < 3; ++nu) {
    for (auto& x : verify_primary(ex.components[nu], ex.f, {nu}, options, ex.b[nu])) {
      x.check = "F" + std::to_string(nu) + " primary: " + x.check;
      v.push_back(std::move(x));
    }
  }
  v.push_back(expect_primes("Ass(F) = three lines", ass_fine(ex.f, options), {{0}, {1}, {2}}));
  for (std::size_t nu = 0; nu < 3; ++nu)
    v.push_back(expect_primes("Ass(F/F" + std::to_string(nu) + ") = {L" + std::to_string(nu) + "}",
                              ass_fine(ex.quotients[nu], options), {{nu}}));
  for (std::size_t nu = 0; nu < 3; ++nu) {
    IntVector c(r, 1);
    c[nu] = 0;
    const ModuleExpr gap = gap_module(ModuleExpr::zero(ex.f), ex.f, MonomialIdeal(r, {c}));
    v.push_back(equality_check(ex.components[nu], gap, options,
                               "F" + std::to_string(nu) + " = gap of 0 along " + monomial_string(c)));
  }
  v.push_back(equality_check(dimension_gap_module(ModuleExpr::zero(ex.f), ex.f, ex.setup, 0), ModuleExpr::zero(ex.f),
                             options, "no zero-dimensional torsion in F"));

  // Hilbert functions by class degree.
  rep.columns = {"F", "F/F0", "F/F1", "F/F2"};
  std::vector<std::int64_t> h(static_cast<std::size_t>(options.box) + 1, 0);
  std::vector<std::array<std::int64_t, 3>> hq(h.size(), {0, 0, 0});
  for (const auto& a : degree_box(IntVector(r, 0), options.box)) {
    const auto d = static_cast<std::size_t>(total_degree(a));
    h[d] += static_cast<std::int64_t>(evaluate(ex.f, a).dim());
    for (std::size_t nu = 0; nu < 3; ++nu) hq[d][nu] += static_cast<std::int64_t>(evaluate(ex.quotients[nu], a).dim());
  }
  bool hilbert_ok = true;
  for (std::size_t d = 0; d < h.size(); ++d) {
    rep.table.push_back({{static_cast<std::int64_t>(d)}, {h[d], hq[d][0], hq[d][1], hq[d][2]}});
    hilbert_ok = hilbert_ok && h[d] == 3 * static_cast<std::int64_t>(d) + 1;
  }
  if (hilbert_ok)
    v.push_back(Verdict::verified("Hilbert function of F is 3d + 1", "class degrees 0.." + std::to_string(options.box)));
  else
    v.push_back(Verdict::failed("Hilbert function of F is 3d + 1", {}, "see table"));
  return rep;
}

TorsionExample quadric_cone_example() {
  constexpr std::size_t r = 2;
  GradingSetup setup = GradingSetup::from_fan(standard_fans::quadric_cone());
  const FreeModuleSpec target(r, {{1, 0}});
  const FreeModuleSpec source(r, {{2, 0}, {1, 1}});
  MonomialMatrix m(source, target, {{mono(1, {1, 0}), mono(1, {0, 1})}});
  ModuleExpr e = ModuleExpr::cokernel(m);
  std::vector<PrimaryComponent> comps{make_component(ModuleExpr::zero(e), {0, 1}, setup, "0")};
  return {std::move(setup), e, std::move(comps)};
}

TorsionExample z_graded_4var_example() {
  constexpr std::size_t r = 4;
  GradingSetup setup =
      GradingSetup::explicit_grading(r, IntMatrix::from_rows({{1, -1, -1, 1}}), {}, {IntVector(r, 0)});
  const IntVector z(r, 0);
  const FreeModuleSpec ring(r, {z});
  MonomialMatrix by_x0(FreeModuleSpec(r, {e(r, 0)}), ring, {{mono(1, e(r, 0))}});
  MonomialMatrix ideal(FreeModuleSpec(r, {{2, 0, 0, 0}, e(r, 1), e(r, 2), e(r, 3)}), ring,
                       {{mono(1, {2, 0, 0, 0}), mono(1, e(r, 1)), mono(1, e(r, 2)), mono(1, e(r, 3))}});
  ModuleExpr e_mod = ModuleExpr::quotient(ModuleExpr::image(by_x0), ModuleExpr::image(ideal));
  std::vector<PrimaryComponent> comps{make_component(ModuleExpr::zero(e_mod), {0, 1, 2, 3}, setup, "0")};
  return {std::move(setup), e_mod, std::move(comps)};
}

DecompositionReport torsion_report(const std::string& title, const TorsionExample& ex, const CheckOptions& options) {
  DecompositionReport rep;
  rep.title = title;
  rep.target = ex.e.to_string();
  rep.box = options.box;
  rep.k_max = options.k_max;
  auto& v = rep.verdicts;
  const std::size_t r = ex.setup.num_vars();

  v.push_back(sheafification_zero(ex.e, ex.setup, options));
  const Verdict control = sheafification_zero(ModuleExpr::free(FreeModuleSpec::standard(r, 1)), ex.setup, options);
  if (control.status == VerdictStatus::Failed)
    v.push_back(Verdict::verified("control: S does not sheafify to zero", control.witness));
  else
    v.push_back(Verdict::failed("control: S does not sheafify to zero", {}, control.label()));

  for (const auto& c : ex.components)
    for (auto x : verify_primary(c.module, ex.e, c.prime, options)) {
      x.check = "component " + c.label + " primary: " + x.check;
      v.push_back(std::move(x));
    }

  const MonomialIdeal maximal = MonomialIdeal::variables(r, [&] {
    VarSet all;
    for (std::size_t i = 0; i < r; ++i) all.push_back(i);
    return all;
  }());
  v.push_back(equality_check(gap_module(ModuleExpr::zero(ex.e), ex.e, maximal), ex.e, options,
                             "E is torsion for the maximal ideal"));

  const DescentResult filtered = descent_filter(ex.components, ex.setup);
  const DescentResult descended = descend(ex.components, ex.e, ex.setup, options);
  for (const auto& c : ex.components) {
    ComponentSummary s{c.label, c.prime, c.relevant, false, {}};
    for (const auto& k : descended.kept)
      if (k.label == c.label) s.kept = true;
    for (const auto& [d, why] : descended.dropped)
      if (d.label == c.label) s.note = why;
    rep.components.push_back(std::move(s));
  }
  std::ostringstream charts;
  charts << filtered.kept.size() << " component(s) pass the relevance filter; " << descended.non_free_charts.size()
         << " chart(s) without invertible functions in every degree";
  if (descended.kept.empty())
    v.push_back(Verdict::verified("descended component list is empty", charts.str()));
  else
    v.push_back(Verdict::failed("descended component list is empty", {}, std::to_string(descended.kept.size()) + " kept",
                                charts.str()));
  return rep;
}

}  // namespace toricdec
