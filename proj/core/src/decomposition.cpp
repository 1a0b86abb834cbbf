// SPDX-License-Identifier: Apache-2.0

#include "toricdec/decomposition.hpp"

#include "toricdec/parallel.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace toricdec {

std::optional<Shifts> equivariant_shifts(const MonomialGrid& grid, std::size_t nvars) {
  const std::size_t rows = grid.size();
  const std::size_t cols = rows ? grid.front().size() : 0;
  std::vector<std::optional<IntVector>> a(rows), b(cols);
  auto exponent = [&](std::size_t i, std::size_t j) -> const IntVector& {
    const auto& e = grid[i][j].exponent;
    if (e.size() != nvars) throw std::invalid_argument("equivariant_shifts: exponent of wrong length");
    return e;
  };
  for (std::size_t root = 0; root < rows; ++root) {
    if (a[root]) continue;
    a[root] = IntVector(nvars, 0);
    // Nodes: rows as i, columns as rows + j.
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t node = queue.front();
      queue.pop_front();
      if (node < rows) {
        const std::size_t i = node;
        for (std::size_t j = 0; j < cols; ++j) {
          if (grid[i][j].is_zero()) continue;
          IntVector want = *a[i];
          const auto& e = exponent(i, j);
          for (std::size_t k = 0; k < nvars; ++k) want[k] += e[k];
          if (!b[j]) {
            b[j] = want;
            queue.push_back(rows + j);
          } else if (*b[j] != want) {
            return std::nullopt;
          }
        }
      } else {
        const std::size_t j = node - rows;
        for (std::size_t i = 0; i < rows; ++i) {
          if (grid[i][j].is_zero()) continue;
          IntVector want = *b[j];
          const auto& e = exponent(i, j);
          for (std::size_t k = 0; k < nvars; ++k) want[k] -= e[k];
          if (!a[i]) {
            a[i] = want;
            queue.push_back(i);
          } else if (*a[i] != want) {
            return std::nullopt;
          }
        }
      }
    }
  }
  Shifts out;
  for (auto& x : a) out.target.push_back(std::move(*x));
  for (auto& x : b) out.source.push_back(x ? std::move(*x) : IntVector(nvars, 0));
  return out;
}

namespace {

PolyMatrix to_polynomials(const MonomialGrid& grid, std::size_t nvars) {
  PolyMatrix out;
  for (const auto& row : grid) {
    std::vector<Polynomial> r;
    for (const auto& e : row)
      r.push_back(e.is_zero() ? Polynomial(nvars) : Polynomial::monomial(e.coef, e.exponent));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::optional<Polynomial> non_monomial_minor(const MonomialGrid& grid, std::size_t nvars, std::size_t bound) {
  const std::size_t rows = grid.size();
  const std::size_t cols = rows ? grid.front().size() : 0;
  if (rows > bound || cols > bound)
    throw SizeBoundExceeded("minors_all_monomial: matrix exceeds the minor expansion bound");
  const PolyMatrix m = to_polynomials(grid, nvars);
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k)
    for (auto& p : minors(m, k, nvars))
      if (!p.is_zero() && !p.is_monomial()) return std::move(p);
  return std::nullopt;
}

bool minors_all_monomial(const MonomialGrid& grid, std::size_t nvars, std::size_t bound) {
  return !non_monomial_minor(grid, nvars, bound);
}

ModuleExpr gap_module(const ModuleExpr& n, const ModuleExpr& e, const MonomialIdeal& j) {
  if (!(n.ambient() == e.ambient())) throw AmbientMismatch("gap_module: N and E live in different ambients");
  if (j.nvars() != e.nvars()) throw std::invalid_argument("gap_module: ideal in the wrong ring");
  if (j.is_zero()) return e;
  std::vector<ModuleExpr> parts;
  for (const auto& g : j.generators()) parts.push_back(ModuleExpr::saturation(n, e, g));
  return parts.size() == 1 ? parts.front() : ModuleExpr::intersection(std::move(parts));
}

std::vector<VarSet> primes_of_dimension_at_most(const GradingSetup& setup, std::int64_t d) {
  const std::size_t r = setup.num_vars();
  std::vector<VarSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    VarSet p;
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (std::uint64_t{1} << i)) p.push_back(i);
    if (setup.dimension() - static_cast<std::int64_t>(p.size()) > d) continue;
    if (setup.relevant(p)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const VarSet& x, const VarSet& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

ModuleExpr dimension_gap_module(const ModuleExpr& n, const ModuleExpr& e, const GradingSetup& setup,
                                std::int64_t d) {
  const std::size_t r = setup.num_vars();
  std::vector<MonomialIdeal> ideals;
  for (const auto& p : primes_of_dimension_at_most(setup, d)) ideals.push_back(MonomialIdeal::variables(r, p));
  return gap_module(n, e, intersect(ideals, r));
}

Verdict sheafification_zero(const ModuleExpr& expr, const GradingSetup& setup, const CheckOptions& options) {
  const std::string check = "sheafification zero";
  if (expr.nvars() != setup.num_vars()) throw std::invalid_argument("sheafification_zero: ring mismatch");
  const auto charts = setup.chart_monomials();
  const auto points = setup.degree_zero_points(options.box);
  const std::size_t total = charts.size() * points.size();
  const auto results = parallel_map<ChartPiece>(total, options.jobs, [&](std::size_t t) {
    return localized_piece(expr, points[t % points.size()], charts[t / points.size()], options.k_max);
  });
  bool inconclusive = false;
  for (std::size_t t = 0; t < total; ++t) {
    const auto& cp = results[t];
    if (cp.status == ChartStatus::Inconclusive) {
      inconclusive = true;
      continue;
    }
    if (cp.dim() > 0) {
      std::ostringstream w;
      w << "chart " << monomial_string(charts[t / points.size()]) << " has a localized piece of dim " << cp.dim();
      return Verdict::failed(check, points[t % points.size()], w.str(), "sheafification is nonzero");
    }
  }
  std::ostringstream detail;
  detail << charts.size() << " chart(s) x " << points.size() << " class-zero degree(s)";
  if (inconclusive) return Verdict::inconclusive(check, detail.str() + "; k_max exhausted");
  return Verdict::verified(check, detail.str());
}

PrimaryComponent make_component(ModuleExpr q, VarSet prime, const GradingSetup& setup, std::string label) {
  std::sort(prime.begin(), prime.end());
  const bool rel = setup.relevant(prime);
  return {std::move(q), std::move(prime), rel, std::move(label)};
}

DescentResult descent_filter(const std::vector<PrimaryComponent>& components, const GradingSetup& setup) {
  DescentResult out;
  for (const auto& c : components) {
    if (setup.relevant(c.prime))
      out.kept.push_back(c);
    else
      out.dropped.emplace_back(c, "prime contains the irrelevant ideal");
  }
  return out;
}

DescentResult descend(const std::vector<PrimaryComponent>& components, const ModuleExpr& e,
                      const GradingSetup& setup, const CheckOptions& options) {
  DescentResult filtered = descent_filter(components, setup);
  DescentResult out;
  out.dropped = std::move(filtered.dropped);
  for (auto& c : filtered.kept) {
    const Verdict v = sheafification_zero(ModuleExpr::quotient(e, c.module), setup, options);
    if (v.ok())
      out.dropped.emplace_back(std::move(c), "quotient sheafifies to zero");
    else
      out.kept.push_back(std::move(c));
  }
  for (const auto& chart : setup.chart_monomials())
    if (!setup.free_on_chart(chart)) out.non_free_charts.push_back(chart);
  return out;
}

namespace {

IntVector unit_vector(std::size_t n, std::size_t i, std::int64_t scale = 1) {
  IntVector e(n, 0);
  e[i] = scale;
  return e;
}

IntVector plus(const IntVector& a, const IntVector& b) {
  IntVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

struct PrimaryProbe {
  std::size_t dim = 0;
  std::string torsion_failure;
  std::string injectivity_failure;
};

}  // namespace

std::vector<Verdict> verify_primary(const ModuleExpr& q, const ModuleExpr& e, const VarSet& prime,
                                    const CheckOptions& options, const std::optional<MonomialMatrix>& presentation) {
  if (!(q.ambient() == e.ambient())) throw AmbientMismatch("verify_primary: Q and E live in different ambients");
  const std::size_t r = e.nvars();
  const ModuleExpr quot = ModuleExpr::quotient(e, q);
  const auto degrees = degree_box(box_lower(e), options.box);
  std::vector<bool> in_prime(r, false);
  for (auto i : prime) in_prime.at(i) = true;

  const auto probes = parallel_map<PrimaryProbe>(degrees.size(), options.jobs, [&](std::size_t t) {
    const IntVector& a = degrees[t];
    PrimaryProbe p;
    const Subquotient here = evaluate(quot, a);
    p.dim = here.dim();
    if (p.dim == 0) return p;
    for (std::size_t i = 0; i < r; ++i) {
      if (in_prime[i]) {
        const IntVector step = unit_vector(r, i);
        const std::int64_t k = std::max<std::int64_t>(1, stabilization_bound(quot, a, step));
        const Subquotient far = evaluate(quot, plus(a, unit_vector(r, i, k)));
        for (const auto& v : here.span.basis())
          if (!far.relations.contains(v)) {
            p.torsion_failure = "x" + std::to_string(i) + "^" + std::to_string(k) + " does not kill " + to_string(v);
            break;
          }
      } else {
        const Subquotient next = evaluate(quot, plus(a, unit_vector(r, i)));
        if (!(here.span.intersect(next.relations) == here.relations)) {
          p.injectivity_failure = "x" + std::to_string(i) + " has a kernel";
          break;
        }
      }
      if (!p.torsion_failure.empty()) break;
    }
    return p;
  });

  std::vector<Verdict> out;
  const std::string tag = " " + varset_string(prime);
  bool nonzero = false;
  std::optional<std::size_t> torsion_bad, inj_bad;
  for (std::size_t t = 0; t < degrees.size(); ++t) {
    nonzero = nonzero || probes[t].dim > 0;
    if (!torsion_bad && !probes[t].torsion_failure.empty()) torsion_bad = t;
    if (!inj_bad && !probes[t].injectivity_failure.empty()) inj_bad = t;
  }
  if (!nonzero)
    out.push_back(Verdict::failed("support" + tag, {}, "E/Q vanishes in the box", "support is empty, not V(P)"));
  else
    out.push_back(Verdict::verified("support" + tag, "E/Q is nonzero in the box"));
  if (torsion_bad)
    out.push_back(Verdict::failed("torsion" + tag, degrees[*torsion_bad], probes[*torsion_bad].torsion_failure));
  else
    out.push_back(Verdict::verified("torsion" + tag, "every element is killed by a power of each x_i, i in P"));
  if (inj_bad)
    out.push_back(Verdict::failed("nonzerodivisors" + tag, degrees[*inj_bad], probes[*inj_bad].injectivity_failure));
  else
    out.push_back(Verdict::verified("nonzerodivisors" + tag, "x_i, i not in P, injective on E/Q"));
  if (presentation) {
    const FittingIdeal fitt = fitting_ideal(*presentation, 0);
    const std::string check = "fitting support" + tag;
    if (!fitt.monomial) {
      out.push_back(Verdict::inconclusive(check, "zeroth Fitting ideal is not monomial"));
    } else {
      const MonomialIdeal rad = radical(fitt.ideal);
      if (rad == MonomialIdeal::variables(r, prime))
        out.push_back(Verdict::verified(check, "rad Fitt_0 = " + rad.to_string()));
      else
        out.push_back(Verdict::failed(check, {}, "rad Fitt_0 = " + rad.to_string()));
    }
  }
  return out;
}

std::vector<FineAssociatedPrime> ass_fine(const ModuleExpr& expr, const CheckOptions& options) {
  const std::size_t r = expr.nvars();
  if (r >= 20) throw SizeBoundExceeded("ass_fine: too many variables");
  const auto degrees = degree_box(box_lower(expr), options.box);
  using Found = std::vector<FineAssociatedPrime>;
  const auto per_degree = parallel_map<Found>(degrees.size(), options.jobs, [&](std::size_t t) {
    const IntVector& a = degrees[t];
    Found found;
    const Subquotient here = evaluate(expr, a);
    if (here.dim() == 0) return found;
    std::vector<Subspace> killed(r);
    for (std::size_t i = 0; i < r; ++i) killed[i] = evaluate(expr, plus(a, unit_vector(r, i))).relations;
    for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
      Subspace w = here.span;
      IntVector outside(r, 0);
      VarSet p;
      for (std::size_t i = 0; i < r; ++i) {
        if (mask & (1u << i)) {
          w = w.intersect(killed[i]);
          p.push_back(i);
        } else {
          outside[i] = 1;
        }
      }
      if (w.dim() <= here.relations.dim()) continue;
      const std::int64_t k = stabilization_bound(expr, a, outside);
      IntVector far = a;
      for (std::size_t i = 0; i < r; ++i) far[i] += k * outside[i];
      const Subspace torsion = here.span.intersect(evaluate(expr, far).relations);
      for (const auto& v : w.basis())
        if (!torsion.contains(v)) {
          found.push_back({p, a, v});
          break;
        }
    }
    return found;
  });
  std::map<VarSet, FineAssociatedPrime> first;
  for (const auto& f : per_degree)
    for (const auto& x : f) first.try_emplace(x.prime, x);
  std::vector<FineAssociatedPrime> out;
  for (auto& [p, x] : first) out.push_back(x);
  std::sort(out.begin(), out.end(), [](const FineAssociatedPrime& x, const FineAssociatedPrime& y) {
    return x.prime.size() != y.prime.size() ? x.prime.size() < y.prime.size() : x.prime < y.prime;
  });
  return out;
}

Verdict equality_check(const ModuleExpr& lhs, const ModuleExpr& rhs, const CheckOptions& options,
                       const std::string& check) {
  if (!(lhs.ambient() == rhs.ambient())) throw AmbientMismatch(check + ": sides live in different ambients");
  const auto degrees = degree_box(box_lower(lhs), options.box);
  const auto diffs = parallel_map<std::string>(degrees.size(), options.jobs, [&](std::size_t t) -> std::string {
    const Subquotient l = evaluate(lhs, degrees[t]);
    const Subquotient r = evaluate(rhs, degrees[t]);
    if (l == r) return {};
    std::ostringstream os;
    os << "dims " << l.dim() << " vs " << r.dim();
    for (const auto& v : l.span.basis())
      if (!r.span.contains(v)) return os.str() + "; " + to_string(v) + " only on the left";
    for (const auto& v : r.span.basis())
      if (!l.span.contains(v)) return os.str() + "; " + to_string(v) + " only on the right";
    return os.str() + "; relations differ";
  });
  for (std::size_t t = 0; t < degrees.size(); ++t)
    if (!diffs[t].empty()) return Verdict::failed(check, degrees[t], diffs[t]);
  return Verdict::verified(check, std::to_string(degrees.size()) + " degrees");
}

Verdict intersect_check(const std::vector<ModuleExpr>& components, const ModuleExpr& target,
                        const CheckOptions& options, const std::string& check) {
  return equality_check(ModuleExpr::intersection(components), target, options, check);
}

ModuleExpr submodule_in(const ModuleExpr& ambient_quotient, const ModuleExpr& sub) {
  return ModuleExpr::sum({sub, ModuleExpr::zero(ambient_quotient)});
}

}  // namespace toricdec
