// SPDX-License-Identifier: Apache-2.0

#include "toricdec/engine.hpp"

#include <algorithm>
#include <mutex>

namespace toricdec {

namespace {

IntVector add(const IntVector& a, const IntVector& b, std::int64_t k = 1) {
  if (a.size() != b.size()) throw std::invalid_argument("degree of wrong length");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + k * b[i];
  return out;
}

Subspace present_space(const FreeModuleSpec& spec, const IntVector& a) {
  return Subspace::coordinate(spec.present(a));
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

std::int64_t bound_from(const std::vector<IntVector>& support, const IntVector& a, const IntVector& c) {
  std::int64_t k = 0;
  for (const auto& s : support)
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] > 0 && !is_neg_inf(s[i])) k = std::max(k, ceil_div(s[i] - a[i], c[i]));
  return k;
}

Subquotient compute(const ModuleExpr& e, const IntVector& a) {
  const std::size_t n = e.ambient().rank();
  switch (e.kind()) {
    case NodeKind::Free:
      return {present_space(e.ambient(), a), Subspace(n)};
    case NodeKind::Image: {
      const RatMatrix m = e.matrix().coefficients();
      if (e.children().empty()) return {image(m, present_space(e.matrix().source(), a)), Subspace(n)};
      const Subquotient src = evaluate(e.children().front(), a);
      return {image(m, src.span), image(m, src.relations)};
    }
    case NodeKind::Kernel: {
      const RatMatrix m = e.matrix().coefficients();
      const Subspace target =
          e.children().empty() ? Subspace(m.rows()) : evaluate(e.children().front(), a).span;
      return {preimage(m, present_space(e.matrix().source(), a), target), Subspace(n)};
    }
    case NodeKind::Cokernel: {
      const RatMatrix m = e.matrix().coefficients();
      return {present_space(e.ambient(), a), image(m, present_space(e.matrix().source(), a))};
    }
    case NodeKind::Intersection: {
      std::vector<Subquotient> parts;
      Subspace rel(n);
      for (const auto& c : e.children()) {
        parts.push_back(evaluate(c, a));
        rel = rel + parts.back().relations;
      }
      Subspace span = parts.front().span + rel;
      for (std::size_t i = 1; i < parts.size(); ++i) span = span.intersect(parts[i].span + rel);
      return {span, rel};
    }
    case NodeKind::Sum: {
      Subspace span(n), rel(n);
      for (const auto& c : e.children()) {
        const Subquotient p = evaluate(c, a);
        span = span + p.span;
        rel = rel + p.relations;
      }
      return {span + rel, rel};
    }
    case NodeKind::Quotient: {
      const Subquotient base = evaluate(e.children()[0], a);
      const Subquotient by = evaluate(e.children()[1], a);
      return {base.span, base.relations + by.span.intersect(base.span)};
    }
    case NodeKind::Zero: {
      const Subquotient of = evaluate(e.children().front(), a);
      return {of.relations, of.relations};
    }
    case NodeKind::Colon:
    case NodeKind::Saturation: {
      const IntVector& c = e.exponent();
      const std::int64_t k = e.kind() == NodeKind::Colon ? 1 : bound_from(e.support_shifts(), a, c);
      const IntVector b = add(a, c, k);
      const Subquotient outer = evaluate(e.children()[1], a);
      const Subquotient inner = evaluate(e.children()[0], b);
      const Subquotient outer_b = evaluate(e.children()[1], b);
      return {outer.span.intersect(inner.span + outer_b.relations), outer.relations};
    }
    case NodeKind::Shift:
      return evaluate(e.children().front(), add(a, e.exponent()));
  }
  throw std::logic_error("evaluate: unknown node");
}

std::vector<RatVector> restrict_rows(const std::vector<RatVector>& rows, const std::vector<std::size_t>& coords) {
  std::vector<RatVector> out;
  for (const auto& r : rows) {
    RatVector v(coords.size());
    for (std::size_t k = 0; k < coords.size(); ++k) v[k] = r[coords[k]];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Subquotient evaluate(const ModuleExpr& expr, const IntVector& a) {
  if (a.size() != expr.nvars()) throw std::invalid_argument("evaluate: degree of wrong length");
  const auto& node = expr.node();
  {
    std::shared_lock lock(node.cache_mutex);
    if (auto it = node.cache.find(a); it != node.cache.end()) return it->second;
  }
  Subquotient value = compute(expr, a);
  std::unique_lock lock(node.cache_mutex);
  return node.cache.try_emplace(a, std::move(value)).first->second;
}

GradedPiece piece(const ModuleExpr& expr, const IntVector& a) {
  GradedPiece p;
  p.degree = a;
  p.full = evaluate(expr, a);
  p.full_basis = complement_basis(p.full.span, p.full.relations);
  const auto& spec = expr.ambient();
  const auto mask = spec.present(a);
  std::vector<std::size_t> coords;
  for (std::size_t g = 0; g < spec.rank(); ++g) {
    if (!mask[g]) continue;
    coords.push_back(g);
    IntVector exp(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) exp[i] = a[i] - spec.shifts[g][i];
    p.labels.push_back({g, std::move(exp)});
  }
  p.span = restrict_rows(p.full.span.basis(), coords);
  p.relations = restrict_rows(p.full.relations.basis(), coords);
  p.basis = restrict_rows(p.full_basis, coords);
  return p;
}

RatMatrix mult_map(const ModuleExpr& expr, const IntVector& a, const IntVector& c) {
  for (auto x : c)
    if (x < 0) throw std::invalid_argument("mult_map: exponent must be nonnegative");
  const GradedPiece src = piece(expr, a);
  const GradedPiece dst = piece(expr, add(a, c));
  RatMatrix m(dst.dim(), src.dim());
  for (std::size_t j = 0; j < src.full_basis.size(); ++j) {
    const RatVector coords = coordinates_modulo(src.full_basis[j], dst.full_basis, dst.full.relations);
    for (std::size_t i = 0; i < coords.size(); ++i) m(i, j) = coords[i];
  }
  return m;
}

std::int64_t stabilization_bound(const ModuleExpr& expr, const IntVector& a, const IntVector& c) {
  if (a.size() != expr.nvars() || c.size() != expr.nvars())
    throw std::invalid_argument("stabilization_bound: vector of wrong length");
  return bound_from(expr.support_shifts(), a, c);
}

ChartPiece localized_piece(const ModuleExpr& expr, const IntVector& a, const IntVector& c, std::int64_t k_max) {
  if (k_max < 0) throw std::invalid_argument("localized_piece: negative k_max");
  for (auto x : c)
    if (x < 0) throw std::invalid_argument("localized_piece: exponent must be nonnegative");
  ChartPiece out;
  out.bound = stabilization_bound(expr, a, c);
  if (out.bound + 2 > k_max) {
    out.k_star = k_max;
    out.piece = piece(expr, add(a, c, k_max));
    out.status = ChartStatus::Inconclusive;
    return out;
  }
  // Bijectivity of each step k -> k+1 up to bound + 2.
  const std::int64_t last = out.bound + 2;
  std::vector<bool> bijective(static_cast<std::size_t>(last), false);
  for (std::int64_t k = 0; k < last; ++k) {
    const RatMatrix t = mult_map(expr, add(a, c, k), c);
    bijective[static_cast<std::size_t>(k)] = t.rows() == t.cols() && rank(t) == t.cols();
  }
  std::int64_t k_star = last;
  while (k_star > 0 && bijective[static_cast<std::size_t>(k_star - 1)]) --k_star;
  if (k_star > out.bound) throw std::logic_error("localized_piece: transitions past the stabilization bound");
  out.k_star = k_star;
  out.piece = piece(expr, add(a, c, k_star));
  out.status = ChartStatus::Stable;
  out.transitions_bijective = true;
  return out;
}

ChartPiece chart_piece(const ModuleExpr& expr, const GradingSetup& setup, std::size_t cone_index,
                       const IntVector& m, std::int64_t k_max) {
  const Fan& fan = setup.fan();
  if (cone_index >= fan.max_cones().size()) throw std::out_of_range("chart_piece: unknown cone");
  if (m.size() != fan.ambient_dim()) throw std::invalid_argument("chart_piece: character of wrong length");
  return localized_piece(expr, fan.pairing(m), setup.chart_monomials()[cone_index], k_max);
}

FittingIdeal fitting_ideal(const PolyMatrix& m, std::size_t nvars, std::size_t k, std::size_t bound) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  if (rows > bound || cols > bound)
    throw SizeBoundExceeded("fitting_ideal: matrix exceeds the minor expansion bound");
  FittingIdeal out;
  out.ideal = MonomialIdeal(nvars);
  if (k >= rows) {
    out.ideal = MonomialIdeal::unit(nvars);
    out.generators.push_back(Polynomial::constant(nvars, 1));
    return out;
  }
  const std::size_t size = rows - k;
  if (size > cols) return out;
  std::vector<IntVector> gens;
  for (auto& p : minors(m, size, nvars)) {
    if (p.is_zero()) continue;
    if (p.is_monomial())
      gens.push_back(p.terms().begin()->first);
    else
      out.monomial = false;
    out.generators.push_back(std::move(p));
  }
  if (out.monomial) out.ideal = MonomialIdeal(nvars, std::move(gens));
  return out;
}

FittingIdeal fitting_ideal(const MonomialMatrix& m, std::size_t k, std::size_t bound) {
  return fitting_ideal(m.polynomials(), m.nvars(), k, bound);
}

std::vector<IntVector> degree_box(const IntVector& lower, std::int64_t total) {
  std::vector<IntVector> offsets;
  if (total < 0) return {};
  const std::size_t n = lower.size();
  IntVector cur(n, 0);
  auto rec = [&](auto& self, std::size_t i, std::int64_t left) -> void {
    if (i == n) {
      offsets.push_back(cur);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      cur[i] = v;
      self(self, i + 1, left - v);
    }
    cur[i] = 0;
  };
  rec(rec, 0, total);
  std::sort(offsets.begin(), offsets.end(), grlex_less);
  for (auto& o : offsets)
    for (std::size_t i = 0; i < n; ++i) o[i] += lower[i];
  return offsets;
}

IntVector box_lower(const ModuleExpr& expr) {
  const auto& spec = expr.ambient();
  if (spec.shifts.empty()) return IntVector(spec.nvars, 0);
  IntVector low = spec.shifts.front();
  for (const auto& s : spec.shifts)
    for (std::size_t i = 0; i < low.size(); ++i) low[i] = std::min(low[i], s[i]);
  return low;
}

std::string to_string(ChartStatus status) {
  return status == ChartStatus::Stable ? "stable" : "inconclusive";
}

}  // namespace toricdec
