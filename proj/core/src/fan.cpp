// SPDX-License-Identifier: Apache-2.0

#include "toricdec/fan.hpp"

#include "toricdec/linear_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace toricdec {

std::int64_t inner(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner: dimension mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::string cone_string(const Cone& cone) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < cone.size(); ++i) {
    if (i) os << ',';
    os << cone[i];
  }
  os << '}';
  return os.str();
}

namespace {

struct Facet {
  RatVector normal;  // nonnegative on the cone
  Cone zero_set;     // global ray indices with <normal, ray> = 0
};

RatVector to_rational(const IntVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = static_cast<long>(v[i]);
  return r;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

std::size_t rational_rank(const std::vector<IntVector>& rays, const Cone& cone, std::size_t dim) {
  std::vector<RatVector> rows;
  for (auto i : cone) rows.push_back(to_rational(rays[i]));
  return rref(rows, dim).size();
}

// Supporting hyperplanes through d-1 independent generators, within the
// linear span of the cone. Enumeration is exponential in the generator count,
// which is fine for the <= 8 rays per cone this library targets.
std::vector<Facet> facets_of(const std::vector<IntVector>& rays, const Cone& cone, std::size_t dim) {
  std::vector<Facet> out;
  const std::size_t d = rational_rank(rays, cone, dim);
  if (d == 0) return out;
  const std::size_t k = d - 1;
  std::vector<bool> pick(cone.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  std::set<Cone> seen;
  do {
    Cone chosen;
    for (std::size_t i = 0; i < cone.size(); ++i)
      if (pick[i]) chosen.push_back(cone[i]);
    if (rational_rank(rays, chosen, dim) != k) continue;
    RatMatrix m(chosen.size(), dim);
    for (std::size_t r = 0; r < chosen.size(); ++r)
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = static_cast<long>(rays[chosen[r]][c]);
    RatVector normal;
    for (auto& cand : nullspace(m)) {
      bool nonzero = std::any_of(cone.begin(), cone.end(), [&](std::size_t i) {
        return dot(cand, to_rational(rays[i])) != 0;
      });
      if (nonzero) {
        normal = std::move(cand);
        break;
      }
    }
    if (normal.empty()) continue;
    int sign = 0;
    bool supporting = true;
    Cone zero;
    for (auto i : cone) {
      const Rational p = dot(normal, to_rational(rays[i]));
      if (p == 0) {
        zero.push_back(i);
        continue;
      }
      const int s = p > 0 ? 1 : -1;
      if (sign == 0) sign = s;
      if (s != sign) {
        supporting = false;
        break;
      }
    }
    if (!supporting || sign == 0) continue;
    if (sign < 0)
      for (auto& x : normal) x = -x;
    if (seen.insert(zero).second) out.push_back({std::move(normal), std::move(zero)});
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

Cone intersect_cones(const Cone& a, const Cone& b) {
  Cone out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Cone> faces_from_facets(const Cone& cone, const std::vector<Facet>& facets) {
  std::set<Cone> faces{cone};
  std::vector<Cone> frontier{cone};
  while (!frontier.empty()) {
    std::vector<Cone> next;
    for (const auto& f : frontier)
      for (const auto& facet : facets) {
        Cone g = intersect_cones(f, facet.zero_set);
        if (faces.insert(g).second) next.push_back(std::move(g));
      }
    frontier = std::move(next);
  }
  return {faces.begin(), faces.end()};
}

bool in_cone(const std::vector<IntVector>& rays, const Cone& cone, const std::vector<Facet>& facets,
             const IntVector& v, std::size_t dim) {
  std::vector<RatVector> rows;
  for (auto i : cone) rows.push_back(to_rational(rays[i]));
  const Subspace span = Subspace::span(dim, rows);
  const RatVector rv = to_rational(v);
  if (!span.contains(rv)) return false;
  for (const auto& f : facets)
    if (dot(f.normal, rv) < 0) return false;
  return true;
}

IntVector interior_point(const std::vector<IntVector>& rays, const Cone& cone, std::size_t dim) {
  IntVector p(dim, 0);
  for (auto i : cone)
    for (std::size_t c = 0; c < dim; ++c) p[c] += rays[i][c];
  return p;
}

}  // namespace

Fan::Fan(std::size_t ambient_dim, std::vector<IntVector> rays, std::vector<Cone> max_cones)
    : dim_(ambient_dim), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    const auto& r = rays_[i];
    if (r.size() != dim_)
      throw FanError("ray " + std::to_string(i) + " has length " + std::to_string(r.size()) +
                     ", expected " + std::to_string(dim_));
    std::int64_t g = 0;
    for (auto x : r) g = std::gcd(g, x);
    if (g == 0) throw FanError("ray " + std::to_string(i) + " is zero");
    if (g != 1) throw FanError("ray " + std::to_string(i) + " " + to_string(r) + " is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (rays_[j] == r) throw FanError("rays " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
  if (max_cones_.empty()) throw FanError("fan has no cones");

  std::vector<bool> used(rays_.size(), false);
  std::vector<std::vector<Facet>> facets;
  for (std::size_t c = 0; c < max_cones_.size(); ++c) {
    Cone& cone = max_cones_[c];
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw FanError("cone " + std::to_string(c) + " repeats a ray index");
    if (cone.empty()) throw FanError("cone " + std::to_string(c) + " is empty");
    for (auto i : cone) {
      if (i >= rays_.size())
        throw FanError("cone " + std::to_string(c) + " references unknown ray " + std::to_string(i));
      used[i] = true;
    }
    auto fs = facets_of(rays_, cone, dim_);
    Cone common = cone;
    for (const auto& f : fs) common = intersect_cones(common, f.zero_set);
    if (fs.empty() || !common.empty())
      throw FanError("cone " + std::to_string(c) + " " + cone_string(cone) + " is not strongly convex");
    const auto faces = faces_from_facets(cone, fs);
    for (auto i : cone)
      if (!std::binary_search(faces.begin(), faces.end(), Cone{i}))
        throw FanError("ray " + std::to_string(i) + " is not extremal in cone " + std::to_string(c));
    facets.push_back(std::move(fs));
  }
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (!used[i]) throw FanError("ray " + std::to_string(i) + " lies in no cone");
  for (std::size_t a = 0; a < max_cones_.size(); ++a)
    for (std::size_t b = a + 1; b < max_cones_.size(); ++b)
      if (max_cones_[a] == max_cones_[b])
        throw FanError("cones " + std::to_string(a) + " and " + std::to_string(b) + " coincide");

  {
    Cone all(rays_.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    if (rational_rank(rays_, all, dim_) != dim_)
      throw FanError("rays do not span the ambient space (support lies in a proper subspace)");
  }

  // Pairwise intersections must be common faces. Overlaps are detected through
  // interior points of faces; this is a generator-level check, not a proof.
  std::vector<std::vector<Cone>> face_lists;
  for (std::size_t c = 0; c < max_cones_.size(); ++c)
    face_lists.push_back(faces_from_facets(max_cones_[c], facets[c]));
  for (std::size_t a = 0; a < max_cones_.size(); ++a)
    for (std::size_t b = 0; b < max_cones_.size(); ++b) {
      if (a == b) continue;
      const Cone common = intersect_cones(max_cones_[a], max_cones_[b]);
      if (!std::binary_search(face_lists[a].begin(), face_lists[a].end(), common))
        throw FanError("cones " + std::to_string(a) + " and " + std::to_string(b) +
                       " meet in " + cone_string(common) + ", which is not a face of cone " +
                       std::to_string(a));
      for (const auto& f : face_lists[b]) {
        if (f.empty() || std::includes(common.begin(), common.end(), f.begin(), f.end())) continue;
        if (in_cone(rays_, max_cones_[a], facets[a], interior_point(rays_, f, dim_), dim_))
          throw FanError("cones " + std::to_string(a) + " and " + std::to_string(b) +
                         " overlap beyond their common face");
      }
    }

  std::set<Cone> all_faces;
  for (const auto& fl : face_lists) all_faces.insert(fl.begin(), fl.end());
  cones_.assign(all_faces.begin(), all_faces.end());
  std::sort(cones_.begin(), cones_.end(), [](const Cone& x, const Cone& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
}

bool Fan::contains_cone(const Cone& cone) const {
  return std::find(cones_.begin(), cones_.end(), cone) != cones_.end();
}

void Fan::require_cone(const Cone& cone) const {
  if (!contains_cone(cone)) throw std::out_of_range("unknown cone " + cone_string(cone));
}

std::vector<Cone> Fan::faces(const Cone& cone) const {
  require_cone(cone);
  auto fs = facets_of(rays_, cone, dim_);
  auto out = faces_from_facets(cone, fs);
  std::sort(out.begin(), out.end(), [](const Cone& x, const Cone& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

std::size_t Fan::cone_dim(const Cone& cone) const {
  require_cone(cone);
  return rational_rank(rays_, cone, dim_);
}

bool Fan::is_simplicial(const Cone& cone) const {
  require_cone(cone);
  return rational_rank(rays_, cone, dim_) == cone.size();
}

bool Fan::is_smooth(const Cone& cone) const {
  require_cone(cone);
  const IntMatrix m = ray_matrix(cone);
  const SmithForm s = smith_normal_form(m);
  if (s.rank != cone.size()) return false;
  for (const auto& d : s.invariant_factors())
    if (d != 1) return false;
  return true;
}

bool Fan::is_smooth() const {
  return std::all_of(max_cones_.begin(), max_cones_.end(),
                     [this](const Cone& c) { return is_smooth(c); });
}

bool Fan::dual_membership(const Cone& cone, const IntVector& m) const {
  if (m.size() != dim_) throw std::invalid_argument("dual_membership: dimension mismatch");
  require_cone(cone);
  return std::all_of(cone.begin(), cone.end(), [&](std::size_t i) { return inner(m, rays_[i]) >= 0; });
}

bool Fan::relevant_prime(const std::vector<std::size_t>& rays) const {
  Cone p = rays;
  std::sort(p.begin(), p.end());
  return std::any_of(max_cones_.begin(), max_cones_.end(), [&](const Cone& c) {
    return std::includes(c.begin(), c.end(), p.begin(), p.end());
  });
}

std::vector<Cone> Fan::nonsimplicial_locus() const {
  std::vector<Cone> out;
  for (const auto& c : cones_)
    if (!is_simplicial(c)) out.push_back(c);
  return out;
}

IntMatrix Fan::div_matrix() const { return IntMatrix::from_rows(rays_, dim_); }

IntMatrix Fan::ray_matrix(const Cone& cone) const {
  std::vector<IntVector> rows;
  for (auto i : cone) rows.push_back(rays_.at(i));
  return IntMatrix::from_rows(rows, dim_);
}

IntVector Fan::pairing(const IntVector& m) const {
  if (m.size() != dim_) throw std::invalid_argument("pairing: dimension mismatch");
  IntVector out;
  for (const auto& r : rays_) out.push_back(inner(m, r));
  return out;
}

namespace standard_fans {

std::shared_ptr<const Fan> projective_line() {
  return std::make_shared<const Fan>(1, std::vector<IntVector>{{1}, {-1}}, std::vector<Cone>{{0}, {1}});
}

std::shared_ptr<const Fan> projective_plane() { return projective_space(2); }

std::shared_ptr<const Fan> projective_space(std::size_t n) {
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    rays.push_back(e);
  }
  rays.push_back(IntVector(n, -1));
  std::vector<Cone> cones;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    Cone c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(c);
  }
  // Listed in the order {0,1}, {0,2}, {1,2} for n = 2.
  std::reverse(cones.begin(), cones.end());
  return std::make_shared<const Fan>(n, std::move(rays), std::move(cones));
}

std::shared_ptr<const Fan> p1_x_p1() {
  return std::make_shared<const Fan>(
      2, std::vector<IntVector>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}},
      std::vector<Cone>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

std::shared_ptr<const Fan> quadric_cone() {
  return std::make_shared<const Fan>(2, std::vector<IntVector>{{1, 0}, {1, 2}}, std::vector<Cone>{{0, 1}});
}

std::shared_ptr<const Fan> cone_over_square() {
  return std::make_shared<const Fan>(
      3, std::vector<IntVector>{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}},
      std::vector<Cone>{{0, 1, 2, 3}});
}

std::shared_ptr<const Fan> affine_space(std::size_t n) {
  std::vector<IntVector> rays;
  Cone all;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    rays.push_back(e);
    all.push_back(i);
  }
  return std::make_shared<const Fan>(n, std::move(rays), std::vector<Cone>{all});
}

}  // namespace standard_fans

}  // namespace toricdec
