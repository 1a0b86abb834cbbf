// SPDX-License-Identifier: Apache-2.0
//
// Slow, obviously-correct reference computations the tests compare against.
// None of these call into the library's algebra.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<std::int64_t>;
using IntRows = std::vector<std::vector<Int>>;
using RatRows = std::vector<std::vector<Rat>>;

// Cofactor expansion along the first row.
inline Int det(const IntRows& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    IntRows minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> r;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) r.push_back(m[i][k]);
      minor.push_back(std::move(r));
    }
    const Int t = m[0][j] * det(minor);
    s += (j % 2 ? -t : t);
  }
  return s;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors.
inline std::vector<Int> invariant_factors(const IntRows& m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<Int> out;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    Int g = 0;
    for (const auto& rs : subsets(rows, k))
      for (const auto& cs : subsets(cols, k)) {
        IntRows sub;
        for (auto i : rs) {
          std::vector<Int> r;
          for (auto j : cs) r.push_back(m[i][j]);
          sub.push_back(std::move(r));
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Int(det(sub)).get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Plain Gauss-Jordan over Q.
inline std::size_t rank(RatRows m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline bool divides(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// x^m in <x^g : g in gens>
inline bool member(const std::vector<Vec>& gens, const Vec& m) {
  for (const auto& g : gens)
    if (divides(g, m)) return true;
  return false;
}

inline Vec add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline std::int64_t total(const Vec& v) {
  std::int64_t s = 0;
  for (auto x : v) s += x;
  return s;
}

// All exponent vectors in n variables of total degree <= d.
inline std::vector<Vec> monomials_up_to(std::size_t n, std::int64_t d) {
  std::vector<Vec> out;
  Vec cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t e = 0; e <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

// x^m in I : J^infinity, searching powers up to `kmax` of each generator of J.
inline bool saturation_member(const std::vector<Vec>& i, const std::vector<Vec>& j, const Vec& m, int kmax) {
  for (const auto& g : j) {
    bool hit = false;
    Vec cur = m;
    for (int k = 0; k <= kmax && !hit; ++k) {
      if (member(i, cur)) hit = true;
      cur = add(cur, g);
    }
    if (!hit) return false;
  }
  return true;
}

// Sparse polynomials keyed by exponent.
using Poly = std::map<Vec, Rat>;

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Rat& slot = out[add(ea, eb)];
      slot += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly s;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].empty()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> r;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) r.push_back(m[i][k]);
      minor.push_back(std::move(r));
    }
    for (const auto& [e, c] : mul(m[0][j], poly_det(minor))) s[e] += (j % 2 ? -c : c);
  }
  std::erase_if(s, [](const auto& kv) { return kv.second == 0; });
  return s;
}

// Every minor of every size has at most one term.
inline bool all_minors_monomial(const std::vector<std::vector<Poly>>& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k)
    for (const auto& rs : subsets(rows, k))
      for (const auto& cs : subsets(cols, k)) {
        std::vector<std::vector<Poly>> sub;
        for (auto i : rs) {
          std::vector<Poly> r;
          for (auto j : cs) r.push_back(m[i][j]);
          sub.push_back(std::move(r));
        }
        if (poly_det(sub).size() > 1) return false;
      }
  return true;
}

}  // namespace oracle
