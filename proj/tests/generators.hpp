// SPDX-License-Identifier: Apache-2.0
//
// Hand-rolled generators for property tests.

#pragma once

#include "toricdec/module_expr.hpp"

#include <random>
#include <vector>

namespace testgen {

using toricdec::IntVector;

// `count` exponent vectors in n variables, each of total degree 1..max_degree.
inline std::vector<IntVector> random_generators(std::mt19937_64& rng, std::size_t n, std::size_t count,
                                                std::int64_t max_degree) {
  std::vector<IntVector> out;
  for (std::size_t k = 0; k < count; ++k) {
    IntVector v(n, 0);
    const std::int64_t deg = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_degree));
    for (std::int64_t d = 0; d < deg; ++d) ++v[rng() % n];
    out.push_back(std::move(v));
  }
  return out;
}

// rows x cols grid of monomials in n variables with exponents <= max_exp,
// each entry zero with probability `zero_density`.
inline toricdec::MonomialGrid random_grid(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t n,
                                          std::int64_t max_exp, double zero_density) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> coef(-3, 3);
  toricdec::MonomialGrid g(rows, std::vector<toricdec::Monomial>(cols));
  for (auto& row : g)
    for (auto& e : row) {
      if (u(rng) < zero_density) continue;
      int c = 0;
      while (c == 0) c = coef(rng);
      e.coef = c;
      e.exponent.assign(n, 0);
      for (auto& x : e.exponent) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_exp + 1));
    }
  return g;
}

// Entries x^(b_j - a_i) with a_i in [0,1]^n and b_j in [1,2]^n, so exponents
// stay <= 2; zeros with probability `zero_density`.
inline toricdec::MonomialGrid random_equivariant_grid(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                                      std::size_t n, double zero_density) {
  std::vector<IntVector> a(rows, IntVector(n)), b(cols, IntVector(n));
  for (auto& v : a)
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % 2);
  for (auto& v : b)
    for (auto& x : v) x = 1 + static_cast<std::int64_t>(rng() % 2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  toricdec::MonomialGrid g(rows, std::vector<toricdec::Monomial>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (u(rng) < zero_density) continue;
      g[i][j].coef = 1 + static_cast<long>(rng() % 3);
      g[i][j].exponent.resize(n);
      for (std::size_t k = 0; k < n; ++k) g[i][j].exponent[k] = b[j][k] - a[i][k];
    }
  return g;
}

}  // namespace testgen
