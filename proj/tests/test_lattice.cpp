// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include "toricdec/integer_matrix.hpp"
#include "toricdec/linear_algebra.hpp"

#include <doctest.h>

#include <random>

using namespace toricdec;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

oracle::IntRows rows_of(const IntMatrix& m) {
  oracle::IntRows out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = m.row(i);
  return out;
}

bool unimodular(const IntMatrix& m) {
  const Integer d = determinant(m);
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("smith form matches determinantal divisors") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 150; ++t) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix a = random_matrix(rng, r, c, 6);
    if (t % 5 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = 2 * a(0, j);  // force a rank drop
    const SmithForm s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(unimodular(s.U));
    CHECK(unimodular(s.V));
    const auto expected = oracle::invariant_factors(rows_of(a), c);
    CHECK(s.invariant_factors() == expected);
    CHECK(s.rank == expected.size());
  }
}

TEST_CASE("hermite form is echelon and row equivalent") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const IntMatrix a = random_matrix(rng, r, c, 9);
    const HermiteForm h = hermite_normal_form(a);
    CHECK(h.transform * a == h.H);
    CHECK(unimodular(h.transform));
    std::size_t last = 0;
    bool first = true;
    for (std::size_t i = 0; i < h.rank; ++i) {
      std::size_t p = 0;
      while (p < c && h.H(i, p) == 0) ++p;
      REQUIRE(p < c);
      CHECK(h.H(i, p) > 0);
      if (!first) CHECK(p > last);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h.H(k, p) >= 0);
        CHECK(h.H(k, p) < h.H(i, p));
      }
      last = p;
      first = false;
    }
    for (std::size_t i = h.rank; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) CHECK(h.H(i, j) == 0);
  }
}

TEST_CASE("rank plus nullity") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const IntMatrix a = random_matrix(rng, r, c, 3);
    const IntMatrix k = kernel_basis(a);
    CHECK(rank(a) + k.cols() == c);
    CHECK((a * k).is_zero());
    oracle::RatRows q(r, std::vector<oracle::Rat>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) q[i][j] = oracle::Rat(a(i, j));
    CHECK(rank(a) == oracle::rank(q));
    RatMatrix rm(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) rm(i, j) = q[i][j];
    CHECK(rank(rm) + nullspace(rm).size() == c);
  }
}

TEST_CASE("kernel basis is saturated") {
  // 2x - 4y = 0 has kernel spanned by (2, 1), not (4, 2)
  const IntMatrix a = IntMatrix::from_rows({{2, -4}});
  const IntMatrix k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  const Integer x = k(0, 0), y = k(1, 0);
  CHECK(((x == 2 && y == 1) || (x == -2 && y == -1)));
}

TEST_CASE("integer solutions") {
  const IntMatrix a = IntMatrix::from_rows({{2, 4}, {0, 3}});
  auto s = solve_integer(a, {Integer(6), Integer(3)});
  REQUIRE(s);
  CHECK(a * *s == std::vector<Integer>{6, 3});
  CHECK_FALSE(solve_integer(IntMatrix::from_rows({{2, 4}}), {Integer(3)}));
}

TEST_CASE("determinant against cofactor expansion") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const IntMatrix a = random_matrix(rng, n, n, 20);
    CHECK(determinant(a) == oracle::det(rows_of(a)));
  }
}

TEST_CASE("cokernel presentations") {
  // Z^2 / <(2, 0)> = Z + Z/2
  const auto g = cokernel_presentation(IntMatrix::from_rows({{2}, {0}}));
  CHECK(g.free_rank == 1);
  REQUIRE(g.torsion.size() == 1);
  CHECK(g.torsion[0] == 2);
  CHECK(g.is_zero_class(g.project(std::vector<Integer>{2, 0})));
  CHECK_FALSE(g.is_zero_class(g.project(std::vector<Integer>{1, 0})));
  CHECK(cokernel_presentation(IntMatrix::identity(3)).is_trivial());
}

TEST_CASE("subspaces are canonical") {
  const Subspace a = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
  const Subspace b = Subspace::span(3, {{1, 2, 1}, {1, 0, -1}});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  const Subspace c = Subspace::span(3, {{1, 0, 0}});
  CHECK((a + c).dim() == 3);
  CHECK(a.intersect(Subspace::coordinate({true, true, false})).dim() == 1);
  CHECK(a.annihilator().dim() == 1);
  CHECK(a.annihilator().contains(RatVector{1, -1, 1}));
}
