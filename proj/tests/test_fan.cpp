// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include "toricdec/fan.hpp"
#include "toricdec/grading.hpp"

#include <doctest.h>

using namespace toricdec;
namespace sf = toricdec::standard_fans;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

// Cl = Z^r / im(div); invariant factors of div^T decide the group.
oracle::IntRows div_rows(const Fan& f) {
  oracle::IntRows out;
  for (const auto& r : f.rays()) {
    std::vector<Integer> row;
    for (auto x : r) row.emplace_back(static_cast<long>(x));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

TEST_CASE("class group of P2") {
  const GradingSetup s = GradingSetup::from_fan(sf::projective_plane());
  CHECK(s.class_group().free_rank == 1);
  CHECK(s.class_group().torsion.empty());
  // degrees are all equal up to a global sign; the generator is the hyperplane class
  for (const auto& c : s.class_of_vars()) CHECK(c == ints({1}));
  CHECK(s.irrelevant() == MonomialIdeal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("class group of the quadric cone") {
  const auto fan = sf::quadric_cone();
  const GradingSetup s = GradingSetup::from_fan(fan);
  const auto oracle_factors = oracle::invariant_factors(div_rows(*fan), 2);
  CHECK(oracle_factors == ints({1, 2}));
  CHECK(s.class_group().free_rank == 0);
  CHECK(s.class_group().torsion == ints({2}));
  CHECK(s.class_of_vars()[0] == ints({1}));
  CHECK(s.class_of_vars()[1] == ints({1}));
  CHECK(s.irrelevant().is_unit());
}

TEST_CASE("class group of P1 x P1") {
  const GradingSetup s = GradingSetup::from_fan(sf::p1_x_p1());
  CHECK(s.class_group().free_rank == 2);
  CHECK(s.class_group().torsion.empty());
  const auto& d = s.class_of_vars();
  CHECK(d[0] == d[1]);
  CHECK(d[2] == d[3]);
  CHECK(d[0] != d[2]);
  CHECK(s.irrelevant().generators().size() == 4);
}

TEST_CASE("class group rank is rays minus dimension") {
  for (const auto& f : {sf::projective_line(), sf::projective_plane(), sf::projective_space(3), sf::p1_x_p1(),
                        sf::cone_over_square(), sf::affine_space(3)}) {
    const GradingSetup s = GradingSetup::from_fan(f);
    const auto factors = oracle::invariant_factors(div_rows(*f), f->ambient_dim());
    std::vector<Integer> torsion;
    for (const auto& x : factors)
      if (x != 1) torsion.push_back(x);
    CHECK(s.class_group().free_rank == f->num_rays() - factors.size());
    CHECK(s.class_group().torsion == torsion);
    // every character has class zero
    for (const auto& m : s.degree_zero_points(1)) CHECK(s.class_group().is_zero_class(s.class_of(m)));
  }
}

TEST_CASE("smoothness and simpliciality") {
  CHECK(sf::projective_plane()->is_smooth());
  CHECK(sf::p1_x_p1()->is_smooth());
  const auto q = sf::quadric_cone();
  CHECK_FALSE(q->is_smooth());
  CHECK(q->is_simplicial(std::size_t{0}));
  CHECK(q->nonsimplicial_locus().empty());
  const auto sq = sf::cone_over_square();
  CHECK_FALSE(sq->is_simplicial(std::size_t{0}));
  REQUIRE(sq->nonsimplicial_locus().size() == 1);
  CHECK(sq->nonsimplicial_locus()[0] == Cone{0, 1, 2, 3});
  CHECK(sf::projective_plane()->cones().size() == 7);
}

TEST_CASE("dual cone membership") {
  const auto p2 = sf::projective_plane();
  CHECK(p2->dual_membership({0, 1}, {1, 2}));
  CHECK_FALSE(p2->dual_membership({0, 1}, {-1, 2}));
  CHECK(p2->dual_membership({1, 2}, {-1, 0}));
  CHECK(p2->pairing({2, 3}) == IntVector{2, 3, -5});
}

TEST_CASE("relevant primes") {
  const GradingSetup s = GradingSetup::from_fan(sf::projective_plane());
  CHECK(s.relevant({0}));
  CHECK(s.relevant({0, 1}));
  CHECK_FALSE(s.relevant({0, 1, 2}));
  CHECK(s.dimension() == 2);
}

TEST_CASE("invalid fans are rejected") {
  CHECK_THROWS_AS(Fan(2, {{1, 0}, {2, 0}}, {{0}, {1}}), FanError);      // not primitive
  CHECK_THROWS_AS(Fan(2, {{1, 0}, {-1, 0}}, {{0, 1}}), FanError);       // not strongly convex
  CHECK_THROWS_AS(Fan(2, {{1, 0}, {0, 1}}, {{0, 2}}), FanError);        // ray out of range
  CHECK_THROWS_AS(Fan(2, {{1, 0, 0}}, {{0}}), FanError);                // wrong length
}

TEST_CASE("explicit gradings") {
  const GradingSetup s = GradingSetup::explicit_grading(4, IntMatrix::from_rows({{1, -1, -1, 1}}), {}, {{0, 0, 0, 0}});
  CHECK(s.class_of({1, 1, 0, 0}) == ints({0}));
  CHECK(s.class_of({1, 0, 0, 0}) == ints({1}));
  CHECK(s.degree_zero_lattice().cols() == 3);
  CHECK_FALSE(s.has_fan());
  CHECK_THROWS_AS(GradingSetup::explicit_grading(2, IntMatrix::from_rows({{2, 2}}), {}, {{0, 0}}), GradingError);
}
