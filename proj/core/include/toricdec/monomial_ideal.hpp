// SPDX-License-Identifier: Apache-2.0
//
// Monomial ideals of k[x_0, ..., x_{r-1}], held by their minimal generators
// in graded lexicographic order.

#pragma once

#include "toricdec/integer_matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace toricdec {

/// Sorted set of variable indices; stands for the prime <x_i : i in set>.
using VarSet = std::vector<std::size_t>;

std::int64_t total_degree(const IntVector& exponent);
/// a divides b componentwise.
bool divides(const IntVector& a, const IntVector& b);
IntVector lcm(const IntVector& a, const IntVector& b);
/// Graded lexicographic comparison: total degree first, then larger leading
/// exponents first, so x_0 < x_1 < x_2 in the listing order.
bool grlex_less(const IntVector& a, const IntVector& b);

class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars = 0) : nvars_(nvars) {}
  MonomialIdeal(std::size_t nvars, std::vector<IntVector> generators);

  static MonomialIdeal unit(std::size_t nvars);
  static MonomialIdeal zero(std::size_t nvars) { return MonomialIdeal(nvars); }
  static MonomialIdeal variables(std::size_t nvars, const VarSet& vars);

  std::size_t nvars() const { return nvars_; }
  const std::vector<IntVector>& generators() const { return generators_; }
  bool is_unit() const;
  bool is_zero() const { return generators_.empty(); }

  bool contains(const IntVector& monomial) const;
  bool contains(const MonomialIdeal& other) const;
  std::int64_t max_generator_degree() const;
  /// Largest exponent of each variable among the generators.
  IntVector exponent_bounds() const;

  std::string to_string() const;
  bool operator==(const MonomialIdeal& other) const = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<IntVector> generators_;
};

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const std::vector<MonomialIdeal>& ideals, std::size_t nvars);

/// (I : x^f)
MonomialIdeal colon(const MonomialIdeal& ideal, const IntVector& f);
/// (I : J)
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);
/// I : J^infinity, by iterating colons until the chain stabilizes.
MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by);
MonomialIdeal radical(const MonomialIdeal& ideal);

/// Irredundant decomposition into ideals generated by pure powers.
/// Throws std::invalid_argument on the unit ideal.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal);

struct AssociatedPrime {
  VarSet prime;
  IntVector witness;  // (I : x^witness) = <x_i : i in prime>
};

/// Associated primes with witness monomials. Throws on the unit ideal.
std::vector<AssociatedPrime> associated_primes(const MonomialIdeal& ideal);

/// Minimal generators are all single variables (the zero ideal counts).
bool is_variable_prime(const MonomialIdeal& ideal);
/// Variables occurring in the generators of a variable prime.
VarSet prime_support(const MonomialIdeal& ideal);

std::string monomial_string(const IntVector& exponent);
std::string varset_string(const VarSet& vars);

}  // namespace toricdec
