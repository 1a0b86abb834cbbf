// SPDX-License-Identifier: Apache-2.0

#include "toricdec/monomial_ideal.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toricdec {

std::int64_t total_degree(const IntVector& exponent) {
  return std::accumulate(exponent.begin(), exponent.end(), std::int64_t{0});
}

bool divides(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

IntVector lcm(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool grlex_less(const IntVector& a, const IntVector& b) {
  const auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a > b;
}

namespace {

std::vector<IntVector> minimalize(std::vector<IntVector> gens) {
  std::sort(gens.begin(), gens.end(), grlex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<IntVector> out;
  for (auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const IntVector& h) { return divides(h, g); });
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

bool is_pure_power(const IntVector& g) {
  return std::count_if(g.begin(), g.end(), [](std::int64_t e) { return e > 0; }) <= 1;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<IntVector> generators) : nvars_(nvars) {
  for (const auto& g : generators) {
    if (g.size() != nvars) throw std::invalid_argument("MonomialIdeal: generator of wrong length");
    for (auto e : g)
      if (e < 0) throw std::invalid_argument("MonomialIdeal: negative exponent");
  }
  generators_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) {
  return MonomialIdeal(nvars, {IntVector(nvars, 0)});
}

MonomialIdeal MonomialIdeal::variables(std::size_t nvars, const VarSet& vars) {
  std::vector<IntVector> gens;
  for (auto v : vars) {
    if (v >= nvars) throw std::invalid_argument("MonomialIdeal: variable index out of range");
    IntVector e(nvars, 0);
    e[v] = 1;
    gens.push_back(e);
  }
  return MonomialIdeal(nvars, std::move(gens));
}

bool MonomialIdeal::is_unit() const {
  return generators_.size() == 1 && total_degree(generators_.front()) == 0;
}

bool MonomialIdeal::contains(const IntVector& monomial) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const IntVector& g) { return divides(g, monomial); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const IntVector& g) { return contains(g); });
}

std::int64_t MonomialIdeal::max_generator_degree() const {
  std::int64_t d = 0;
  for (const auto& g : generators_) d = std::max(d, total_degree(g));
  return d;
}

IntVector MonomialIdeal::exponent_bounds() const {
  IntVector b(nvars_, 0);
  for (const auto& g : generators_)
    for (std::size_t i = 0; i < nvars_; ++i) b[i] = std::max(b[i], g[i]);
  return b;
}

std::string monomial_string(const IntVector& exponent) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exponent.size(); ++i) {
    if (exponent[i] == 0) continue;
    if (!first) os << '*';
    os << 'x' << i;
    if (exponent[i] != 1) os << '^' << exponent[i];
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

std::string varset_string(const VarSet& vars) {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) os << ',';
    os << 'x' << vars[i];
  }
  os << '>';
  return os.str();
}

std::string MonomialIdeal::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ", ";
    os << monomial_string(generators_[i]);
  }
  os << '>';
  return os.str();
}

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<IntVector> gens;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) {
      IntVector s(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) s[i] = g[i] + h[i];
      gens.push_back(std::move(s));
    }
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<IntVector> gens;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal intersect(const std::vector<MonomialIdeal>& ideals, std::size_t nvars) {
  MonomialIdeal acc = MonomialIdeal::unit(nvars);
  for (const auto& i : ideals) acc = intersect(acc, i);
  return acc;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const IntVector& f) {
  std::vector<IntVector> gens;
  for (const auto& g : ideal.generators()) {
    IntVector q(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) q[i] = std::max<std::int64_t>(g[i] - f[i], 0);
    gens.push_back(std::move(q));
  }
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  std::vector<MonomialIdeal> parts;
  for (const auto& h : by.generators()) parts.push_back(colon(ideal, h));
  return intersect(parts, ideal.nvars());
}

MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  MonomialIdeal current = ideal;
  for (;;) {
    MonomialIdeal next = colon(current, by);
    if (next == current) return current;
    current = std::move(next);
  }
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<IntVector> gens;
  for (auto g : ideal.generators()) {
    for (auto& e : g) e = e > 0 ? 1 : 0;
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

namespace {

void split(const MonomialIdeal& ideal, std::vector<MonomialIdeal>& out) {
  const auto& gens = ideal.generators();
  auto mixed = std::find_if(gens.begin(), gens.end(), [](const IntVector& g) { return !is_pure_power(g); });
  if (mixed == gens.end()) {
    out.push_back(ideal);
    return;
  }
  const IntVector& g = *mixed;
  const std::size_t first = static_cast<std::size_t>(
      std::find_if(g.begin(), g.end(), [](std::int64_t e) { return e > 0; }) - g.begin());
  IntVector u(g.size(), 0), v = g;
  u[first] = g[first];
  v[first] = 0;
  split(ideal + MonomialIdeal(ideal.nvars(), {u}), out);
  split(ideal + MonomialIdeal(ideal.nvars(), {v}), out);
}

}  // namespace

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw std::invalid_argument("irreducible_decomposition: unit ideal");
  std::vector<MonomialIdeal> leaves;
  split(ideal, leaves);
  std::vector<MonomialIdeal> unique;
  for (auto& l : leaves)
    if (std::find(unique.begin(), unique.end(), l) == unique.end()) unique.push_back(std::move(l));
  std::vector<MonomialIdeal> out;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < unique.size() && !redundant; ++j)
      if (i != j && unique[i].contains(unique[j])) redundant = true;
    if (!redundant) out.push_back(unique[i]);
  }
  std::sort(out.begin(), out.end(), [](const MonomialIdeal& a, const MonomialIdeal& b) {
    const auto sa = prime_support(radical(a)), sb = prime_support(radical(b));
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
    return std::lexicographical_compare(a.generators().begin(), a.generators().end(),
                                        b.generators().begin(), b.generators().end(), grlex_less);
  });
  return out;
}

std::vector<AssociatedPrime> associated_primes(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw std::invalid_argument("associated_primes: unit ideal");
  std::set<VarSet> supports;
  for (const auto& q : irreducible_decomposition(ideal)) supports.insert(prime_support(radical(q)));

  // (I : w) only depends on min(w, bounds), so witnesses live in this box.
  const IntVector bounds = ideal.exponent_bounds();
  const std::size_t n = ideal.nvars();
  std::vector<AssociatedPrime> out;
  for (const auto& p : supports) {
    const MonomialIdeal target = MonomialIdeal::variables(n, p);
    IntVector w(n, 0);
    bool found = false;
    for (;;) {
      if (!ideal.contains(w) && colon(ideal, w) == target) {
        found = true;
        break;
      }
      std::size_t i = 0;
      while (i < n && w[i] == bounds[i]) w[i++] = 0;
      if (i == n) break;
      ++w[i];
    }
    if (!found) throw std::logic_error("associated_primes: no witness for " + varset_string(p));
    out.push_back({p, w});
  }
  std::sort(out.begin(), out.end(), [](const AssociatedPrime& a, const AssociatedPrime& b) {
    return a.prime.size() != b.prime.size() ? a.prime.size() < b.prime.size() : a.prime < b.prime;
  });
  return out;
}

bool is_variable_prime(const MonomialIdeal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const IntVector& g) { return total_degree(g) == 1; });
}

VarSet prime_support(const MonomialIdeal& ideal) {
  VarSet out;
  for (const auto& g : ideal.generators())
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] > 0) out.push_back(i);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace toricdec
