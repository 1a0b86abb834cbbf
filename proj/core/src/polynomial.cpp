// SPDX-License-Identifier: Apache-2.0

#include "toricdec/polynomial.hpp"

#include "toricdec/monomial_ideal.hpp"

#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace toricdec {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(IntVector(nvars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(const Rational& coef, const IntVector& exponent) {
  Polynomial p(exponent.size());
  p.add_term(exponent, coef);
  return p;
}

void Polynomial::add_term(const IntVector& exponent, const Rational& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  out += rhs;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out = *this;
  out -= rhs;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  Polynomial out(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) {
      IntVector e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a < 0) os << '-';
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    a = abs(a);
    const bool unit_monomial = total_degree(e) == 0;
    if (a != 1 || unit_monomial) {
      os << a.get_str();
      if (!unit_monomial) os << '*';
    }
    if (!unit_monomial) os << monomial_string(e);
    first = false;
  }
  return os.str();
}

namespace {

struct DetMemo {
  const PolyMatrix& m;
  std::size_t nvars;
  std::vector<std::size_t> rows, cols;
  std::unordered_map<std::uint32_t, Polynomial> cache;

  // Determinant of rows[depth..] against the columns left in `mask`.
  Polynomial eval(std::uint32_t mask) {
    const std::size_t depth = rows.size() - static_cast<std::size_t>(std::popcount(mask));
    if (depth == rows.size()) return Polynomial::constant(nvars, 1);
    if (auto it = cache.find(mask); it != cache.end()) return it->second;
    Polynomial acc(nvars);
    int sign = 1;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!(mask & (1u << j))) continue;
      const Polynomial& entry = m[rows[depth]][cols[j]];
      if (!entry.is_zero()) {
        Polynomial term = entry * eval(mask & ~(1u << j));
        if (sign > 0)
          acc += term;
        else
          acc -= term;
      }
      sign = -sign;
    }
    cache.emplace(mask, acc);
    return acc;
  }
};

Polynomial sub_determinant(const PolyMatrix& m, std::size_t nvars, std::vector<std::size_t> rows,
                           std::vector<std::size_t> cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("determinant: not square");
  if (cols.size() > 31) throw std::invalid_argument("determinant: matrix too large");
  DetMemo memo{m, nvars, std::move(rows), std::move(cols), {}};
  const std::uint32_t full = memo.cols.empty() ? 0u : static_cast<std::uint32_t>((1ull << memo.cols.size()) - 1);
  return memo.eval(full);
}

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Polynomial determinant(const PolyMatrix& m, std::size_t nvars) {
  std::vector<std::size_t> idx(m.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("determinant: not square");
  return sub_determinant(m, nvars, idx, idx);
}

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k, std::size_t nvars) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  std::vector<std::vector<std::size_t>> rsets, csets;
  std::vector<std::size_t> cur;
  combinations(rows, k, 0, cur, rsets);
  combinations(cols, k, 0, cur, csets);
  std::vector<Polynomial> out;
  for (const auto& r : rsets)
    for (const auto& c : csets) out.push_back(sub_determinant(m, nvars, r, c));
  return out;
}

}  // namespace toricdec
