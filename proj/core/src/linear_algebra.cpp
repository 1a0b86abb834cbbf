// SPDX-License-Identifier: Apache-2.0

#include "toricdec/linear_algebra.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace toricdec {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

RatVector RatMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("RatMatrix: dimension mismatch");
  RatVector out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("RatMatrix: dimension mismatch");
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += (*this)(i, k) * rhs(k, j);
    }
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("RatMatrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::size_t> rref(std::vector<RatVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rank(const RatMatrix& m) {
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rref(rows, m.cols()).size();
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  const auto pivots = rref(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rows[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Subspace Subspace::span(std::size_t ambient, std::vector<RatVector> vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw std::invalid_argument("Subspace: vector of wrong length");
  Subspace s(ambient);
  s.pivots_ = rref(vectors, ambient);
  s.basis_ = std::move(vectors);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  return coordinate(std::vector<bool>(ambient, true));
}

Subspace Subspace::coordinate(const std::vector<bool>& mask) {
  Subspace s(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (!mask[i]) continue;
    RatVector v(mask.size(), Rational(0));
    v[i] = 1;
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

bool Subspace::contains(const RatVector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace: vector of wrong length");
  RatVector w = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rational f = w[pivots_[k]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (basis_[k][j] != 0) w[j] -= f * basis_[k][j];
  }
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
  if (other.is_zero()) return *this;
  if (is_zero()) return other;
  std::vector<RatVector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, std::move(all));
}

Subspace Subspace::annihilator() const {
  if (basis_.empty()) return whole(ambient_);
  return span(ambient_, nullspace(RatMatrix::from_rows(basis_, ambient_)));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
  if (is_zero() || other.is_zero()) return Subspace(ambient_);
  if (other.contains(*this)) return *this;
  if (contains(other)) return other;
  return (annihilator() + other.annihilator()).annihilator();
}

Subspace image(const RatMatrix& m, const Subspace& domain) {
  if (domain.ambient_dim() != m.cols()) throw std::invalid_argument("image: dimension mismatch");
  std::vector<RatVector> out;
  for (const auto& v : domain.basis()) out.push_back(m * v);
  return Subspace::span(m.rows(), std::move(out));
}

Subspace preimage(const RatMatrix& m, const Subspace& domain, const Subspace& target) {
  if (domain.ambient_dim() != m.cols() || target.ambient_dim() != m.rows())
    throw std::invalid_argument("preimage: dimension mismatch");
  if (domain.is_zero()) return domain;
  // v = sum c_k d_k with ann(target) * M * v = 0.
  const Subspace ann = target.annihilator();
  if (ann.is_zero()) return domain;
  const std::size_t k = domain.dim();
  RatMatrix system(ann.dim(), k);
  for (std::size_t c = 0; c < k; ++c) {
    const RatVector mv = m * domain.basis()[c];
    for (std::size_t r = 0; r < ann.dim(); ++r) {
      Rational s = 0;
      for (std::size_t j = 0; j < mv.size(); ++j)
        if (mv[j] != 0) s += ann.basis()[r][j] * mv[j];
      system(r, c) = s;
    }
  }
  std::vector<RatVector> out;
  for (const auto& coeffs : nullspace(system)) {
    RatVector v(m.cols(), Rational(0));
    for (std::size_t c = 0; c < k; ++c)
      if (coeffs[c] != 0)
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += coeffs[c] * domain.basis()[c][j];
    out.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), std::move(out));
}

std::vector<RatVector> complement_basis(const Subspace& sub, const Subspace& rel) {
  std::vector<RatVector> chosen;
  Subspace acc = rel;
  for (const auto& v : sub.basis()) {
    if (acc.contains(v)) continue;
    chosen.push_back(v);
    acc = acc + Subspace::span(acc.ambient_dim(), {v});
  }
  return chosen;
}

RatVector coordinates_modulo(const RatVector& v, const std::vector<RatVector>& basis,
                             const Subspace& rel) {
  // Solve [basis; rel]^T * (c, d) = v and keep c.
  const std::size_t n = v.size();
  const std::size_t k = basis.size();
  const std::size_t cols = k + rel.dim() + 1;
  std::vector<RatVector> rows(n, RatVector(cols, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < k; ++c) rows[i][c] = basis[c][i];
    for (std::size_t c = 0; c < rel.dim(); ++c) rows[i][k + c] = rel.basis()[c][i];
    rows[i][cols - 1] = v[i];
  }
  const auto pivots = rref(rows, cols);
  if (!pivots.empty() && pivots.back() == cols - 1)
    throw std::invalid_argument("coordinates_modulo: vector not in span");
  RatVector c(k, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] < k) c[pivots[r]] = rows[r][cols - 1];
  return c;
}

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

}  // namespace toricdec
