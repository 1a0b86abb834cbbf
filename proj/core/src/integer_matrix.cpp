// SPDX-License-Identifier: Apache-2.0

#include "toricdec/integer_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace toricdec {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("IntMatrix: entry count does not match rows*cols");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  std::vector<Integer> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

std::vector<Integer> IntMatrix::operator*(const std::vector<Integer>& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
  std::vector<Integer> out(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << toricdec::to_string(row(i));
  }
  os << ']';
  return os.str();
}

std::string to_string(const std::vector<Integer>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = m(i, j) * m(r, c) - m(i, c) * m(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

namespace {

// Position of the smallest nonzero |entry| in the block rows >= t, cols >= t.
bool smallest_entry(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer v = abs(d(i, j));
      if (!found || v < best) {
        best = v;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm s{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols()), 0};
  IntMatrix& d = s.D;
  const std::size_t m = d.rows(), n = d.cols();
  std::size_t t = 0;
  while (t < std::min(m, n)) {
    std::size_t pi = 0, pj = 0;
    if (!smallest_entry(d, t, pi, pj)) break;
    d.swap_rows(t, pi);
    s.U.swap_rows(t, pi);
    d.swap_cols(t, pj);
    s.V.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        d.add_row(i, t, -q);
        s.U.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        d.add_col(j, t, -q);
        s.V.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder in row/column t onto the pivot.
        std::size_t bi = t, bj = t;
        Integer best = abs(d(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (d(i, t) != 0 && abs(d(i, t)) < best) best = abs(d(i, t)), bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(t, j) != 0 && abs(d(t, j)) < best) best = abs(d(t, j)), bi = t, bj = j;
        d.swap_rows(t, bi);
        s.U.swap_rows(t, bi);
        d.swap_cols(t, bj);
        s.V.swap_cols(t, bj);
        continue;
      }
      // Divisibility chain: fold an offending row into the pivot row.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row(t, i, 1);
            s.U.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
    ++t;
  }
  s.rank = t;
  return s;
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
  return out;
}

HermiteForm hermite_normal_form(const IntMatrix& a) {
  HermiteForm h{a, IntMatrix::identity(a.rows()), 0};
  IntMatrix& m = h.H;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      std::size_t p = rows;
      Integer best;
      for (std::size_t i = r; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        if (p == rows || abs(m(i, c)) < best) best = abs(m(i, c)), p = i;
      }
      if (p == rows) break;
      m.swap_rows(r, p);
      h.transform.swap_rows(r, p);
      bool clear = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
        m.add_row(i, r, -q);
        h.transform.add_row(i, r, -q);
        if (m(i, c) != 0) clear = false;
      }
      if (clear) break;
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) {
      m.negate_row(r);
      h.transform.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
      m.add_row(i, r, -q);
      h.transform.add_row(i, r, -q);
    }
    ++r;
  }
  h.rank = r;
  return h;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  const std::size_t n = a.cols();
  const std::size_t k = n - s.rank;
  IntMatrix rows(k, n);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < n; ++i) rows(c, i) = s.V(i, s.rank + c);
  const HermiteForm h = hermite_normal_form(rows);
  IntMatrix out(n, k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < n; ++i) out(i, c) = h.H(c, i);
  return out;
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a,
                                                  const std::vector<Integer>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
  // T * A^T = H, so A * T^T = H^T is in column echelon form.
  const HermiteForm h = hermite_normal_form(a.transpose());
  const std::size_t n = a.cols();
  std::vector<Integer> y(n, Integer(0));
  for (std::size_t k = 0; k < h.rank; ++k) {
    std::size_t pivot = 0;
    while (h.H(k, pivot) == 0) ++pivot;
    Integer rhs = b[pivot];
    for (std::size_t l = 0; l < k; ++l) rhs -= h.H(l, pivot) * y[l];
    if (rhs % h.H(k, pivot) != 0) return std::nullopt;
    y[k] = rhs / h.H(k, pivot);
  }
  std::vector<Integer> x = h.transform.transpose() * y;
  if (a * x != b) return std::nullopt;
  return x;
}

std::vector<Integer> AbelianGroupPresentation::project(const std::vector<Integer>& v) const {
  return reduce(projection * v);
}

std::vector<Integer> AbelianGroupPresentation::project(const IntVector& v) const {
  std::vector<Integer> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = static_cast<long>(v[i]);
  return project(w);
}

std::vector<Integer> AbelianGroupPresentation::reduce(std::vector<Integer> element) const {
  for (std::size_t t = 0; t < torsion.size(); ++t) {
    Integer& x = element[free_rank + t];
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), torsion[t].get_mpz_t());
  }
  return element;
}

bool AbelianGroupPresentation::is_zero_class(const std::vector<Integer>& element) const {
  const auto r = reduce(element);
  return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

std::string AbelianGroupPresentation::group_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& d : torsion) parts.push_back("Z/" + d.get_str());
  if (parts.empty()) return "0";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

bool AbelianGroupPresentation::operator==(const AbelianGroupPresentation& rhs) const {
  return free_rank == rhs.free_rank && torsion == rhs.torsion && projection == rhs.projection;
}

AbelianGroupPresentation cokernel_presentation(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  const std::size_t r = a.rows();
  AbelianGroupPresentation p;
  p.free_rank = r - s.rank;

  IntMatrix free_rows(p.free_rank, r);
  for (std::size_t i = 0; i < p.free_rank; ++i)
    for (std::size_t j = 0; j < r; ++j) free_rows(i, j) = s.U(s.rank + i, j);
  const IntMatrix free_block = hermite_normal_form(free_rows).H;

  std::vector<std::size_t> torsion_rows;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) != 1) {
      torsion_rows.push_back(i);
      p.torsion.push_back(s.D(i, i));
    }

  p.projection = IntMatrix(p.num_coordinates(), r);
  for (std::size_t i = 0; i < p.free_rank; ++i)
    for (std::size_t j = 0; j < r; ++j) p.projection(i, j) = free_block(i, j);
  for (std::size_t t = 0; t < torsion_rows.size(); ++t)
    for (std::size_t j = 0; j < r; ++j) {
      Integer x = s.U(torsion_rows[t], j);
      mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), p.torsion[t].get_mpz_t());
      p.projection(p.free_rank + t, j) = x;
    }
  return p;
}

}  // namespace toricdec
