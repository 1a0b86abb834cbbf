// SPDX-License-Identifier: Apache-2.0
//
// Exact integer matrix algebra: Smith and Hermite normal forms, lattice
// kernels and presentations of finitely generated abelian groups.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toricdec {

using Integer = mpz_class;
using IntVector = std::vector<std::int64_t>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows,
                             std::size_t cols_if_empty = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::vector<Integer> row(std::size_t i) const;
  std::vector<Integer> column(std::size_t j) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<Integer> operator*(const std::vector<Integer>& v) const;
  bool operator==(const IntMatrix& rhs) const;

  // Row and column operations used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& a);
/// Rank over the rationals, computed fraction-free.
std::size_t rank(const IntMatrix& a);

struct SmithForm {
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix D;  // diagonal, d_1 | d_2 | ... | d_rank, positive
  IntMatrix V;  // unimodular, cols x cols
  std::size_t rank = 0;

  std::vector<Integer> invariant_factors() const;
};

/// U * A * V = D with the divisibility chain on the diagonal.
/// Pivots are chosen by smallest nonzero absolute value.
SmithForm smith_normal_form(const IntMatrix& a);

struct HermiteForm {
  IntMatrix H;          // row echelon, positive pivots, reduced above pivots
  IntMatrix transform;  // unimodular T with T * A = H
  std::size_t rank = 0;
};

/// Row-style Hermite normal form. Zero rows are collected at the bottom.
HermiteForm hermite_normal_form(const IntMatrix& a);

/// Saturated lattice basis of {v : A v = 0}, returned as the columns of the
/// result and canonicalized by Hermite reduction.
IntMatrix kernel_basis(const IntMatrix& a);

/// Integral solution of A x = b, free coordinates set to zero in column order.
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a,
                                                  const std::vector<Integer>& b);

/// Z^free_rank (+) Z/d_1 (+) ... with d_i | d_{i+1}, d_i >= 2, and a projection
/// from an ambient Z^r. The first free_rank rows of `projection` are the free
/// coordinates; the remaining rows are torsion coordinates, reduced mod d_i.
struct AbelianGroupPresentation {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  IntMatrix projection;

  std::size_t num_coordinates() const { return free_rank + torsion.size(); }
  std::size_t ambient_rank() const { return projection.cols(); }
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

  /// Image of an ambient vector, torsion coordinates in [0, d_i).
  std::vector<Integer> project(const std::vector<Integer>& v) const;
  std::vector<Integer> project(const IntVector& v) const;
  /// Torsion coordinates reduced into [0, d_i).
  std::vector<Integer> reduce(std::vector<Integer> element) const;
  bool is_zero_class(const std::vector<Integer>& element) const;

  /// "Z", "Z^2", "Z/2", "Z + Z/3", "0".
  std::string group_string() const;

  bool operator==(const AbelianGroupPresentation& rhs) const;
};

/// Presentation of Z^rows / im(A).
AbelianGroupPresentation cokernel_presentation(const IntMatrix& a);

std::string to_string(const std::vector<Integer>& v);

}  // namespace toricdec
