// SPDX-License-Identifier: Apache-2.0
//
// Fine-graded modules over S as expression trees over monomial matrices.
//
// Every node lives inside an ambient free module F = (+)_i S(-s_i) and is
// evaluated degreewise to a subquotient U/R with R <= U <= F_a. Generator
// e_i sits in degree s_i, so F_a has the basis {x^(a - s_i) e_i : s_i <= a}
// and every piece is a pair of subspaces of Q^rank(F). Multiplication by x^c
// is the identity on these coordinates.

#pragma once

#include "toricdec/grading.hpp"
#include "toricdec/linear_algebra.hpp"
#include "toricdec/polynomial.hpp"

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricdec {

class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Stand-in for -infinity in shift coordinates.
inline constexpr std::int64_t kNegInf = INT64_MIN / 4;
inline bool is_neg_inf(std::int64_t v) { return v <= kNegInf / 2; }

/// (+)_i S(-shifts[i]) over a ring in `nvars` variables.
struct FreeModuleSpec {
  std::size_t nvars = 0;
  std::vector<IntVector> shifts;

  FreeModuleSpec() = default;
  FreeModuleSpec(std::size_t nvars, std::vector<IntVector> shifts);
  /// S^rank with all generators in degree 0.
  static FreeModuleSpec standard(std::size_t nvars, std::size_t rank);

  std::size_t rank() const { return shifts.size(); }
  /// The twist F(d): every shift moves by -d.
  FreeModuleSpec shifted(const IntVector& d) const;
  /// Generators present in degree a, i.e. shift <= a.
  std::vector<bool> present(const IntVector& a) const;

  bool operator==(const FreeModuleSpec& rhs) const = default;
};

using MonomialGrid = std::vector<std::vector<Monomial>>;

/// Homogeneous map source -> target. Entry (i, j) is c * x^(source_j - target_i).
class MonomialMatrix {
 public:
  MonomialMatrix() = default;
  /// Throws std::invalid_argument if an entry breaks homogeneity.
  MonomialMatrix(FreeModuleSpec source, FreeModuleSpec target, MonomialGrid entries);

  const FreeModuleSpec& source() const { return source_; }
  const FreeModuleSpec& target() const { return target_; }
  std::size_t rows() const { return target_.rank(); }
  std::size_t cols() const { return source_.rank(); }
  std::size_t nvars() const { return source_.nvars; }
  const Monomial& entry(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const MonomialGrid& entries() const { return entries_; }

  RatMatrix coefficients() const;
  PolyMatrix polynomials() const;
  /// this * rhs; rhs.target must equal this->source.
  MonomialMatrix operator*(const MonomialMatrix& rhs) const;
  bool operator==(const MonomialMatrix& rhs) const = default;

  std::string to_string() const;

 private:
  FreeModuleSpec source_;
  FreeModuleSpec target_;
  MonomialGrid entries_;
};

std::string to_string(const Monomial& m);

/// Degreewise value of an expression, in ambient coordinates.
struct Subquotient {
  Subspace span;
  Subspace relations;
  std::size_t dim() const { return span.dim() - relations.dim(); }
  bool operator==(const Subquotient& rhs) const = default;
};

enum class NodeKind {
  Free,
  Image,
  Kernel,
  Cokernel,
  Intersection,
  Sum,
  Quotient,
  Zero,
  Colon,
  Saturation,
  Shift,
};

std::string to_string(NodeKind kind);

class ModuleExpr {
 public:
  struct Node;

  static ModuleExpr free(FreeModuleSpec spec);
  /// M(of), `of` defaulting to all of M's source.
  static ModuleExpr image(MonomialMatrix m, std::optional<ModuleExpr> of = std::nullopt);
  /// {v : M v in modulo}, `modulo` defaulting to 0.
  static ModuleExpr kernel(MonomialMatrix m, std::optional<ModuleExpr> modulo = std::nullopt);
  static ModuleExpr cokernel(MonomialMatrix m);
  static ModuleExpr intersection(std::vector<ModuleExpr> parts);
  static ModuleExpr sum(std::vector<ModuleExpr> parts);
  /// base / (by intersected with base).
  static ModuleExpr quotient(ModuleExpr base, ModuleExpr by);
  /// The zero submodule of `of`.
  static ModuleExpr zero(ModuleExpr of);
  /// N :_E x^c = {v in E : x^c v in N}.
  static ModuleExpr colon(ModuleExpr n, ModuleExpr e, IntVector c);
  /// N :_E (x^c)^infinity.
  static ModuleExpr saturation(ModuleExpr n, ModuleExpr e, IntVector c);
  /// of(d): the piece in degree a is of's piece in degree a + d.
  static ModuleExpr shift(ModuleExpr of, IntVector d);

  NodeKind kind() const;
  const FreeModuleSpec& ambient() const;
  std::size_t nvars() const { return ambient().nvars; }
  const std::vector<ModuleExpr>& children() const;
  /// Matrix of Image/Kernel/Cokernel nodes.
  const MonomialMatrix& matrix() const;
  /// c of Colon/Saturation, d of Shift.
  const IntVector& exponent() const;
  /// Degrees whose comparison with `a` decides the piece at a (coordinates may
  /// be kNegInf).
  const std::vector<IntVector>& support_shifts() const;

  std::string to_string() const;
  const Node* id() const { return node_.get(); }
  const Node& node() const { return *node_; }

 private:
  explicit ModuleExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ModuleExpr::Node {
  NodeKind kind;
  FreeModuleSpec ambient;
  std::vector<ModuleExpr> children;
  std::optional<MonomialMatrix> matrix;
  IntVector exponent;
  std::vector<IntVector> support;

  mutable std::shared_mutex cache_mutex;
  mutable std::map<IntVector, Subquotient> cache;
};

}  // namespace toricdec
