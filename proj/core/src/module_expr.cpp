// SPDX-License-Identifier: Apache-2.0

#include "toricdec/module_expr.hpp"

#include <algorithm>
#include <sstream>

namespace toricdec {

FreeModuleSpec::FreeModuleSpec(std::size_t nvars_, std::vector<IntVector> shifts_)
    : nvars(nvars_), shifts(std::move(shifts_)) {
  for (const auto& s : shifts)
    if (s.size() != nvars) throw std::invalid_argument("FreeModuleSpec: shift of wrong length");
}

FreeModuleSpec FreeModuleSpec::standard(std::size_t nvars, std::size_t rank) {
  return FreeModuleSpec(nvars, std::vector<IntVector>(rank, IntVector(nvars, 0)));
}

FreeModuleSpec FreeModuleSpec::shifted(const IntVector& d) const {
  if (d.size() != nvars) throw std::invalid_argument("FreeModuleSpec: twist of wrong length");
  FreeModuleSpec out = *this;
  for (auto& s : out.shifts)
    for (std::size_t i = 0; i < nvars; ++i) s[i] -= d[i];
  return out;
}

std::vector<bool> FreeModuleSpec::present(const IntVector& a) const {
  std::vector<bool> mask(shifts.size());
  for (std::size_t g = 0; g < shifts.size(); ++g) mask[g] = divides(shifts[g], a);
  return mask;
}

std::string to_string(const Monomial& m) {
  if (m.is_zero()) return "0";
  std::ostringstream os;
  const bool trivial = total_degree(m.exponent) == 0;
  if (m.coef == -1 && !trivial)
    os << '-';
  else if (m.coef != 1 || trivial)
    os << m.coef.get_str() << (trivial ? "" : "*");
  if (!trivial) os << monomial_string(m.exponent);
  return os.str();
}

MonomialMatrix::MonomialMatrix(FreeModuleSpec source, FreeModuleSpec target, MonomialGrid entries)
    : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
  if (source_.nvars != target_.nvars) throw std::invalid_argument("MonomialMatrix: variable count mismatch");
  if (entries_.size() != target_.rank())
    throw std::invalid_argument("MonomialMatrix: row count differs from target rank");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].size() != source_.rank())
      throw std::invalid_argument("MonomialMatrix: column count differs from source rank");
    for (std::size_t j = 0; j < entries_[i].size(); ++j) {
      Monomial& e = entries_[i][j];
      IntVector expected(source_.nvars);
      for (std::size_t k = 0; k < source_.nvars; ++k) expected[k] = source_.shifts[j][k] - target_.shifts[i][k];
      if (e.is_zero()) {
        e.exponent = expected;
        continue;
      }
      if (e.exponent != expected) {
        std::ostringstream os;
        os << "MonomialMatrix: entry (" << i << "," << j << ") = " << toricdec::to_string(e)
           << " is not homogeneous; expected exponent " << toricdec::to_string(expected);
        throw std::invalid_argument(os.str());
      }
      for (auto x : expected)
        if (x < 0) throw std::invalid_argument("MonomialMatrix: negative exponent in entry");
    }
  }
}

RatMatrix MonomialMatrix::coefficients() const {
  RatMatrix m(rows(), cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) m(i, j) = entries_[i][j].coef;
  return m;
}

PolyMatrix MonomialMatrix::polynomials() const {
  PolyMatrix out(rows(), std::vector<Polynomial>(cols(), Polynomial(nvars())));
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (!entries_[i][j].is_zero()) out[i][j] = Polynomial::monomial(entries_[i][j].coef, entries_[i][j].exponent);
  return out;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& rhs) const {
  if (!(source_ == rhs.target_)) throw AmbientMismatch("MonomialMatrix product: inner modules differ");
  MonomialGrid out(rows(), std::vector<Monomial>(rhs.cols()));
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      Rational c = 0;
      for (std::size_t k = 0; k < cols(); ++k) c += entries_[i][k].coef * rhs.entries_[k][j].coef;
      out[i][j].coef = c;
      if (c != 0) {
        IntVector d = rhs.source_.shifts[j];
        for (std::size_t v = 0; v < d.size(); ++v) d[v] -= target_.shifts[i][v];
        out[i][j].exponent = std::move(d);
      }
    }
  return MonomialMatrix(rhs.source_, target_, std::move(out));
}

std::string MonomialMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols(); ++j) os << (j ? ", " : "") << toricdec::to_string(entries_[i][j]);
  }
  os << ']';
  return os.str();
}

std::string to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Free: return "free";
    case NodeKind::Image: return "image";
    case NodeKind::Kernel: return "kernel";
    case NodeKind::Cokernel: return "cokernel";
    case NodeKind::Intersection: return "intersection";
    case NodeKind::Sum: return "sum";
    case NodeKind::Quotient: return "quotient";
    case NodeKind::Zero: return "zero";
    case NodeKind::Colon: return "colon";
    case NodeKind::Saturation: return "saturation";
    case NodeKind::Shift: return "shift";
  }
  return "?";
}

namespace {

void normalize(IntVector& s) {
  for (auto& x : s)
    if (is_neg_inf(x)) x = kNegInf;
}

IntVector minus(const IntVector& s, const IntVector& d) {
  IntVector out = s;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!is_neg_inf(s[i])) out[i] -= d[i];
  return out;
}

std::vector<IntVector> unite(std::vector<IntVector> acc) {
  for (auto& s : acc) normalize(s);
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  return acc;
}

void append(std::vector<IntVector>& acc, const std::vector<IntVector>& more) {
  acc.insert(acc.end(), more.begin(), more.end());
}

void require_same(const FreeModuleSpec& a, const FreeModuleSpec& b, const char* where) {
  if (!(a == b)) throw AmbientMismatch(std::string(where) + ": children live in different ambient modules");
}

void require_exponent(const IntVector& c, std::size_t nvars, bool nonnegative, const char* where) {
  if (c.size() != nvars) throw std::invalid_argument(std::string(where) + ": exponent of wrong length");
  if (nonnegative)
    for (auto x : c)
      if (x < 0) throw std::invalid_argument(std::string(where) + ": exponent must be nonnegative");
}

}  // namespace

ModuleExpr ModuleExpr::free(FreeModuleSpec spec) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Free;
  n->support = unite(spec.shifts);
  n->ambient = std::move(spec);
  return ModuleExpr(std::move(n));
}

ModuleExpr ModuleExpr::image(MonomialMatrix m, std::optional<ModuleExpr> of) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Image;
  n->ambient = m.target();
  std::vector<IntVector> sup = m.source().shifts;
  append(sup, m.target().shifts);
  if (of) {
    require_same(of->ambient(), m.source(), "image");
    append(sup, of->support_shifts());
    n->children.push_back(*of);
  }
  n->support = unite(std::move(sup));
  n->matrix = std::move(m);
  return ModuleExpr(std::move(n));
}

ModuleExpr ModuleExpr::kernel(MonomialMatrix m, std::optional<ModuleExpr> modulo) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Kernel;
  n->ambient = m.source();
  std::vector<IntVector> sup = m.source().shifts;
  append(sup, m.target().shifts);
  if (modulo) {
    require_same(modulo->ambient(), m.target(), "kernel");
    append(sup, modulo->support_shifts());
    n->children.push_back(*modulo);
  }
  n->support = unite(std::move(sup));
  n->matrix = std::move(m);
  return ModuleExpr(std::move(n));
}

ModuleExpr ModuleExpr::cokernel(MonomialMatrix m) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Cokernel;
  n->ambient = m.target();
  std::vector<IntVector> sup = m.source().shifts;
  append(sup, m.target().shifts);
  n->support = unite(std::move(sup));
  n->matrix = std::move(m);
  return ModuleExpr(std::move(n));
}

namespace {

std::shared_ptr<ModuleExpr::Node> combine(NodeKind kind, std::vector<ModuleExpr> parts, const char* where) {
  if (parts.empty()) throw std::invalid_argument(std::string(where) + ": needs at least one part");
  auto n = std::make_shared<ModuleExpr::Node>();
  n->kind = kind;
  n->ambient = parts.front().ambient();
  std::vector<IntVector> sup;
  for (const auto& p : parts) {
    require_same(p.ambient(), n->ambient, where);
    append(sup, p.support_shifts());
  }
  n->support = unite(std::move(sup));
  n->children = std::move(parts);
  return n;
}

}  // namespace

ModuleExpr ModuleExpr::intersection(std::vector<ModuleExpr> parts) {
  return ModuleExpr(combine(NodeKind::Intersection, std::move(parts), "intersection"));
}

ModuleExpr ModuleExpr::sum(std::vector<ModuleExpr> parts) {
  return ModuleExpr(combine(NodeKind::Sum, std::move(parts), "sum"));
}

ModuleExpr ModuleExpr::quotient(ModuleExpr base, ModuleExpr by) {
  return ModuleExpr(combine(NodeKind::Quotient, {std::move(base), std::move(by)}, "quotient"));
}

ModuleExpr ModuleExpr::zero(ModuleExpr of) {
  return ModuleExpr(combine(NodeKind::Zero, {std::move(of)}, "zero"));
}

ModuleExpr ModuleExpr::colon(ModuleExpr nn, ModuleExpr e, IntVector c) {
  require_exponent(c, e.nvars(), true, "colon");
  auto n = combine(NodeKind::Colon, {std::move(nn), std::move(e)}, "colon");
  std::vector<IntVector> sup = n->support;
  for (const auto& s : n->support) sup.push_back(minus(s, c));
  n->support = unite(std::move(sup));
  n->exponent = std::move(c);
  return ModuleExpr(std::move(n));
}

ModuleExpr ModuleExpr::saturation(ModuleExpr nn, ModuleExpr e, IntVector c) {
  require_exponent(c, e.nvars(), true, "saturation");
  auto n = combine(NodeKind::Saturation, {std::move(nn), std::move(e)}, "saturation");
  std::vector<IntVector> sup = n->support;
  for (auto s : n->support) {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (c[i] > 0) s[i] = kNegInf;
    sup.push_back(std::move(s));
  }
  n->support = unite(std::move(sup));
  n->exponent = std::move(c);
  return ModuleExpr(std::move(n));
}

ModuleExpr ModuleExpr::shift(ModuleExpr of, IntVector d) {
  require_exponent(d, of.nvars(), false, "shift");
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Shift;
  n->ambient = of.ambient().shifted(d);
  std::vector<IntVector> sup;
  for (const auto& s : of.support_shifts()) sup.push_back(minus(s, d));
  n->support = unite(std::move(sup));
  n->children.push_back(std::move(of));
  n->exponent = std::move(d);
  return ModuleExpr(std::move(n));
}

NodeKind ModuleExpr::kind() const { return node_->kind; }
const FreeModuleSpec& ModuleExpr::ambient() const { return node_->ambient; }
const std::vector<ModuleExpr>& ModuleExpr::children() const { return node_->children; }
const IntVector& ModuleExpr::exponent() const { return node_->exponent; }
const std::vector<IntVector>& ModuleExpr::support_shifts() const { return node_->support; }

const MonomialMatrix& ModuleExpr::matrix() const {
  if (!node_->matrix) throw std::logic_error("ModuleExpr: node has no matrix");
  return *node_->matrix;
}

std::string ModuleExpr::to_string() const {
  std::ostringstream os;
  os << toricdec::to_string(kind()) << '(';
  switch (kind()) {
    case NodeKind::Free:
      os << "rank " << ambient().rank();
      break;
    case NodeKind::Image:
    case NodeKind::Kernel:
    case NodeKind::Cokernel:
      os << matrix().to_string();
      for (const auto& c : children()) os << ", " << c.to_string();
      break;
    default: {
      bool first = true;
      for (const auto& c : children()) {
        os << (first ? "" : ", ") << c.to_string();
        first = false;
      }
      if (kind() == NodeKind::Colon || kind() == NodeKind::Saturation || kind() == NodeKind::Shift)
        os << ", " << toricdec::to_string(exponent());
    }
  }
  os << ')';
  return os.str();
}

}  // namespace toricdec
