// SPDX-License-Identifier: Apache-2.0

#include "toricdec/grading.hpp"

namespace toricdec {

namespace {

IntMatrix columns_to_matrix(std::size_t rows, const std::vector<std::vector<Integer>>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

}  // namespace

void GradingSetup::finish() {
  group_ = cokernel_presentation(kernel_);
  var_classes_.clear();
  for (std::size_t i = 0; i < num_vars_; ++i) {
    IntVector e(num_vars_, 0);
    e[i] = 1;
    var_classes_.push_back(group_.project(e));
  }
}

GradingSetup GradingSetup::from_fan(std::shared_ptr<const Fan> fan) {
  if (!fan) throw GradingError("from_fan: null fan");
  GradingSetup s;
  s.num_vars_ = fan->num_rays();
  s.kernel_ = fan->div_matrix();
  s.fan_ = fan;
  std::vector<IntVector> gens;
  for (const auto& cone : fan->max_cones()) {
    IntVector e(s.num_vars_, 1);
    for (auto i : cone) e[i] = 0;
    gens.push_back(std::move(e));
  }
  s.irrelevant_ = MonomialIdeal(s.num_vars_, std::move(gens));
  s.finish();
  return s;
}

GradingSetup GradingSetup::explicit_grading(std::size_t num_vars, const IntMatrix& class_matrix,
                                            const std::vector<Integer>& torsion,
                                            const std::vector<IntVector>& irrelevant_gens) {
  const std::size_t coords = class_matrix.rows();
  if (coords > 0 && class_matrix.cols() != num_vars)
    throw GradingError("explicit grading: class matrix needs one column per variable");
  if (torsion.size() > coords)
    throw GradingError("explicit grading: more torsion moduli than class coordinates");
  for (const auto& t : torsion)
    if (t < 2) throw GradingError("explicit grading: torsion moduli must be >= 2");
  const std::size_t free = coords - torsion.size();

  // [C | R] with R the torsion relations; cl is onto iff this is onto Z^coords.
  IntMatrix joint(coords, num_vars + torsion.size());
  for (std::size_t i = 0; i < coords; ++i)
    for (std::size_t j = 0; j < num_vars; ++j) joint(i, j) = class_matrix(i, j);
  for (std::size_t k = 0; k < torsion.size(); ++k) joint(free + k, num_vars + k) = torsion[k];
  const SmithForm snf = smith_normal_form(joint);
  bool onto = snf.rank == coords;
  for (const auto& d : snf.invariant_factors()) onto = onto && d == 1;
  if (!onto) throw GradingError("explicit grading: class map is not surjective");

  // ker(cl) is the projection of ker [C | R] to the first r coordinates.
  const IntMatrix k = kernel_basis(joint);
  IntMatrix gens(k.cols(), num_vars);
  for (std::size_t c = 0; c < k.cols(); ++c)
    for (std::size_t i = 0; i < num_vars; ++i) gens(c, i) = k(i, c);
  const HermiteForm h = hermite_normal_form(gens);
  std::vector<std::vector<Integer>> basis;
  for (std::size_t row = 0; row < h.rank; ++row) basis.push_back(h.H.row(row));

  GradingSetup s;
  s.num_vars_ = num_vars;
  s.kernel_ = columns_to_matrix(num_vars, basis);
  for (const auto& g : irrelevant_gens)
    if (g.size() != num_vars) throw GradingError("explicit grading: irrelevant generator of wrong length");
  s.irrelevant_ = MonomialIdeal(num_vars, irrelevant_gens);
  s.finish();
  return s;
}

const Fan& GradingSetup::fan() const {
  if (!fan_) throw std::logic_error("grading setup has no fan");
  return *fan_;
}

LaurentMonomial GradingSetup::char_monomial(const IntVector& m) const {
  return {fan().pairing(m)};
}

std::vector<IntVector> GradingSetup::degree_zero_points(std::int64_t bound) const {
  const std::size_t k = kernel_.cols();
  std::vector<IntVector> out;
  if (bound < 0) return out;
  std::vector<std::int64_t> lambda(k, -bound);
  for (;;) {
    IntVector p(num_vars_, 0);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      Integer acc = 0;
      for (std::size_t j = 0; j < k; ++j) acc += kernel_(i, j) * lambda[j];
      p[i] = acc.get_si();
    }
    out.push_back(std::move(p));
    std::size_t j = k;
    while (j > 0 && lambda[j - 1] == bound) lambda[--j] = -bound;
    if (j == 0) break;
    ++lambda[j - 1];
  }
  return out;
}

std::vector<IntVector> GradingSetup::chart_monomials() const {
  if (fan_) {
    std::vector<IntVector> out;
    for (const auto& cone : fan_->max_cones()) {
      IntVector e(num_vars_, 1);
      for (auto i : cone) e[i] = 0;
      out.push_back(std::move(e));
    }
    return out;
  }
  return irrelevant_.generators();
}

bool GradingSetup::relevant(const VarSet& prime) const {
  return !MonomialIdeal::variables(num_vars_, prime).contains(irrelevant_);
}

bool GradingSetup::free_on_chart(const IntVector& c) const {
  std::vector<std::vector<Integer>> cols;
  for (std::size_t i = 0; i < num_vars_; ++i) {
    if (c.at(i) <= 0) continue;
    std::vector<Integer> e(num_vars_, 0);
    e[i] = 1;
    cols.push_back(std::move(e));
  }
  for (std::size_t j = 0; j < kernel_.cols(); ++j) cols.push_back(kernel_.column(j));
  return cokernel_presentation(columns_to_matrix(num_vars_, cols)).is_trivial();
}

}  // namespace toricdec
