// SPDX-License-Identifier: Apache-2.0
//
// Fans of strongly convex rational polyhedral cones, stored by their ray
// generators. The order of the rays fixes the order of the Cox variables.

#pragma once

#include "toricdec/integer_matrix.hpp"

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricdec {

/// Sorted list of ray indices.
using Cone = std::vector<std::size_t>;

class FanError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Fan {
 public:
  /// Validates the input and throws FanError with a diagnostic on failure.
  Fan(std::size_t ambient_dim, std::vector<IntVector> rays, std::vector<Cone> max_cones);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t num_rays() const { return rays_.size(); }
  const std::vector<IntVector>& rays() const { return rays_; }
  const IntVector& ray(std::size_t i) const { return rays_.at(i); }
  const std::vector<Cone>& max_cones() const { return max_cones_; }
  /// Every face of every maximal cone, the zero cone included, sorted.
  const std::vector<Cone>& cones() const { return cones_; }

  bool contains_cone(const Cone& cone) const;
  /// Faces of a cone of this fan (itself and the zero cone included).
  std::vector<Cone> faces(const Cone& cone) const;

  bool is_simplicial(const Cone& cone) const;
  bool is_smooth(const Cone& cone) const;
  bool is_simplicial(std::size_t max_cone_index) const {
    return is_simplicial(max_cones_.at(max_cone_index));
  }
  bool is_smooth(std::size_t max_cone_index) const {
    return is_smooth(max_cones_.at(max_cone_index));
  }
  bool is_smooth() const;

  /// <m, n(rho)> >= 0 for every ray of the cone.
  bool dual_membership(const Cone& cone, const IntVector& m) const;
  /// Some cone of the fan contains all rays in `rays`.
  bool relevant_prime(const std::vector<std::size_t>& rays) const;
  std::vector<Cone> nonsimplicial_locus() const;

  /// The map div : M -> Z^{rays}, rows indexed by rays.
  IntMatrix div_matrix() const;
  /// Rows are the generators of the cone.
  IntMatrix ray_matrix(const Cone& cone) const;
  /// (<m, n(rho)>)_rho.
  IntVector pairing(const IntVector& m) const;

  /// dim of the linear span of the cone.
  std::size_t cone_dim(const Cone& cone) const;

 private:
  void require_cone(const Cone& cone) const;

  std::size_t dim_;
  std::vector<IntVector> rays_;
  std::vector<Cone> max_cones_;
  std::vector<Cone> cones_;
};

std::int64_t inner(const IntVector& a, const IntVector& b);
std::string to_string(const IntVector& v);
std::string cone_string(const Cone& cone);

namespace standard_fans {

std::shared_ptr<const Fan> projective_line();
std::shared_ptr<const Fan> projective_plane();
std::shared_ptr<const Fan> projective_space(std::size_t n);
std::shared_ptr<const Fan> p1_x_p1();
/// Single cone spanned by (1,0), (1,2): the A_1 singularity.
std::shared_ptr<const Fan> quadric_cone();
/// Single cone over a square: e1, e2, e1+e3, e2+e3.
std::shared_ptr<const Fan> cone_over_square();
/// Positive orthant in Z^n.
std::shared_ptr<const Fan> affine_space(std::size_t n);

}  // namespace standard_fans

}  // namespace toricdec
