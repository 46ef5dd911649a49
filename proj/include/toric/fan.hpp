#ifndef TORIC_FAN_HPP
#define TORIC_FAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

struct IntersectionNotFace : Error {
  IntersectionNotFace(const std::string& what, Vec witness_point)
      : Error(what), witness(std::move(witness_point)) {}
  Vec witness;
};

struct NonSharpCone : Error {
  explicit NonSharpCone(const std::string& what) : Error(what) {}
};

struct FanFlags {
  bool complete = false;
  bool full = false;
  bool relatively_full_dimensional = false;
  bool relatively_skeletal_complete = false;
  bool simplicial = false;
  bool regular = false;
  bool affine = false;
  std::size_t dim = 0;
};

/// Fan: all faces closed under the face relation, with the face partial
/// order and pairwise infima precomputed.
class Fan {
public:
  std::size_t ambient_dim() const { return n_; }
  const std::vector<Cone>& cones() const { return cones_; }
  const std::vector<std::size_t>& max_cones() const { return max_; }
  /// Primitive generators of the 1-dimensional cones, in canonical order.
  const std::vector<Vec>& rays() const { return rays_; }
  /// Indices into rays() of the rays of cone ci.
  const std::vector<std::size_t>& cone_rays(std::size_t ci) const {
    return cone_rays_[ci];
  }
  bool is_face(std::size_t tau, std::size_t sigma) const {
    return face_[tau * cones_.size() + sigma];
  }
  std::size_t infimum(std::size_t a, std::size_t b) const {
    return inf_[a * cones_.size() + b];
  }
  /// All (tau, sigma) pairs with tau a face of sigma.
  std::vector<std::pair<std::size_t, std::size_t>> face_lattice() const;
  std::optional<std::size_t> find_cone(const Cone& c) const;
  std::size_t zero_cone_index() const;

  std::string to_string() const;

  friend Fan validate_fan(std::size_t ambient_dim, const std::vector<Cone>& max_cones);

private:
  std::size_t n_ = 0;
  std::vector<Cone> cones_;
  std::vector<std::size_t> max_;
  std::vector<Vec> rays_;
  std::vector<std::vector<std::size_t>> cone_rays_;
  std::vector<char> face_;
  std::vector<std::size_t> inf_;
};

/// Face closure + fan axioms. Throws NonSharpCone or IntersectionNotFace.
Fan validate_fan(std::size_t ambient_dim, const std::vector<Cone>& max_cones);

FanFlags classify_fan(const Fan& f);

/// The fan re-expressed in a basis of the saturated span lattice.
/// Returns the new fan and the n x dim change-of-basis matrix whose columns
/// express the new coordinates in the old ones.
std::pair<Fan, IntMatrix> full_fan_associated(const Fan& f);

}  // namespace toric

#endif
