#ifndef TORIC_CONE_HPP
#define TORIC_CONE_HPP

#include <string>
#include <vector>

#include "toric/int_matrix.hpp"

namespace toric {

/// v / gcd(v), same direction. Errors on the zero vector.
Vec primitive_ray(const Vec& v);

/// Rational polyhedral cone in Z^n, canonicalized on construction:
/// saturated span lattice (HNF basis), primitive facet normals in span
/// coordinates, lineality basis, and extreme-ray generators.
class Cone {
public:
  static Cone from_generators(std::size_t ambient_dim,
                              const std::vector<Vec>& generators);
  static Cone zero(std::size_t ambient_dim) { return from_generators(ambient_dim, {}); }

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return span_basis_.cols(); }
  std::size_t lineality_dim() const { return lineality_.cols(); }
  bool is_sharp() const { return lineality_dim() == 0; }

  /// Extreme rays (sharp cones) or pointed-part rays modulo lineality,
  /// primitive, sorted. For non-sharp cones see also lineality_basis().
  const std::vector<Vec>& rays() const { return rays_; }
  const IntMatrix& lineality_basis() const { return lineality_; }
  const IntMatrix& span_basis() const { return span_basis_; }

  /// Generator list: rays plus +-lineality basis vectors.
  std::vector<Vec> generators() const;

  bool contains(const Vec& v) const;
  /// {u : u(cone) >= 0} in the dual lattice.
  Cone dual() const;
  /// All faces (sharp cones only), including {0} and the cone itself.
  std::vector<Cone> faces() const;

  bool operator==(const Cone& o) const;
  /// Total order for deterministic containers.
  bool operator<(const Cone& o) const { return sort_key() < o.sort_key(); }
  std::string sort_key() const;
  std::string to_string() const;

  /// Facet normals lifted to the ambient dual lattice (canonical lifts).
  std::vector<Vec> lifted_facet_normals() const;
  /// Basis of the functionals vanishing on the span.
  IntMatrix perp_basis() const;

private:
  Cone() = default;
  std::size_t n_ = 0;
  IntMatrix span_basis_;             // n x d, saturated, column HNF
  std::vector<Vec> facet_normals_;   // in span coordinates (length d), sorted
  IntMatrix lineality_;              // n x l, saturated, column HNF
  std::vector<Vec> rays_;            // ambient coordinates, primitive, sorted
};

Cone intersect(const Cone& a, const Cone& b);

}  // namespace toric

#endif
