#ifndef TORIC_ABELIAN_HPP
#define TORIC_ABELIAN_HPP

#include <optional>

#include "toric/int_matrix.hpp"

namespace toric {

/// Finitely generated abelian group presented as Z^s0 / column-span(P),
/// normalized to invariant factors d1 | d2 | ... (each >= 2) plus a free part.
/// Elements are coordinate vectors of length #factors + free_rank with
/// torsion coordinates reduced into [0, d).
class FinAbGroup {
public:
  FinAbGroup() = default;  // trivial group
  explicit FinAbGroup(const IntMatrix& presentation);

  static FinAbGroup free_group(std::size_t rank);

  const std::vector<Int>& invariant_factors() const { return factors_; }
  std::size_t free_rank() const { return free_rank_; }
  std::size_t coord_size() const { return factors_.size() + free_rank_; }
  std::size_t ambient_rank() const { return ambient_rank_; }
  const IntMatrix& presentation() const { return presentation_; }

  bool is_trivial() const { return coord_size() == 0; }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_free() const { return factors_.empty(); }
  /// Order of the torsion part.
  Int torsion_order() const;

  /// Class of a vector in Z^ambient_rank.
  Vec project(const Vec& v) const;
  /// A representative in Z^ambient_rank of a coordinate element.
  Vec lift(const Vec& element) const;
  /// Canonical form of an unreduced coordinate vector.
  Vec reduce(Vec element) const;

  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec neg(const Vec& a) const;
  Vec smul(const Int& c, const Vec& a) const;
  Vec zero() const { return Vec(coord_size()); }
  bool is_zero_elem(const Vec& a) const;

  /// Structural identity: same coordinate semantics.
  bool same_shape(const FinAbGroup& o) const {
    return factors_ == o.factors_ && free_rank_ == o.free_rank_;
  }

  /// Relation lattice in coordinate space: columns d_i * e_i.
  IntMatrix relation_lattice() const;

  std::string describe() const;  // e.g. "Z/2 + Z^1"

private:
  std::vector<Int> factors_;
  std::size_t free_rank_ = 0;
  std::size_t ambient_rank_ = 0;
  IntMatrix presentation_;
  IntMatrix proj_;  // coord_size x ambient_rank
  IntMatrix lift_;  // ambient_rank x coord_size
};

/// Group Z^rows / column-span(m).
FinAbGroup cokernel(const IntMatrix& m);

/// Subgroup of a FinAbGroup given by generators, held in canonical form
/// (HNF basis of the preimage lattice in coordinate space).
class Subgroup {
public:
  Subgroup(FinAbGroup ambient, const std::vector<Vec>& generators);
  static Subgroup full(const FinAbGroup& ambient);
  static Subgroup trivial(const FinAbGroup& ambient);

  const FinAbGroup& ambient() const { return ambient_; }
  const std::vector<Vec>& generators() const { return gens_; }
  const IntMatrix& lattice() const { return lattice_; }

  bool contains(const Vec& element) const;
  bool contains_subgroup(const Subgroup& other) const;
  bool is_full() const;
  bool operator==(const Subgroup& o) const;

  /// Index in the ambient group; nullopt means infinite.
  std::optional<Int> index() const;

  /// Ambient/this as an abstract group.
  FinAbGroup quotient_group() const;
  /// This subgroup as an abstract group.
  FinAbGroup group() const;

private:
  Subgroup() = default;
  void canonicalize();
  FinAbGroup ambient_;
  IntMatrix lattice_;       // canonical HNF basis columns (nonzero only)
  std::vector<Vec> gens_;   // canonical projected generators
};

Subgroup subgroup_intersection(const std::vector<Subgroup>& gs);

/// Finite index or "infinite".
struct Cardinal {
  bool finite;
  Int value;  // meaningful when finite
  bool operator==(const Cardinal& o) const {
    return finite == o.finite && (!finite || value == o.value);
  }
};
Cardinal subgroup_index(const Subgroup& s);

}  // namespace toric

#endif
