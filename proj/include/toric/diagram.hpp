#ifndef TORIC_DIAGRAM_HPP
#define TORIC_DIAGRAM_HPP

#include <map>
#include <memory>

#include "toric/abelian.hpp"
#include "toric/fan.hpp"

namespace toric {

/// The ray-evaluation map, its cokernel A, the ray classes alpha_rho, and
/// the per-cone subgroups A^sigma, all precomputed for a fan.
class FanDiagram {
public:
  explicit FanDiagram(Fan fan);

  const Fan& fan() const { return fan_; }
  /// |rays| x n; row indexed like fan().rays().
  const IntMatrix& c_matrix() const { return c_; }
  const FinAbGroup& A() const { return A_; }
  const std::vector<Vec>& alpha() const { return alpha_; }           // per ray
  const std::vector<Vec>& alpha_hat() const { return alpha_hat_; }   // per cone
  const std::vector<Subgroup>& A_sigma() const { return A_sigma_; }  // per cone

  /// Kernel of a (= image of c) as a sublattice of Z^rays, column HNF basis.
  const IntMatrix& degree_kernel() const { return ker_a_; }
  /// Degree of an exponent vector in Z^rays.
  Vec degree_of(const Vec& exponents) const { return A_.project(exponents); }

private:
  Fan fan_;
  IntMatrix c_;
  FinAbGroup A_;
  std::vector<Vec> alpha_;
  std::vector<Vec> alpha_hat_;
  std::vector<Subgroup> A_sigma_;
  IntMatrix ker_a_;
};

FanDiagram build_diagram(const Fan& f);

/// Intersection of the A^sigma over the maximal cones. With
/// cross_check_all_cones the full intersection is verified to agree.
Subgroup picard_group(const FanDiagram& d, bool cross_check_all_cones = false);

/// A family of dual vectors, one per fan cone, compatible along rays.
class VirtualPolytope {
public:
  VirtualPolytope(const FanDiagram* d, std::vector<Vec> m_family);
  const std::vector<Vec>& m_family() const { return m_; }
  const FanDiagram& diagram() const { return *d_; }
  /// (rho_N(m_rho))_rho in Z^rays.
  Vec ray_evaluation() const;
  /// Class in A via the ray evaluation.
  Vec class_in_A() const;
  bool operator==(const VirtualPolytope& o) const { return m_ == o.m_; }

private:
  const FanDiagram* d_;
  std::vector<Vec> m_;
};

/// The unique representative of the class of p vanishing on all faces of
/// omega (components reduced canonically modulo the cone orthogonals).
VirtualPolytope normal_form_vp(const VirtualPolytope& p, std::size_t omega);

/// Build a virtual polytope representing a class alpha in picard_group.
VirtualPolytope vp_for_class(const FanDiagram& d, const Vec& alpha_in_A);

struct PolytopePicard {
  FinAbGroup pic;        // quotient of virtual polytopes by global duals
  Subgroup image_in_A;   // image of the comparison map into A
  bool witness_ok;       // image equals the intersection route and the
                         // abstract invariants agree
};
PolytopePicard picard_via_polytopes(const FanDiagram& d);

bool is_big(const Subgroup& s);
bool is_small(const Subgroup& s, const FanDiagram& d);

enum class ConeRegularity { regular, simplicial_only, neither };
/// Via the subgroup A^sigma (full: regular; big: simplicial).
ConeRegularity cone_regularity_via_diagram(const FanDiagram& d, std::size_t cone_index);

struct DegreeMonoidInfo {
  std::vector<Vec> generators;  // the alpha_rho
  bool sharp;
  bool all_alpha_nonzero;
  bool positive_image_trivial;  // im(c) meets the positive orthant only in 0
};
DegreeMonoidInfo degree_monoid_info(const FanDiagram& d);

struct TheoremViolation : Error {
  explicit TheoremViolation(const std::string& what) : Error(what) {}
};

struct TheoremCheck {
  std::string name;
  bool lhs, rhs;
  bool agree;
};

struct ClassificationReport {
  std::vector<TheoremCheck> checks;
  bool all_agree;
};

/// Evaluates both sides of each classification equivalence independently
/// (diagram side vs geometry side). Throws TheoremViolation on disagreement.
ClassificationReport fan_classification_theorems(const FanDiagram& d);

}  // namespace toric

#endif
