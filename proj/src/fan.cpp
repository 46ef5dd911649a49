#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace toric {

std::vector<std::pair<std::size_t, std::size_t>> Fan::face_lattice() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t t = 0; t < cones_.size(); ++t)
    for (std::size_t s = 0; s < cones_.size(); ++s)
      if (face_[t * cones_.size() + s]) out.emplace_back(t, s);
  return out;
}

std::optional<std::size_t> Fan::find_cone(const Cone& c) const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i] == c) return i;
  return std::nullopt;
}

std::size_t Fan::zero_cone_index() const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].dim() == 0) return i;
  throw Error("Fan: zero cone missing");
}

std::string Fan::to_string() const {
  std::ostringstream os;
  os << "fan(n=" << n_ << ", cones=" << cones_.size() << ", max=" << max_.size()
     << ", rays=" << rays_.size() << ")";
  return os.str();
}

Fan validate_fan(std::size_t ambient_dim, const std::vector<Cone>& max_cones) {
  Fan f;
  f.n_ = ambient_dim;
  for (const Cone& c : max_cones) {
    if (c.ambient_dim() != ambient_dim) throw Error("validate_fan: dimension mismatch");
    if (!c.is_sharp()) throw NonSharpCone("validate_fan: cone contains a line: " + c.to_string());
  }
  // pairwise condition on the input cones
  for (std::size_t i = 0; i < max_cones.size(); ++i) {
    std::vector<Cone> faces_i = max_cones[i].faces();
    for (std::size_t j = 0; j < max_cones.size(); ++j) {
      if (i == j) continue;
      Cone meet = intersect(max_cones[i], max_cones[j]);
      bool ok = std::find(faces_i.begin(), faces_i.end(), meet) != faces_i.end();
      if (!ok) {
        Vec witness = zero_vec(ambient_dim);
        for (const Vec& r : meet.rays()) witness = add(witness, r);
        throw IntersectionNotFace(
            "validate_fan: intersection of " + max_cones[i].to_string() + " and " +
                max_cones[j].to_string() + " is not a common face",
            witness);
      }
    }
  }
  // face closure
  std::set<Cone> closure;
  for (const Cone& c : max_cones) {
    std::vector<Cone> fc = c.faces();
    closure.insert(fc.begin(), fc.end());
  }
  closure.insert(Cone::zero(ambient_dim));
  f.cones_.assign(closure.begin(), closure.end());

  const std::size_t m = f.cones_.size();
  // face relation: tau is a face of sigma
  f.face_.assign(m * m, 0);
  std::vector<std::vector<Cone>> all_faces(m);
  for (std::size_t s = 0; s < m; ++s) all_faces[s] = f.cones_[s].faces();
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t s = 0; s < m; ++s)
      f.face_[t * m + s] = std::find(all_faces[s].begin(), all_faces[s].end(),
                                     f.cones_[t]) != all_faces[s].end();
  // maximal cones
  for (std::size_t s = 0; s < m; ++s) {
    bool maximal = true;
    for (std::size_t t = 0; t < m && maximal; ++t)
      if (t != s && f.face_[s * m + t]) maximal = false;
    if (maximal) f.max_.push_back(s);
  }
  // rays
  std::set<Vec> rayset;
  for (const Cone& c : f.cones_)
    if (c.dim() == 1) rayset.insert(c.rays()[0]);
  f.rays_.assign(rayset.begin(), rayset.end());
  f.cone_rays_.resize(m);
  for (std::size_t s = 0; s < m; ++s) {
    for (const Vec& r : f.cones_[s].rays()) {
      auto it = std::lower_bound(f.rays_.begin(), f.rays_.end(), r);
      if (it == f.rays_.end() || *it != r)
        throw Error("validate_fan: ray closure inconsistency");
      f.cone_rays_[s].push_back(std::size_t(it - f.rays_.begin()));
    }
    std::sort(f.cone_rays_[s].begin(), f.cone_rays_[s].end());
  }
  // pairwise infima
  f.inf_.assign(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      Cone meet = intersect(f.cones_[a], f.cones_[b]);
      auto idx = f.find_cone(meet);
      if (!idx) throw Error("validate_fan: infimum escaped the fan");
      f.inf_[a * m + b] = *idx;
      f.inf_[b * m + a] = *idx;
    }
  return f;
}

FanFlags classify_fan(const Fan& f) {
  FanFlags flags;
  const std::size_t n = f.ambient_dim();
  IntMatrix raymat = f.rays().empty() ? IntMatrix(n, 0)
                                      : IntMatrix::from_cols(f.rays());
  flags.dim = rank(raymat);
  flags.full = (flags.dim == n);
  flags.affine = f.max_cones().size() <= 1;

  flags.simplicial = true;
  flags.regular = true;
  for (const Cone& c : f.cones()) {
    if (c.dim() == 0) continue;
    IntMatrix rm = IntMatrix::from_cols(c.rays());
    bool simp = rank(rm) == c.rays().size();
    bool reg = false;
    if (simp) {
      SmithResult s = smith_normal_form(rm);
      reg = true;
      for (std::size_t i = 0; i < c.rays().size(); ++i)
        if (s.D.at(i, i) != 1) reg = false;
    }
    flags.simplicial = flags.simplicial && simp;
    flags.regular = flags.regular && reg;
  }

  // relatively full-dimensional: a cone of dimension dim(fan) exists
  for (const Cone& c : f.cones())
    if (c.dim() == flags.dim) flags.relatively_full_dimensional = true;

  // relatively skeletal complete: the conic hull of the rays is a subspace,
  // tested by membership of the negated rays
  {
    Cone hull = Cone::from_generators(n, f.rays());
    flags.relatively_skeletal_complete = true;
    for (const Vec& r : f.rays())
      if (!hull.contains(scale(Int(-1), r)))
        flags.relatively_skeletal_complete = false;
    if (f.cones().empty()) flags.relatively_skeletal_complete = true;
  }

  // completeness: full-dimensional, all maximal cones of dimension n, and
  // every (n-1)-face of a maximal cone shared by exactly two maximal cones
  if (!f.cones().empty()) {
    if (n == 0) {
      flags.complete = true;
    } else if (flags.full) {
      bool pure = !f.max_cones().empty();
      for (std::size_t s : f.max_cones())
        if (f.cones()[s].dim() != n) pure = false;
      if (pure) {
        bool paired = true;
        for (std::size_t t = 0; t < f.cones().size(); ++t) {
          if (f.cones()[t].dim() != n - 1) continue;
          std::size_t count = 0;
          for (std::size_t s : f.max_cones())
            if (f.is_face(t, s)) ++count;
          if (count != 2) paired = false;
        }
        flags.complete = paired;
      }
    }
  }
  return flags;
}

std::pair<Fan, IntMatrix> full_fan_associated(const Fan& f) {
  const std::size_t n = f.ambient_dim();
  // saturated basis of the span of the rays
  IntMatrix raymat = f.rays().empty() ? IntMatrix(n, 0)
                                      : IntMatrix::from_cols(f.rays());
  IntMatrix perp = kernel_basis(raymat.transpose());
  IntMatrix span = kernel_basis(perp.transpose());
  HermiteResult h = column_hnf(span);
  IntMatrix basis(n, h.rank);
  for (std::size_t t = 0; t < h.rank; ++t)
    for (std::size_t i = 0; i < n; ++i) basis.at(i, t) = h.H.at(i, t);

  std::vector<Cone> new_max;
  for (std::size_t s : f.max_cones()) {
    std::vector<Vec> new_rays;
    for (const Vec& r : f.cones()[s].rays()) {
      auto x = solve_integer(basis, r);
      if (!x) throw Error("full_fan_associated: ray outside span lattice");
      new_rays.push_back(*x);
    }
    new_max.push_back(Cone::from_generators(basis.cols(), new_rays));
  }
  return {validate_fan(basis.cols(), new_max), basis};
}

}  // namespace toric
