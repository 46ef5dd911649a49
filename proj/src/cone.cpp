#include "toric/cone.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace toric {

Vec primitive_ray(const Vec& v) {
  Int g = content(v);
  if (g == 0) throw Error("primitive_ray: zero vector");
  Vec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
  return w;
}

namespace {

// saturated lattice basis of the Q-span of the given vectors, column HNF
IntMatrix saturated_span_basis(std::size_t n, const std::vector<Vec>& vecs) {
  if (vecs.empty()) return IntMatrix(n, 0);
  IntMatrix gt = IntMatrix::from_rows(vecs);       // k x n
  IntMatrix perp = kernel_basis(gt);               // n x (n-d), functionals
  IntMatrix span = kernel_basis(perp.transpose()); // n x d, saturated
  HermiteResult h = column_hnf(span);
  IntMatrix basis(n, h.rank);
  for (std::size_t t = 0; t < h.rank; ++t)
    for (std::size_t i = 0; i < n; ++i) basis.at(i, t) = h.H.at(i, t);
  return basis;
}

// coordinates of v in the columns of basis; throws if not in the lattice
Vec coords_in(const IntMatrix& basis, const Vec& v) {
  auto x = solve_integer(basis, v);
  if (!x) throw Error("coords_in: vector outside lattice");
  return *x;
}

// facet normals of a full-dimensional cone in Z^d given by generators
std::vector<Vec> full_dim_facet_normals(std::size_t d, const std::vector<Vec>& gens) {
  std::vector<Vec> normals;
  if (d == 0) return normals;
  if (d == 1) {
    bool pos = false, neg = false;
    for (const Vec& g : gens) (g[0] > 0 ? pos : neg) = true;
    if (pos && !neg) normals.push_back({Int(1)});
    if (neg && !pos) normals.push_back({Int(-1)});
    return normals;  // mixed signs: the cone is a line, no facets
  }
  std::set<Vec> seen;
  std::vector<std::size_t> idx(d - 1);
  // enumerate (d-1)-subsets of generators
  std::vector<std::size_t> comb(d - 1);
  std::size_t k = gens.size();
  if (k < d - 1) return normals;
  for (std::size_t i = 0; i < d - 1; ++i) comb[i] = i;
  while (true) {
    std::vector<Vec> rows;
    for (std::size_t i : comb) rows.push_back(gens[i]);
    IntMatrix m = IntMatrix::from_rows(rows);
    IntMatrix ker = kernel_basis(m);
    if (ker.cols() == 1) {
      Vec u = primitive_ray(ker.col(0));
      bool pos = false, neg = false;
      for (const Vec& g : gens) {
        Int s = dot(u, g);
        if (s > 0) pos = true;
        if (s < 0) neg = true;
      }
      if (!(pos && neg)) {
        if (neg) u = scale(Int(-1), u);
        if (pos || neg) seen.insert(u);
      }
    }
    // next combination
    std::size_t i = d - 1;
    while (i > 0 && comb[i - 1] == k - (d - 1) + (i - 1)) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < d - 1; ++j) comb[j] = comb[j - 1] + 1;
  }
  normals.assign(seen.begin(), seen.end());
  return normals;
}

}  // namespace

Cone Cone::from_generators(std::size_t ambient_dim, const std::vector<Vec>& generators) {
  Cone c;
  c.n_ = ambient_dim;
  std::set<Vec> prim;
  for (const Vec& g : generators) {
    if (g.size() != ambient_dim) throw Error("Cone: generator dimension mismatch");
    if (is_zero(g)) continue;
    prim.insert(primitive_ray(g));
  }
  std::vector<Vec> gens(prim.begin(), prim.end());
  c.span_basis_ = saturated_span_basis(ambient_dim, gens);
  const std::size_t d = c.span_basis_.cols();

  std::vector<Vec> local;
  for (const Vec& g : gens) local.push_back(coords_in(c.span_basis_, g));
  c.facet_normals_ = full_dim_facet_normals(d, local);
  std::sort(c.facet_normals_.begin(), c.facet_normals_.end());

  // lineality: local vectors orthogonal to every facet normal
  IntMatrix nm = c.facet_normals_.empty()
                     ? IntMatrix(0, d)
                     : IntMatrix::from_rows(c.facet_normals_);
  IntMatrix lin_local = kernel_basis(nm);  // d x l
  {
    std::vector<Vec> lin_ambient;
    for (std::size_t t = 0; t < lin_local.cols(); ++t)
      lin_ambient.push_back(mul_vec(c.span_basis_, lin_local.col(t)));
    c.lineality_ = saturated_span_basis(ambient_dim, lin_ambient);
  }

  // extreme rays
  if (c.lineality_.cols() == 0) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      std::vector<Vec> active;
      for (const Vec& u : c.facet_normals_)
        if (dot(u, local[gi]) == 0) active.push_back(u);
      std::size_t r = active.empty() ? 0 : rank(IntMatrix::from_rows(active));
      if (d >= 1 && r + 1 == d) c.rays_.push_back(gens[gi]);
    }
    std::sort(c.rays_.begin(), c.rays_.end());
  } else {
    // pointed-part rays: extreme rays of the image modulo lineality, lifted
    // canonically (minimal positive multiple inside the projected lattice,
    // representative reduced modulo the lineality lattice)
    IntMatrix lperp = kernel_basis(c.lineality_.transpose());  // n x (n-l) functionals
    IntMatrix lpt = lperp.transpose();                         // (n-l) x n
    std::vector<Vec> proj;
    for (const Vec& g : gens) proj.push_back(mul_vec(lpt, g));
    Cone q = Cone::from_generators(lpt.rows(), proj);
    HermiteResult hl = column_hnf(c.lineality_);
    HermiteResult himg = column_hnf(lpt);
    for (const Vec& qr : q.rays()) {
      Int k = 1;
      while (!lattice_contains(himg, scale(k, qr))) {
        ++k;
        if (k > 1000000) throw Error("Cone: ray lift multiple too large");
      }
      auto x = solve_integer(lpt, scale(k, qr));
      if (!x) throw Error("Cone: quotient ray lifting failed");
      c.rays_.push_back(reduce_mod_lattice(hl, *x));
    }
    std::set<Vec> uniq(c.rays_.begin(), c.rays_.end());
    c.rays_.assign(uniq.begin(), uniq.end());
  }
  return c;
}

std::vector<Vec> Cone::generators() const {
  std::vector<Vec> g = rays_;
  for (std::size_t t = 0; t < lineality_.cols(); ++t) {
    g.push_back(lineality_.col(t));
    g.push_back(scale(Int(-1), lineality_.col(t)));
  }
  return g;
}

bool Cone::contains(const Vec& v) const {
  if (v.size() != n_) throw Error("Cone::contains: dimension mismatch");
  if (is_zero(v)) return true;
  auto x = solve_integer(span_basis_, v);
  if (!x) {
    // v may still lie in the rational span with non-integral coordinates;
    // the span lattice is saturated, so integral points of the span always
    // solve. A non-solution means v is outside the span.
    return false;
  }
  for (const Vec& u : facet_normals_)
    if (dot(u, *x) < 0) return false;
  return true;
}

std::vector<Vec> Cone::lifted_facet_normals() const {
  std::vector<Vec> out;
  IntMatrix st = span_basis_.transpose();  // d x n
  IntMatrix perp = kernel_basis(st);       // n x (n-d)
  HermiteResult hp = column_hnf(perp);
  for (const Vec& u : facet_normals_) {
    auto w = solve_integer(st, u);
    if (!w) throw Error("Cone: facet normal lift failed");
    out.push_back(reduce_mod_lattice(hp, *w));
  }
  return out;
}

IntMatrix Cone::perp_basis() const { return kernel_basis(span_basis_.transpose()); }

Cone Cone::dual() const {
  std::vector<Vec> gens = lifted_facet_normals();
  IntMatrix perp = perp_basis();
  for (std::size_t t = 0; t < perp.cols(); ++t) {
    gens.push_back(perp.col(t));
    gens.push_back(scale(Int(-1), perp.col(t)));
  }
  return Cone::from_generators(n_, gens);
}

std::vector<Cone> Cone::faces() const {
  if (!is_sharp()) throw Error("Cone::faces: cone is not sharp");
  std::set<Cone> out;
  const std::size_t f = facet_normals_.size();
  if (f > 24) throw Error("Cone::faces: too many facets");
  std::vector<Vec> local;
  for (const Vec& r : rays_) local.push_back(coords_in(span_basis_, r));
  for (std::size_t mask = 0; mask < (std::size_t(1) << f); ++mask) {
    std::vector<Vec> face_rays;
    for (std::size_t ri = 0; ri < rays_.size(); ++ri) {
      bool in_face = true;
      for (std::size_t j = 0; j < f && in_face; ++j)
        if ((mask >> j) & 1)
          if (dot(facet_normals_[j], local[ri]) != 0) in_face = false;
      if (in_face) face_rays.push_back(rays_[ri]);
    }
    out.insert(Cone::from_generators(n_, face_rays));
  }
  out.insert(Cone::zero(n_));
  return std::vector<Cone>(out.begin(), out.end());
}

bool Cone::operator==(const Cone& o) const {
  return n_ == o.n_ && span_basis_ == o.span_basis_ &&
         facet_normals_ == o.facet_normals_ && lineality_ == o.lineality_;
}

std::string Cone::sort_key() const {
  std::ostringstream os;
  os << dim() << "|";
  for (const Vec& r : rays_) {
    for (const Int& x : r) os << x << ",";
    os << ";";
  }
  os << "|" << lineality_.to_string() << "|" << span_basis_.to_string();
  for (const Vec& u : facet_normals_) {
    for (const Int& x : u) os << x << ",";
    os << ";";
  }
  return os.str();
}

std::string Cone::to_string() const {
  std::ostringstream os;
  os << "cone{";
  bool first = true;
  for (const Vec& r : rays_) {
    if (!first) os << " ";
    os << "(";
    for (std::size_t i = 0; i < r.size(); ++i) {
      os << r[i];
      if (i + 1 < r.size()) os << ",";
    }
    os << ")";
    first = false;
  }
  if (lineality_.cols() > 0) os << " lin" << lineality_.cols();
  os << "}";
  return os.str();
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("intersect: dimension mismatch");
  std::vector<Vec> dual_gens;
  for (const Cone* c : {&a, &b}) {
    for (const Vec& w : c->lifted_facet_normals()) dual_gens.push_back(w);
    IntMatrix perp = c->perp_basis();
    for (std::size_t t = 0; t < perp.cols(); ++t) {
      dual_gens.push_back(perp.col(t));
      dual_gens.push_back(scale(Int(-1), perp.col(t)));
    }
  }
  return Cone::from_generators(a.ambient_dim(), dual_gens).dual();
}

}  // namespace toric
