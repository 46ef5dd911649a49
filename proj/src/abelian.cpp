#include "toric/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

FinAbGroup::FinAbGroup(const IntMatrix& presentation)
    : ambient_rank_(presentation.rows()), presentation_(presentation) {
  SmithResult s = smith_normal_form(presentation);
  const std::size_t nmin = std::min(presentation.rows(), presentation.cols());
  std::vector<std::size_t> torsion_rows, free_rows;
  for (std::size_t i = 0; i < presentation.rows(); ++i) {
    Int d = (i < nmin) ? s.D.at(i, i) : Int(0);
    if (d == 1) continue;
    if (d == 0)
      free_rows.push_back(i);
    else
      torsion_rows.push_back(i);
  }
  for (std::size_t i : torsion_rows) factors_.push_back(s.D.at(i, i));
  free_rank_ = free_rows.size();

  std::vector<std::size_t> kept = torsion_rows;
  kept.insert(kept.end(), free_rows.begin(), free_rows.end());
  proj_ = IntMatrix(kept.size(), ambient_rank_);
  for (std::size_t t = 0; t < kept.size(); ++t)
    for (std::size_t j = 0; j < ambient_rank_; ++j)
      proj_.at(t, j) = s.U.at(kept[t], j);

  // U is unimodular, so its column HNF is the identity and the transform is U^-1.
  HermiteResult h = column_hnf(s.U);
  lift_ = IntMatrix(ambient_rank_, kept.size());
  for (std::size_t t = 0; t < kept.size(); ++t)
    for (std::size_t i = 0; i < ambient_rank_; ++i)
      lift_.at(i, t) = h.V.at(i, kept[t]);
}

FinAbGroup FinAbGroup::free_group(std::size_t rank) {
  return FinAbGroup(IntMatrix(rank, 0));
}

Int FinAbGroup::torsion_order() const {
  Int o = 1;
  for (const Int& d : factors_) o *= d;
  return o;
}

Vec FinAbGroup::reduce(Vec element) const {
  if (element.size() != coord_size()) throw Error("FinAbGroup: bad element size");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), element[i].get_mpz_t(), factors_[i].get_mpz_t());
    element[i] = r;
  }
  return element;
}

Vec FinAbGroup::project(const Vec& v) const {
  if (v.size() != ambient_rank_) throw Error("FinAbGroup::project: bad size");
  return reduce(mul_vec(proj_, v));
}

Vec FinAbGroup::lift(const Vec& element) const {
  if (element.size() != coord_size()) throw Error("FinAbGroup::lift: bad size");
  return mul_vec(lift_, element);
}

Vec FinAbGroup::add(const Vec& a, const Vec& b) const {
  return reduce(toric::add(a, b));
}
Vec FinAbGroup::sub(const Vec& a, const Vec& b) const {
  return reduce(toric::sub(a, b));
}
Vec FinAbGroup::neg(const Vec& a) const { return reduce(scale(Int(-1), a)); }
Vec FinAbGroup::smul(const Int& c, const Vec& a) const {
  return reduce(scale(c, a));
}
bool FinAbGroup::is_zero_elem(const Vec& a) const { return is_zero(reduce(a)); }

IntMatrix FinAbGroup::relation_lattice() const {
  IntMatrix rel(coord_size(), factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) rel.at(i, i) = factors_[i];
  return rel;
}

std::string FinAbGroup::describe() const {
  std::ostringstream os;
  bool first = true;
  for (const Int& d : factors_) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  if (free_rank_ > 0) {
    if (!first) os << " + ";
    os << "Z^" << free_rank_;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

FinAbGroup cokernel(const IntMatrix& m) { return FinAbGroup(m); }

Subgroup::Subgroup(FinAbGroup ambient, const std::vector<Vec>& generators)
    : ambient_(std::move(ambient)) {
  std::vector<Vec> cols;
  for (const Vec& g : generators) {
    if (g.size() != ambient_.coord_size())
      throw Error("Subgroup: generator has wrong size");
    cols.push_back(ambient_.reduce(g));
  }
  IntMatrix gen_mat = cols.empty() ? IntMatrix(ambient_.coord_size(), 0)
                                   : IntMatrix::from_cols(cols);
  lattice_ = concat_cols(gen_mat, ambient_.relation_lattice());
  canonicalize();
}

void Subgroup::canonicalize() {
  HermiteResult h = column_hnf(lattice_);
  IntMatrix basis(ambient_.coord_size(), h.rank);
  for (std::size_t t = 0; t < h.rank; ++t)
    for (std::size_t i = 0; i < ambient_.coord_size(); ++i)
      basis.at(i, t) = h.H.at(i, t);
  lattice_ = basis;
  gens_.clear();
  for (std::size_t t = 0; t < lattice_.cols(); ++t) {
    Vec g = ambient_.reduce(lattice_.col(t));
    if (!is_zero(g)) gens_.push_back(g);
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

Subgroup Subgroup::full(const FinAbGroup& ambient) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < ambient.coord_size(); ++i) {
    Vec e(ambient.coord_size());
    e[i] = 1;
    gens.push_back(e);
  }
  return Subgroup(ambient, gens);
}

Subgroup Subgroup::trivial(const FinAbGroup& ambient) {
  return Subgroup(ambient, {});
}

bool Subgroup::contains(const Vec& element) const {
  HermiteResult h = column_hnf(lattice_);
  return lattice_contains(h, ambient_.reduce(element));
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
  HermiteResult h = column_hnf(lattice_);
  for (std::size_t t = 0; t < other.lattice_.cols(); ++t)
    if (!lattice_contains(h, other.lattice_.col(t))) return false;
  return true;
}

bool Subgroup::is_full() const {
  return contains_subgroup(Subgroup::full(ambient_));
}

bool Subgroup::operator==(const Subgroup& o) const {
  return ambient_.same_shape(o.ambient_) && lattice_ == o.lattice_;
}

std::optional<Int> Subgroup::index() const {
  if (lattice_.cols() < ambient_.coord_size()) return std::nullopt;
  Int idx = 1;
  HermiteResult h = column_hnf(lattice_);
  if (h.rank < ambient_.coord_size()) return std::nullopt;
  for (std::size_t t = 0; t < h.rank; ++t) idx *= h.H.at(h.pivot_rows[t], t);
  return idx;
}

FinAbGroup Subgroup::quotient_group() const {
  IntMatrix pres(ambient_.coord_size(), lattice_.cols());
  for (std::size_t t = 0; t < lattice_.cols(); ++t)
    for (std::size_t i = 0; i < ambient_.coord_size(); ++i)
      pres.at(i, t) = lattice_.at(i, t);
  return FinAbGroup(pres);
}

FinAbGroup Subgroup::group() const {
  // this = L_B / L_rel; express the relation columns in the L_B basis
  IntMatrix rel = ambient_.relation_lattice();
  IntMatrix pres(lattice_.cols(), rel.cols());
  for (std::size_t j = 0; j < rel.cols(); ++j) {
    auto x = solve_integer(lattice_, rel.col(j));
    if (!x) throw Error("Subgroup::group: relation lattice escaped");
    for (std::size_t i = 0; i < lattice_.cols(); ++i) pres.at(i, j) = (*x)[i];
  }
  return FinAbGroup(pres);
}

Subgroup subgroup_intersection(const std::vector<Subgroup>& gs) {
  if (gs.empty()) throw Error("subgroup_intersection: empty input");
  for (std::size_t i = 1; i < gs.size(); ++i)
    if (!gs[i].ambient().same_shape(gs[0].ambient()))
      throw Error("subgroup_intersection: mismatched ambient groups");
  Subgroup acc = gs[0];
  for (std::size_t i = 1; i < gs.size(); ++i) {
    const IntMatrix& a = acc.lattice();
    const IntMatrix& b = gs[i].lattice();
    IntMatrix neg_b = b;
    for (std::size_t r = 0; r < neg_b.rows(); ++r)
      for (std::size_t c = 0; c < neg_b.cols(); ++c)
        neg_b.at(r, c) = -neg_b.at(r, c);
    IntMatrix ker = kernel_basis(concat_cols(a, neg_b));
    std::vector<Vec> meet_gens;
    for (std::size_t t = 0; t < ker.cols(); ++t) {
      Vec coeff(a.cols());
      for (std::size_t j = 0; j < a.cols(); ++j) coeff[j] = ker.at(j, t);
      meet_gens.push_back(acc.ambient().reduce(mul_vec(a, coeff)));
    }
    acc = Subgroup(acc.ambient(), meet_gens);
  }
  return acc;
}

Cardinal subgroup_index(const Subgroup& s) {
  auto idx = s.index();
  if (!idx) return Cardinal{false, 0};
  return Cardinal{true, *idx};
}

}  // namespace toric
