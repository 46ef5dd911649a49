#include "toric/int_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return IntMatrix(0, 0);
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw Error("from_rows: ragged input");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<Vec>& cols) {
  if (cols.empty()) return IntMatrix(0, 0);
  IntMatrix m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows()) throw Error("from_cols: ragged input");
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec IntMatrix::row(std::size_t i) const {
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Vec IntMatrix::col(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : data_)
    if (x != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_col(std::size_t j, std::size_t k, const Int& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) += q * at(i, k);
}

void IntMatrix::add_row(std::size_t i, std::size_t k, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) += q * at(k, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      os << at(i, j);
      if (j + 1 < cols_) os << ",";
    }
    os << "]";
    if (i + 1 < rows_) os << ",";
  }
  os << "]";
  return os.str();
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error("mul: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Vec mul_vec(const IntMatrix& a, const Vec& x) {
  if (a.cols() != x.size()) throw Error("mul_vec: shape mismatch");
  Vec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a.at(i, j) * x[j];
  return y;
}

Vec add(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Vec scale(const Int& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Int dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("dot: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Int content(const Vec& v) {
  Int g = 0;
  for (const Int& x : v) {
    if (x != 0) {
      Int a = abs(x);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
  }
  return g;
}

namespace {

// floor division quotient
Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteResult column_hnf(const IntMatrix& m) {
  HermiteResult res;
  res.H = m;
  res.V = IntMatrix::identity(m.cols());
  IntMatrix& H = res.H;
  IntMatrix& V = res.V;
  std::size_t r = 0;
  for (std::size_t i = 0; i < m.rows() && r < m.cols(); ++i) {
    // clear row i across columns >= r down to one pivot
    while (true) {
      std::size_t jmin = m.cols();
      for (std::size_t j = r; j < m.cols(); ++j) {
        if (H.at(i, j) != 0 &&
            (jmin == m.cols() || abs(H.at(i, j)) < abs(H.at(i, jmin))))
          jmin = j;
      }
      if (jmin == m.cols()) break;  // row is zero in columns >= r
      bool lone = true;
      for (std::size_t j = r; j < m.cols(); ++j) {
        if (j == jmin || H.at(i, j) == 0) continue;
        Int q = fdiv(H.at(i, j), H.at(i, jmin));
        H.add_col(j, jmin, -q);
        V.add_col(j, jmin, -q);
        if (H.at(i, j) != 0) lone = false;
      }
      if (lone) {
        H.swap_cols(r, jmin);
        V.swap_cols(r, jmin);
        if (H.at(i, r) < 0) {
          H.negate_col(r);
          V.negate_col(r);
        }
        // reduce earlier pivot columns at this row into [0, pivot)
        for (std::size_t j = 0; j < r; ++j) {
          Int q = fdiv(H.at(i, j), H.at(i, r));
          H.add_col(j, r, -q);
          V.add_col(j, r, -q);
        }
        res.pivot_rows.push_back(i);
        ++r;
        break;
      }
    }
  }
  res.rank = r;
  return res;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  HermiteResult h = column_hnf(m);
  std::size_t k = m.cols() - h.rank;
  IntMatrix ker(m.cols(), k);
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t i = 0; i < m.cols(); ++i)
      ker.at(i, t) = h.V.at(i, h.rank + t);
  return ker;
}

std::size_t rank(const IntMatrix& m) { return column_hnf(m).rank; }

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult res{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& U = res.U;
  IntMatrix& D = res.D;
  IntMatrix& V = res.V;
  const std::size_t nmin = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < nmin; ++t) {
    while (true) {
      // locate minimal nonzero |entry| in the trailing submatrix, row-major scan
      std::size_t pi = m.rows(), pj = m.cols();
      for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j)
          if (D.at(i, j) != 0 &&
              (pi == m.rows() || abs(D.at(i, j)) < abs(D.at(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m.rows()) break;  // submatrix zero
      D.swap_rows(t, pi);
      U.swap_rows(t, pi);
      D.swap_cols(t, pj);
      V.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (D.at(i, t) == 0) continue;
        Int q = fdiv(D.at(i, t), D.at(t, t));
        D.add_row(i, t, -q);
        U.add_row(i, t, -q);
        if (D.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (D.at(t, j) == 0) continue;
        Int q = fdiv(D.at(t, j), D.at(t, t));
        D.add_col(j, t, -q);
        V.add_col(j, t, -q);
        if (D.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // enforce divisibility of the rest of the submatrix by the pivot
      bool divides = true;
      for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < m.cols() && divides; ++j)
          if (D.at(i, j) % D.at(t, t) != 0) {
            D.add_row(t, i, 1);
            U.add_row(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (D.at(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }
  return res;
}

std::optional<Vec> solve_integer(const IntMatrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw Error("solve_integer: size mismatch");
  SmithResult s = smith_normal_form(m);
  Vec c = mul_vec(s.U, b);
  const std::size_t nmin = std::min(m.rows(), m.cols());
  Vec y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Int d = (i < nmin) ? s.D.at(i, i) : Int(0);
    if (d == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % d != 0) return std::nullopt;
      if (i < m.cols()) y[i] = c[i] / d;
    }
  }
  return mul_vec(s.V, y);
}

bool lattice_contains(const HermiteResult& h, const Vec& v) {
  Vec w = v;
  for (std::size_t t = 0; t < h.rank; ++t) {
    std::size_t p = h.pivot_rows[t];
    const Int& piv = h.H.at(p, t);
    if (w[p] % piv != 0) return false;
    Int q = w[p] / piv;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= q * h.H.at(i, t);
  }
  return is_zero(w);
}

Vec reduce_mod_lattice(const HermiteResult& h, const Vec& v) {
  Vec w = v;
  for (std::size_t t = 0; t < h.rank; ++t) {
    std::size_t p = h.pivot_rows[t];
    Int q = fdiv(w[p], h.H.at(p, t));
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= q * h.H.at(i, t);
  }
  return w;
}

bool same_column_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return false;
  HermiteResult ha = column_hnf(a), hb = column_hnf(b);
  if (ha.rank != hb.rank) return false;
  for (std::size_t t = 0; t < ha.rank; ++t)
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (ha.H.at(i, t) != hb.H.at(i, t)) return false;
  return true;
}

IntMatrix concat_cols(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  if (a.rows() != b.rows()) throw Error("concat_cols: row mismatch");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

}  // namespace toric
