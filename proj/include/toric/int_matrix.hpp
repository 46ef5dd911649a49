#ifndef TORIC_INT_MATRIX_HPP
#define TORIC_INT_MATRIX_HPP

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw Error("IntMatrix: entry count mismatch");
  }
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<Vec>& rows);
  static IntMatrix from_cols(const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  IntMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// col_j += q * col_k
  void add_col(std::size_t j, std::size_t k, const Int& q);
  void add_row(std::size_t i, std::size_t k, const Int& q);
  void negate_col(std::size_t j);
  void negate_row(std::size_t i);

  std::string to_string() const;

private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
Vec mul_vec(const IntMatrix& a, const Vec& x);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Int& c, const Vec& a);
Int dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);

struct SmithResult {
  IntMatrix U, D, V;  // U*m*V == D, U and V unimodular, D diagonal with d1|d2|...
};

/// Smith normal form with transformation matrices. Deterministic.
SmithResult smith_normal_form(const IntMatrix& m);

struct HermiteResult {
  IntMatrix H;  // column-style Hermite normal form of m (same shape)
  IntMatrix V;  // unimodular, m*V == H
  std::vector<std::size_t> pivot_rows;  // pivot row of column t, for t < rank
  std::size_t rank;
};

/// Column Hermite normal form: pivots positive, entries left of a pivot
/// reduced into [0, pivot). Zero columns are moved to the end.
HermiteResult column_hnf(const IntMatrix& m);

/// Basis of {x : m*x = 0} as matrix columns (a saturated sublattice).
IntMatrix kernel_basis(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Some integer solution of m*x = b, or nullopt. Free coordinates are zero,
/// so the choice is deterministic.
std::optional<Vec> solve_integer(const IntMatrix& m, const Vec& b);

/// Columns of h must be a column-HNF lattice basis (zero columns allowed).
/// Membership of v in the column lattice.
bool lattice_contains(const HermiteResult& h, const Vec& v);

/// Canonical representative of v modulo the column lattice of h
/// (pivot rows reduced into [0, pivot)).
Vec reduce_mod_lattice(const HermiteResult& h, const Vec& v);

/// True if the two matrices span the same column lattice.
bool same_column_lattice(const IntMatrix& a, const IntMatrix& b);

/// Matrix whose columns are the columns of a followed by the columns of b.
IntMatrix concat_cols(const IntMatrix& a, const IntMatrix& b);

/// gcd of all coordinates, nonnegative; 0 for the zero vector.
Int content(const Vec& v);

}  // namespace toric

#endif
