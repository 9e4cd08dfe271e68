#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tlq/scalar.hpp"

namespace tlq {

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n);
  /// Column vector from entries.
  static Matrix column(std::vector<Scalar> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(int i, int j) { return e_[index(i, j)]; }
  const Scalar& operator()(int i, int j) const { return e_[index(i, j)]; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix col(int j) const;
  /// Columns `idx` in the given order.
  Matrix select_columns(const std::vector<int>& idx) const;
  /// Entries read column by column (length rows*cols).
  std::vector<Scalar> flatten() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& c);
  friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
  friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
  friend Matrix operator*(Matrix x, const Scalar& c) { return x *= c; }
  friend Matrix operator*(const Scalar& c, Matrix x) { return x *= c; }
  friend Matrix operator*(const Matrix& x, const Matrix& y);
  bool operator==(const Matrix& o) const;

  /// Maps every entry into `f` (specializes generic entries at a root).
  Matrix lifted(const Field& f) const;
  std::string to_string() const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> e_;
};

/// Kronecker product; x's indices are the more significant ones.
Matrix kron(const Matrix& x, const Matrix& y);

/// Horizontal concatenation [x | y]; row counts must agree.
Matrix hconcat(const Matrix& x, const Matrix& y);

/// Reduced row echelon form by Gauss-Jordan elimination, pivoting on the first
/// nonzero entry of each column.
struct Rref {
  Matrix reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
};
Rref rref(const Matrix& m);

/// Rank by fraction-free (Bareiss) elimination.
int rank(const Matrix& m);

/// Basis of {x : m x = 0}, one column vector per free column, in column order.
std::vector<Matrix> kernel_basis(const Matrix& m);

/// Indices of the leftmost maximal independent set of columns.
std::vector<int> independent_columns(const Matrix& m);

/// Solves basis * X = targets for X when every target column lies in the
/// column space of `basis`, whose columns must be independent. Throws
/// InvalidArgument otherwise.
Matrix coordinates(const Matrix& basis, const Matrix& targets);

}  // namespace tlq

namespace tlq {

/// Sparse row: (column, value) pairs with increasing columns and nonzero values.
using SparseRow = std::vector<std::pair<int, Scalar>>;

/// Incremental row echelon form over sparse rows. Rows are normalized so each
/// pivot entry is 1; kernel() back-substitutes to reduced form first.
class SparseEchelon {
 public:
  explicit SparseEchelon(int cols) : cols_(cols) {}

  /// Reduces `row` against the current pivots and keeps it if nonzero.
  /// Returns true if the rank grew.
  bool insert(SparseRow row);
  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  /// Kernel basis of the accumulated rows: one dense vector per non-pivot
  /// column (in column order), with a 1 in that column.
  std::vector<std::vector<Scalar>> kernel() const;

 private:
  int cols_;
  std::map<int, SparseRow> rows_;  // keyed by pivot column
};

}  // namespace tlq
