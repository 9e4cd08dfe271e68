#include "tlq/matrix.hpp"

#include <algorithm>
#include <utility>

#include "tlq/errors.hpp"

namespace tlq {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(std::vector<Scalar> entries) {
  Matrix m(static_cast<int>(entries.size()), 1);
  m.e_ = std::move(entries);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::col(int j) const { return select_columns({j}); }

Matrix Matrix::select_columns(const std::vector<int>& idx) const {
  Matrix out(rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < idx.size(); ++k) out(i, static_cast<int>(k)) = (*this)(i, idx[k]);
  }
  return out;
}

std::vector<Scalar> Matrix::flatten() const {
  std::vector<Scalar> out;
  out.reserve(e_.size());
  for (int j = 0; j < cols_; ++j) {
    for (int i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ArityMismatch("matrix sum shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (!o.e_[i].is_zero()) e_[i] += o.e_[i];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ArityMismatch("matrix difference shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (!o.e_[i].is_zero()) e_[i] -= o.e_[i];
  }
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
  if (c.is_one()) return *this;
  for (auto& x : e_) {
    if (!x.is_zero()) x *= c;
  }
  return *this;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols_ != y.rows_) {
    throw ArityMismatch("matrix product shape mismatch: " + std::to_string(x.rows_) + "x" +
                        std::to_string(x.cols_) + " * " + std::to_string(y.rows_) + "x" +
                        std::to_string(y.cols_));
  }
  Matrix out(x.rows_, y.cols_);
  for (int i = 0; i < x.rows_; ++i) {
    for (int k = 0; k < x.cols_; ++k) {
      const Scalar& a = x(i, k);
      if (a.is_zero()) continue;
      const bool unit = a.is_one();
      for (int j = 0; j < y.cols_; ++j) {
        const Scalar& b = y(k, j);
        if (b.is_zero()) continue;
        if (unit) {
          out(i, j) += b;
        } else {
          out(i, j) += a * b;
        }
      }
    }
  }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (!(e_[i] == o.e_[i])) return false;
  }
  return true;
}

Matrix Matrix::lifted(const Field& f) const {
  Matrix out = *this;
  for (auto& x : out.e_) {
    if (!x.is_zero()) x = f.lift(x);
  }
  return out;
}

std::string Matrix::to_string() const {
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    out += "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).to_string();
    }
    out += "]\n";
  }
  return out;
}

Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < x.cols(); ++j) {
      const Scalar& a = x(i, j);
      if (a.is_zero()) continue;
      for (int k = 0; k < y.rows(); ++k) {
        for (int l = 0; l < y.cols(); ++l) {
          const Scalar& b = y(k, l);
          if (!b.is_zero()) out(i * y.rows() + k, j * y.cols() + l) = a * b;
        }
      }
    }
  }
  return out;
}

Matrix hconcat(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows()) throw ArityMismatch("hconcat row mismatch");
  Matrix out(x.rows(), x.cols() + y.cols());
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < x.cols(); ++j) out(i, j) = x(i, j);
    for (int j = 0; j < y.cols(); ++j) out(i, x.cols() + j) = y(i, j);
  }
  return out;
}

Rref rref(const Matrix& m) {
  Rref out{m, {}};
  Matrix& a = out.reduced;
  int row = 0;
  for (int c = 0; c < a.cols() && row < a.rows(); ++c) {
    int p = row;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    }
    Scalar inv = a(row, c).inv();
    for (int j = c; j < a.cols(); ++j) {
      if (!a(row, j).is_zero()) a(row, j) *= inv;
    }
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, c).is_zero()) continue;
      Scalar factor = a(i, c);
      for (int j = c; j < a.cols(); ++j) {
        if (!a(row, j).is_zero()) a(i, j) -= factor * a(row, j);
      }
    }
    out.pivots.push_back(c);
    ++row;
  }
  return out;
}

int rank(const Matrix& m) {
  Matrix a = m;
  const int rows = a.rows();
  const int cols = a.cols();
  Scalar prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (int j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    const Scalar pivot = a(r, c);
    for (int i = r + 1; i < rows; ++i) {
      const Scalar lead = a(i, c);
      for (int j = c + 1; j < cols; ++j) {
        Scalar v = pivot * a(i, j);
        if (!lead.is_zero() && !a(r, j).is_zero()) v -= lead * a(r, j);
        if (!v.is_zero() && !prev.is_one()) v /= prev;
        a(i, j) = std::move(v);
      }
      a(i, c) = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

std::vector<Matrix> kernel_basis(const Matrix& m) {
  Rref rr = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : rr.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Matrix> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Matrix v(m.cols(), 1);
    v(f, 0) = 1;
    for (std::size_t row = 0; row < rr.pivots.size(); ++row) {
      const Scalar& x = rr.reduced(static_cast<int>(row), f);
      if (!x.is_zero()) v(rr.pivots[row], 0) = -x;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<int> independent_columns(const Matrix& m) { return rref(m).pivots; }

Matrix coordinates(const Matrix& basis, const Matrix& targets) {
  const int k = basis.cols();
  Rref rr = rref(hconcat(basis, targets));
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] != static_cast<int>(i)) {
      throw InvalidArgument(rr.pivots[i] < k ? "basis columns are dependent"
                                             : "target outside the column space");
    }
  }
  if (static_cast<int>(rr.pivots.size()) != k) throw InvalidArgument("basis columns are dependent");
  Matrix out(k, targets.cols());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < targets.cols(); ++j) out(i, j) = rr.reduced(i, k + j);
  }
  return out;
}

}  // namespace tlq

namespace tlq {

namespace {

// x - c*y for sorted sparse rows.
SparseRow axpy(const SparseRow& x, const Scalar& c, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -(c * y[j].second));
      ++j;
    } else {
      Scalar v = x[i].second - c * y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool SparseEchelon::insert(SparseRow row) {
  // Each stored row starts at its pivot, so eliminating the leading entry
  // only touches columns to its right.
  while (!row.empty()) {
    auto it = rows_.find(row.front().first);
    if (it == rows_.end()) break;
    Scalar c = row.front().second;
    row = axpy(row, c, it->second);
  }
  if (row.empty()) return false;
  Scalar inv = row.front().second.inv();
  for (auto& entry : row) entry.second *= inv;
  const int pivot = row.front().first;
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::vector<std::vector<Scalar>> SparseEchelon::kernel() const {
  // Back-substitute: make every row zero in the other rows' pivot columns.
  std::map<int, SparseRow> red = rows_;
  for (auto it = red.rbegin(); it != red.rend(); ++it) {
    const int p = it->first;
    for (auto& [q, row] : red) {
      if (q == p) continue;
      auto hit = std::lower_bound(row.begin(), row.end(), p,
                                  [](const std::pair<int, Scalar>& e, int c) { return e.first < c; });
      if (hit == row.end() || hit->first != p) continue;
      Scalar c = hit->second;
      row = axpy(row, c, it->second);
    }
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
  for (const auto& [p, row] : red) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<Scalar>> out;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Scalar> v(static_cast<std::size_t>(cols_));
    v[static_cast<std::size_t>(f)] = 1;
    for (const auto& [p, row] : red) {
      auto hit = std::lower_bound(row.begin(), row.end(), f,
                                  [](const std::pair<int, Scalar>& e, int c) { return e.first < c; });
      if (hit != row.end() && hit->first == f) v[static_cast<std::size_t>(p)] = -hit->second;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace tlq
