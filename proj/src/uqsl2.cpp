#include "tlq/uqsl2.hpp"

#include <memory>
#include <mutex>
#include <tuple>

#include "tlq/errors.hpp"

namespace tlq {

namespace {

constexpr BasisIndex bit_of(int pos, int rank) { return BasisIndex{1} << (rank - 1 - pos); }

std::mutex cache_mu;

int popcount(BasisIndex x) { return __builtin_popcount(x); }

}  // namespace

std::string bitstring(BasisIndex x, int rank) {
  std::string s(static_cast<std::size_t>(rank), '0');
  for (int p = 0; p < rank; ++p) {
    if (x & bit_of(p, rank)) s[static_cast<std::size_t>(p)] = '1';
  }
  return s;
}

int weight(BasisIndex x, int rank) { return rank - 2 * popcount(x); }

TensorVector TensorVector::basis(int rank, BasisIndex x, const Scalar& c) {
  TensorVector v(rank);
  v.add(x, c);
  return v;
}

TensorVector TensorVector::from_bits(std::string_view bits, const Scalar& c) {
  BasisIndex x = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw InvalidArgument("bitstring must contain only 0 and 1");
    x = (x << 1) | static_cast<BasisIndex>(ch == '1');
  }
  return basis(static_cast<int>(bits.size()), x, c);
}

TensorVector TensorVector::from_column(const Matrix& m, int col) {
  int rank = 0;
  while ((1 << rank) < m.rows()) ++rank;
  if ((1 << rank) != m.rows()) throw InvalidArgument("column length is not a power of two");
  TensorVector v(rank);
  for (int i = 0; i < m.rows(); ++i) v.add(static_cast<BasisIndex>(i), m(i, col));
  return v;
}

Scalar TensorVector::component(BasisIndex x) const {
  auto it = c_.find(x);
  return it == c_.end() ? Scalar() : it->second;
}

void TensorVector::add(BasisIndex x, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = c_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  if (rank_ != o.rank_) throw ArityMismatch("tensor vectors of different rank");
  for (const auto& [x, c] : o.c_) add(x, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
  if (rank_ != o.rank_) throw ArityMismatch("tensor vectors of different rank");
  for (const auto& [x, c] : o.c_) add(x, -c);
  return *this;
}

TensorVector& TensorVector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& [x, v] : c_) v *= c;
  return *this;
}

bool TensorVector::operator==(const TensorVector& o) const {
  if (rank_ != o.rank_ || c_.size() != o.c_.size()) return false;
  auto it = o.c_.begin();
  for (const auto& [x, c] : c_) {
    if (x != it->first || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

Matrix TensorVector::to_column() const {
  Matrix m(1 << rank_, 1);
  for (const auto& [x, c] : c_) m(static_cast<int>(x), 0) = c;
  return m;
}

std::string TensorVector::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [x, c] : c_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*|" + bitstring(x, rank_) + "|";
  }
  return out;
}

TensorVector tensor(const TensorVector& x, const TensorVector& y) {
  TensorVector out(x.rank() + y.rank());
  for (const auto& [i, a] : x.components()) {
    for (const auto& [j, b] : y.components()) out.add((i << y.rank()) | j, a * b);
  }
  return out;
}

TensorVector apply(const Matrix& m, const TensorVector& v) {
  if (m.cols() != (1 << v.rank())) throw ArityMismatch("matrix does not act on this tensor power");
  int out_rank = 0;
  while ((1 << out_rank) < m.rows()) ++out_rank;
  TensorVector out(out_rank);
  for (const auto& [x, c] : v.components()) {
    for (int y = 0; y < m.rows(); ++y) {
      const Scalar& e = m(y, static_cast<int>(x));
      if (!e.is_zero()) out.add(static_cast<BasisIndex>(y), e * c);
    }
  }
  return out;
}

TensorVector apply_local(const Matrix& op, int in, int out, int pos, const TensorVector& v) {
  const int n = v.rank();
  if (pos < 0 || pos + in > n) throw ArityMismatch("local operator out of range");
  if (op.cols() != (1 << in) || op.rows() != (1 << out)) throw ArityMismatch("local operator has wrong shape");
  const int lo_bits = n - pos - in;
  TensorVector res(n - in + out);
  for (const auto& [x, c] : v.components()) {
    const BasisIndex lo = x & ((BasisIndex{1} << lo_bits) - 1);
    const BasisIndex mid = (x >> lo_bits) & ((BasisIndex{1} << in) - 1);
    const BasisIndex hi = x >> (lo_bits + in);
    for (int y = 0; y < op.rows(); ++y) {
      const Scalar& e = op(y, static_cast<int>(mid));
      if (e.is_zero()) continue;
      BasisIndex z = (((hi << out) | static_cast<BasisIndex>(y)) << lo_bits) | lo;
      res.add(z, e * c);
    }
  }
  return res;
}

Matrix local_matrix(const Matrix& op, int in, int out, int pos, int n) {
  const int out_rank = n - in + out;
  Matrix m(1 << out_rank, 1 << n);
  for (BasisIndex x = 0; x < (BasisIndex{1} << n); ++x) {
    TensorVector w = apply_local(op, in, out, pos, TensorVector::basis(n, x));
    for (const auto& [y, c] : w.components()) m(static_cast<int>(y), static_cast<int>(x)) = c;
  }
  return m;
}

TensorVector act(Generator g, const TensorVector& v, const Field& field) {
  const int n = v.rank();
  TensorVector out(n);
  for (const auto& [x, c] : v.components()) {
    switch (g) {
      case Generator::kK:
        out.add(x, c * field.q_pow(weight(x, n)));
        break;
      case Generator::kKinv:
        out.add(x, c * field.q_pow(-weight(x, n)));
        break;
      case Generator::kX:
        // X acts on factor p (v1 -> v0); K on every factor to its right.
        for (int p = 0; p < n; ++p) {
          if (!(x & bit_of(p, n))) continue;
          int e = 0;
          for (int r = p + 1; r < n; ++r) e += (x & bit_of(r, n)) ? -1 : 1;
          out.add(x & ~bit_of(p, n), c * field.q_pow(e));
        }
        break;
      case Generator::kY:
        // Y acts on factor p (v0 -> v1); K^{-1} on every factor to its left.
        for (int p = 0; p < n; ++p) {
          if (x & bit_of(p, n)) continue;
          int e = 0;
          for (int l = 0; l < p; ++l) e += (x & bit_of(l, n)) ? 1 : -1;
          out.add(x | bit_of(p, n), c * field.q_pow(e));
        }
        break;
    }
  }
  return out;
}

const Matrix& generator_matrix(Generator g, int n, const Field& field) {
  static std::map<std::tuple<int, int, int>, std::unique_ptr<Matrix>> cache;
  const auto key = std::make_tuple(field.r(), static_cast<int>(g), n);
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto m = std::make_unique<Matrix>(1 << n, 1 << n);
  for (BasisIndex x = 0; x < (BasisIndex{1} << n); ++x) {
    TensorVector w = act(g, TensorVector::basis(n, x), field);
    for (const auto& [y, c] : w.components()) (*m)(static_cast<int>(y), static_cast<int>(x)) = c;
  }
  std::lock_guard<std::mutex> lock(cache_mu);
  auto [it, inserted] = cache.try_emplace(key, std::move(m));
  return *it->second;
}

TensorVector act_Y_power(int i, const TensorVector& v, const Field& field, int split) {
  if (i < 0) throw InvalidArgument("negative power of Y");
  const int n = v.rank();
  if (split < 0 || split > n) throw InvalidArgument("split point out of range");
  const int rest = n - split;
  const BasisIndex lo_mask = (BasisIndex{1} << rest) - 1;
  TensorVector out(n);
  for (const auto& [x, c] : v.components()) {
    const BasisIndex left = x >> rest;
    // Y^j on the right factor, j = 0..i.
    std::vector<TensorVector> ry{TensorVector::basis(rest, x & lo_mask)};
    for (int j = 1; j <= i; ++j) ry.push_back(act(Generator::kY, ry.back(), field));
    for (int s = 0; s <= i; ++s) {
      Scalar coeff = c * field.q_pow(s * (i - s)) * field.quantum_factorial(i) /
                     (field.quantum_factorial(s) * field.quantum_factorial(i - s));
      // Y^s K^{s-i} on the left factor.
      TensorVector l = TensorVector::basis(split, left, field.q_pow((s - i) * weight(left, split)));
      for (int k = 0; k < s; ++k) l = act(Generator::kY, l, field);
      out += coeff * tensor(l, ry[static_cast<std::size_t>(i - s)]);
    }
  }
  return out;
}

const ElementaryMorphisms& elementary_morphisms(const Field& field) {
  static std::map<int, std::unique_ptr<ElementaryMorphisms>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(field.r());
    if (it != cache.end()) return *it->second;
  }
  auto e = std::make_unique<ElementaryMorphisms>();
  const Scalar q = field.q_pow(1), qi = field.q_pow(-1);
  const Scalar a = field.a_pow(1), ai = field.a_pow(-1);
  // Index of v_i ⊗ v_j is 2i + j.
  e->b = Matrix(4, 1);
  e->b(2, 0) = 1;
  e->b(1, 0) = -q;
  e->d = Matrix(1, 4);
  e->d(0, 1) = 1;
  e->d(0, 2) = -qi;
  e->alpha = Matrix(2, 2);
  e->alpha(1, 0) = 1;    // v0 -> v^1
  e->alpha(0, 1) = -qi;  // v1 -> -q^{-1} v^0
  e->alpha_inv = Matrix(2, 2);
  e->alpha_inv(1, 0) = -q;  // v^0 -> -q v1
  e->alpha_inv(0, 1) = 1;   // v^1 -> v0
  e->c = Matrix(4, 4);
  e->c(0, 0) = a;                 // v0v0 -> q^{1/2} v0v0
  e->c(2, 1) = ai;                // v0v1 -> q^{-1/2} v1v0
  e->c(3, 3) = a;                 // v1v1 -> q^{1/2} v1v1
  e->c(1, 2) = ai;                // v1v0 -> q^{-1/2} v0v1 + ...
  e->c(2, 2) = ai * (q - qi);     //        ... q^{-1/2}(q - q^{-1}) v1v0
  e->c_inv = coordinates(e->c, Matrix::identity(4));
  e->theta = Matrix::identity(2) * field.a_pow(3);
  std::lock_guard<std::mutex> lock(cache_mu);
  auto [it, inserted] = cache.try_emplace(field.r(), std::move(e));
  return *it->second;
}

std::vector<HWVector> highest_weight_basis(int n, int k, const Field& field) {
  if (k < 0 || k > n || (n - k) % 2 != 0) return {};
  std::vector<BasisIndex> slice, above;
  for (BasisIndex x = 0; x < (BasisIndex{1} << n); ++x) {
    if (weight(x, n) == k) slice.push_back(x);
    if (weight(x, n) == k + 2) above.push_back(x);
  }
  std::vector<HWVector> out;
  if (above.empty()) {
    for (BasisIndex x : slice) out.push_back({TensorVector::basis(n, x), k});
    return out;
  }
  std::map<BasisIndex, int> row_of;
  for (std::size_t i = 0; i < above.size(); ++i) row_of[above[i]] = static_cast<int>(i);
  Matrix xm(static_cast<int>(above.size()), static_cast<int>(slice.size()));
  for (std::size_t j = 0; j < slice.size(); ++j) {
    TensorVector w = act(Generator::kX, TensorVector::basis(n, slice[j]), field);
    for (const auto& [y, c] : w.components()) xm(row_of.at(y), static_cast<int>(j)) = c;
  }
  for (const Matrix& kv : kernel_basis(xm)) {
    TensorVector v(n);
    for (std::size_t j = 0; j < slice.size(); ++j) v.add(slice[j], kv(static_cast<int>(j), 0));
    out.push_back({std::move(v), k});
  }
  return out;
}

Scalar cg_coefficient(int n, int m, int p, int i, const Field& field) {
  Scalar num = field.quantum_factorial(m - p + i) * field.quantum_factorial(n - i);
  Scalar den = field.quantum_factorial(i) * field.quantum_factorial(p - i) * field.quantum_factorial(m - p) *
               field.quantum_factorial(n);
  Scalar c = num / den * field.q_pow(-i * (m - 2 * p + i + 1));
  return i % 2 ? -c : c;
}

HWVector cg_vector(const HWVector& w, const HWVector& w2, int p, const Field& field) {
  const int n = w.weight, m = w2.weight;
  if (p < 0 || p > std::min(n, m)) throw InvalidArgument("cg_vector: p out of range");
  std::vector<TensorVector> yw{w.vector}, yw2{w2.vector};
  for (int k = 1; k <= p; ++k) {
    yw.push_back(act(Generator::kY, yw.back(), field));
    yw2.push_back(act(Generator::kY, yw2.back(), field));
  }
  TensorVector out(w.vector.rank() + w2.vector.rank());
  for (int i = 0; i <= p; ++i) {
    TensorVector term = tensor(yw[static_cast<std::size_t>(i)], yw2[static_cast<std::size_t>(p - i)]);
    out += cg_coefficient(n, m, p, i, field) * term;
  }
  return {out, n + m - 2 * p};
}

CGDims cg_dims(int n, int m, const Field& field) {
  if (n < 0 || m < 0) throw InvalidArgument("negative color");
  CGDims out;
  int top = n + m;
  if (!field.is_generic()) {
    const int r = field.r();
    if (n > r - 2 || m > r - 2) {
      throw InvalidArgument("colors must lie in {0..r-2} at " + field.to_string());
    }
    top = std::min(n + m, 2 * r - 4 - n - m);
    out.negligible = n + m > r - 2;
  }
  for (int k = std::abs(n - m); k <= top; k += 2) out.multiplicities[k] = 1;
  return out;
}

namespace {

std::vector<Matrix> solve_intertwiners(int k, int l, const Field& field, bool graded) {
  const int period = field.is_generic() ? 0 : 2 * field.r();
  auto compatible = [&](int wy, int wx) {
    if (graded || period == 0) return wy == wx;
    return ((wy - wx) % period + period) % period == 0;
  };
  std::vector<std::pair<BasisIndex, BasisIndex>> unknowns;  // (row y, column x)
  std::map<std::pair<BasisIndex, BasisIndex>, int> index;
  for (BasisIndex y = 0; y < (BasisIndex{1} << l); ++y) {
    for (BasisIndex x = 0; x < (BasisIndex{1} << k); ++x) {
      if (compatible(weight(y, l), weight(x, k))) {
        index[{y, x}] = static_cast<int>(unknowns.size());
        unknowns.emplace_back(y, x);
      }
    }
  }
  SparseEchelon ech(static_cast<int>(unknowns.size()));
  for (Generator g : {Generator::kX, Generator::kY}) {
    const Matrix& ak = generator_matrix(g, k, field);
    const Matrix& al = generator_matrix(g, l, field);
    // (M A_k - A_l M)[y][x'] = 0.
    std::map<std::pair<BasisIndex, BasisIndex>, std::map<int, Scalar>> eqs;
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      const auto [y, x] = unknowns[u];
      for (int xp = 0; xp < ak.cols(); ++xp) {
        const Scalar& e = ak(static_cast<int>(x), xp);
        if (!e.is_zero()) eqs[{y, static_cast<BasisIndex>(xp)}][static_cast<int>(u)] += e;
      }
      for (int yp = 0; yp < al.rows(); ++yp) {
        const Scalar& e = al(yp, static_cast<int>(y));
        if (!e.is_zero()) eqs[{static_cast<BasisIndex>(yp), x}][static_cast<int>(u)] -= e;
      }
    }
    for (auto& [key, row] : eqs) {
      SparseRow sr;
      for (auto& [col, v] : row) {
        if (!v.is_zero()) sr.emplace_back(col, std::move(v));
      }
      if (!sr.empty()) ech.insert(std::move(sr));
    }
  }
  std::vector<Matrix> out;
  for (const auto& v : ech.kernel()) {
    Matrix m(1 << l, 1 << k);
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      m(static_cast<int>(unknowns[u].first), static_cast<int>(unknowns[u].second)) = v[u];
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

const std::vector<Matrix>& rep_hom_basis(int k, int l, const Field& field) {
  if (k < 0 || l < 0) throw InvalidArgument("negative rank");
  static std::map<std::tuple<int, int, int>, std::unique_ptr<std::vector<Matrix>>> cache;
  const auto key = std::make_tuple(field.r(), k, l);
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto value = std::make_unique<std::vector<Matrix>>(solve_intertwiners(k, l, field, false));
  std::lock_guard<std::mutex> lock(cache_mu);
  auto [it, inserted] = cache.try_emplace(key, std::move(value));
  return *it->second;
}

std::vector<Matrix> rep_hom_basis_graded(int k, int l, const Field& field) {
  return solve_intertwiners(k, l, field, true);
}

Matrix hw_projector(int n, const Field& field) {
  if (n < 1) throw InvalidArgument("hw_projector needs n >= 1");
  const int dim = 1 << n;
  // Columns: Y-orbits of highest-weight vectors, top weight first.
  Matrix basis(dim, dim);
  int col = 0;
  int top_cols = 0;
  for (int k = n; k >= 0; k -= 2) {
    for (const HWVector& u : highest_weight_basis(n, k, field)) {
      TensorVector v = u.vector;
      for (int j = 0; j <= k; ++j) {
        if (col >= dim) throw InvalidArgument("highest-weight orbits overflow the tensor power");
        for (const auto& [x, c] : v.components()) basis(static_cast<int>(x), col) = c;
        ++col;
        v = act(Generator::kY, v, field);
      }
    }
    if (k == n) top_cols = col;
  }
  if (col != dim) throw InvalidArgument("highest-weight orbits do not span V^{⊗n} in " + field.to_string());
  Matrix inv = coordinates(basis, Matrix::identity(dim));
  Matrix keep(dim, dim);
  for (int i = 0; i < top_cols; ++i) keep(i, i) = 1;
  return basis * keep * inv;
}

Matrix rep_braiding(int n, int m, const Field& field) {
  const auto& e = elementary_morphisms(field);
  const int total = n + m;
  Matrix out(1 << total, 1 << total);
  for (BasisIndex x = 0; x < (BasisIndex{1} << total); ++x) {
    TensorVector v = TensorVector::basis(total, x);
    for (int j = n; j >= 1; --j) {
      for (int p = j; p <= j + m - 1; ++p) v = apply_local(e.c, 2, 2, p - 1, v);
    }
    for (const auto& [y, c] : v.components()) out(static_cast<int>(y), static_cast<int>(x)) = c;
  }
  return out;
}

Matrix rep_twist(int n, const Field& field) {
  if (n == 0) return Matrix::identity(1);
  const auto& e = elementary_morphisms(field);
  Matrix t = e.theta;
  // θ_{X⊗V} = c_{V,X} c_{X,V} (θ_X ⊗ θ_V)
  for (int j = 2; j <= n; ++j) {
    t = rep_braiding(1, j - 1, field) * rep_braiding(j - 1, 1, field) * kron(t, e.theta);
  }
  return t;
}

Matrix rep_coev(int n, const Field& field) {
  const auto& e = elementary_morphisms(field);
  TensorVector v = TensorVector::basis(0, 0);
  for (int j = 0; j < n; ++j) v = apply_local(e.b, 0, 2, j, v);
  return v.to_column();
}

Matrix rep_ev(int n, const Field& field) {
  const auto& e = elementary_morphisms(field);
  Matrix out(1, 1 << (2 * n));
  for (BasisIndex x = 0; x < (BasisIndex{1} << (2 * n)); ++x) {
    TensorVector v = TensorVector::basis(2 * n, x);
    for (int j = n - 1; j >= 0 && !v.is_zero(); --j) v = apply_local(e.d, 2, 0, j, v);
    out(0, static_cast<int>(x)) = v.component(0);
  }
  return out;
}

}  // namespace tlq
