#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tlq/matrix.hpp"

namespace tlq {

/// Bitstring index of a basis tensor of V^{⊗n}: the first factor is the most
/// significant bit and bit 0 stands for v0.
using BasisIndex = std::uint32_t;

std::string bitstring(BasisIndex x, int rank);
/// K-weight: #v0 - #v1.
int weight(BasisIndex x, int rank);

/// Sparse vector of V^{⊗n}. Zero components are never stored.
class TensorVector {
 public:
  explicit TensorVector(int rank = 0) : rank_(rank) {}
  static TensorVector basis(int rank, BasisIndex x, const Scalar& c = 1);
  /// e.g. "01" for v0⊗v1.
  static TensorVector from_bits(std::string_view bits, const Scalar& c = 1);
  static TensorVector from_column(const Matrix& m, int col = 0);

  int rank() const { return rank_; }
  const std::map<BasisIndex, Scalar>& components() const { return c_; }
  Scalar component(BasisIndex x) const;
  bool is_zero() const { return c_.empty(); }

  void add(BasisIndex x, const Scalar& c);
  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator-=(const TensorVector& o);
  TensorVector& operator*=(const Scalar& c);
  friend TensorVector operator+(TensorVector x, const TensorVector& y) { return x += y; }
  friend TensorVector operator-(TensorVector x, const TensorVector& y) { return x -= y; }
  friend TensorVector operator*(const Scalar& c, TensorVector x) { return x *= c; }
  bool operator==(const TensorVector& o) const;

  Matrix to_column() const;
  /// `c*|bits| + ...` in basis order.
  std::string to_string() const;

 private:
  int rank_;
  std::map<BasisIndex, Scalar> c_;
};

TensorVector tensor(const TensorVector& x, const TensorVector& y);
/// m (2^l x 2^k) applied to a rank-k vector.
TensorVector apply(const Matrix& m, const TensorVector& v);
/// Applies `op` (2^out x 2^in) to factors pos..pos+in-1 (0-based) of v.
TensorVector apply_local(const Matrix& op, int in, int out, int pos, const TensorVector& v);
/// id^{⊗pos} ⊗ op ⊗ id^{⊗(n-pos-in)} as a matrix.
Matrix local_matrix(const Matrix& op, int in, int out, int pos, int n);

enum class Generator { kK, kKinv, kX, kY };

/// Action through the iterated coproduct: Δ(X) = 1⊗X + X⊗K,
/// Δ(Y) = K^{-1}⊗Y + Y⊗1, Δ(K) = K⊗K.
TensorVector act(Generator g, const TensorVector& v, const Field& field);
/// The same action as a 2^n x 2^n matrix (cached).
const Matrix& generator_matrix(Generator g, int n, const Field& field);
/// Y^i applied to v ∈ V^{⊗split} ⊗ V^{⊗(rank-split)} through
/// Δ(Y^i) = Σ_s q^{s(i-s)} [i choose s]_q (Y^s K^{s-i}) ⊗ Y^{i-s}.
TensorVector act_Y_power(int i, const TensorVector& v, const Field& field, int split = 1);

struct ElementaryMorphisms {
  Matrix b;          // 0 -> 2
  Matrix d;          // 2 -> 0
  Matrix alpha;      // V -> V*, in the dual basis (v^0, v^1)
  Matrix alpha_inv;  // V* -> V
  Matrix c;          // c_{V,V}
  Matrix c_inv;
  Matrix theta;      // θ_V
};
const ElementaryMorphisms& elementary_morphisms(const Field& field);

struct HWVector {
  TensorVector vector;
  int weight = 0;
};
/// Basis of {v ∈ V^{⊗n} : Xv = 0, Kv = q^k v}: kernel of X on the weight-k
/// slice, one vector per free column in basis order.
std::vector<HWVector> highest_weight_basis(int n, int k, const Field& field);

/// c^{n,m}_{p,i} = (-1)^i [m-p+i]![n-i]! / ([i]![p-i]![m-p]![n]!) q^{-i(m-2p+i+1)}
Scalar cg_coefficient(int n, int m, int p, int i, const Field& field);
/// v(w, w', p) = Σ_i c^{n,m}_{p,i} (Y^i w) ⊗ (Y^{p-i} w').
HWVector cg_vector(const HWVector& w, const HWVector& w2, int p, const Field& field);

struct CGDims {
  std::map<int, int> multiplicities;
  bool negligible = false;
};
/// Clebsch-Gordan multiplicities of V_n ⊗ V_m; truncated at a root.
CGDims cg_dims(int n, int m, const Field& field);

/// Basis of the maps V^{⊗k} -> V^{⊗l} commuting with K, X and Y (cached).
const std::vector<Matrix>& rep_hom_basis(int k, int l, const Field& field);
/// Same, but only among maps preserving the K-weight exactly (no shift by a
/// multiple of 2r at a root). Used to compare against rep_hom_basis.
std::vector<Matrix> rep_hom_basis_graded(int k, int l, const Field& field);

/// The idempotent of V^{⊗n} fixing highest-weight-n vectors (and their Y-orbit)
/// and killing lower highest-weight vectors.
Matrix hw_projector(int n, const Field& field);

/// Rep-side ribbon structure on tensor powers, built from c_{V,V}, θ_V, b, d.
Matrix rep_braiding(int n, int m, const Field& field);
Matrix rep_twist(int n, const Field& field);
/// Nested b: 0 -> 2n; nested d: 2n -> 0.
Matrix rep_coev(int n, const Field& field);
Matrix rep_ev(int n, const Field& field);

}  // namespace tlq
