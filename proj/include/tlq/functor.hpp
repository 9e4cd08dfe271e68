#pragma once

#include <string>
#include <vector>

#include "tlq/generator_word.hpp"
#include "tlq/turaev.hpp"
#include "tlq/uqsl2.hpp"

namespace tlq {

/// A linear map V^{⊗k} -> V^{⊗l}, stored as a 2^l x 2^k matrix.
using RepMap = Matrix;

/// F on a simple diagram: its presentation read bottom to top, caps acting
/// as d and cups as b. Memoized per field.
const RepMap& F_diagram(const SimpleDiagram& d, const Field& field);
/// Linear extension over the terms of f.
RepMap F_diagram(const TLMorphism& f);
/// F on a generator word directly: x+ -> c_{V,V}, x- -> c_{V,V}^{-1}.
RepMap F_word(const GeneratorWord& word, const Field& field);

struct RepObject {
  RepMap projector;              // F(f_s)
  Matrix basis;                  // first independent columns of the projector
  std::vector<TensorVector> basis_vectors() const;
  int dim() const { return basis.cols(); }
};
RepObject F_object(const ObjectSeq& s, const Field& field);

struct HomMatrix {
  /// Columns: the rep-side basis of Hom(F̂(s), F̂(t)), each map flattened.
  Matrix rep_basis;
  /// Column i: coordinates of F̂(hom_basis(s,t)[i]) in rep_basis.
  Matrix matrix;
};
/// The matrix of F̂ on Hom(s,t) against the compressed intertwiner basis.
HomMatrix F_hom_matrix(const ObjectSeq& s, const ObjectSeq& t, const Field& field);

/// Tr(K^{⊗n} f): the pivotal trace of an endomorphism of V^{⊗n}.
Scalar pivotal_trace(const RepMap& f, const Field& field);
/// d_n c_{n,n} (θ_n f ⊗ id_n) b_n on V^{⊗n}, evaluated on vectors. Equal to
/// the trace over F̂(s) whenever f = F(f_s) f F(f_s).
Scalar quantum_trace_rep(const RepMap& f, const Field& field);

/// b_{n,m,j} = q^{-m+j-1} [n+m-j+1]_q / [n]_q
Scalar coefficient_b(int n, int m, int j, const Field& field);
/// v^{(j)}_{n,m} = cg_vector(v0^{⊗n}, v0^{⊗m}, j).
TensorVector top_cg_vector(int n, int m, int j, const Field& field);

/// f: U⊗V -> W with V = V^{⊗v} gives (f⊗id_{V*})(id_U⊗b_V): U -> W⊗V*.
/// The V* factor is indexed by the dual basis of V^{⊗v} as a single module.
RepMap mate_sharp(const RepMap& f, int v);
/// g: U -> W⊗V* gives (id_W⊗d_V)(g⊗id_V): U⊗V -> W.
RepMap mate_flat(const RepMap& g, int v);

struct FunctorReport {
  ObjectSeq source;
  ObjectSeq target;
  int dim_diagram_side = 0;
  int dim_rep_side = 0;
  int matrix_rank = 0;
  bool iso = false;
  Field mode = Field::generic();
};
/// Generic: dimensions of both hom spaces and the rank of F_hom_matrix.
/// Root: rank of the diagram Gram matrix, rank of the rep-side trace
/// pairing, and rank of the pairing of F̂(D̂_i) against rep maps t -> s.
FunctorReport verify_equivalence(const ObjectSeq& s, const ObjectSeq& t, const Field& field);

}  // namespace tlq
