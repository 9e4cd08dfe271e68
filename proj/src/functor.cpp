#include "tlq/functor.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "tlq/errors.hpp"

namespace tlq {

namespace {

std::mutex memo_mu;

TensorVector apply_layer(const Layer& layer, const TensorVector& v, const ElementaryMorphisms& e) {
  switch (layer.kind) {
    case Layer::Kind::kId:
      return v;
    case Layer::Kind::kCup:
      return apply_local(e.b, 0, 2, layer.pos - 1, v);
    case Layer::Kind::kCap:
      return apply_local(e.d, 2, 0, layer.pos - 1, v);
    case Layer::Kind::kPositive:
      return apply_local(e.c, 2, 2, layer.pos - 1, v);
    case Layer::Kind::kNegative:
      return apply_local(e.c_inv, 2, 2, layer.pos - 1, v);
  }
  return v;
}

RepMap evaluate_word(const GeneratorWord& word, int k, int l, const Field& field) {
  const auto& e = elementary_morphisms(field);
  RepMap out(1 << l, 1 << k);
  for (BasisIndex x = 0; x < (BasisIndex{1} << k); ++x) {
    TensorVector v = TensorVector::basis(k, x);
    for (const Layer& layer : word.layers()) {
      if (v.is_zero()) break;
      v = apply_layer(layer, v, e);
    }
    for (const auto& [y, c] : v.components()) out(static_cast<int>(y), static_cast<int>(x)) = c;
  }
  return out;
}

// The trace composite applied to a vector of V^{⊗2n}: (θ f ⊗ id), then the
// crossings of c_{n,n}, then nested caps.
Scalar trace_composite(const RepMap& theta_f, int n, const Field& field) {
  const auto& e = elementary_morphisms(field);
  TensorVector v = TensorVector::from_column(rep_coev(n, field));
  v = apply_local(theta_f, n, n, 0, v);
  for (int j = n; j >= 1; --j) {
    for (int p = j; p <= j + n - 1; ++p) v = apply_local(e.c, 2, 2, p - 1, v);
  }
  for (int j = n - 1; j >= 0 && !v.is_zero(); --j) v = apply_local(e.d, 2, 0, j, v);
  return v.component(0);
}

Matrix flatten_columns(const std::vector<RepMap>& maps, int rows) {
  Matrix out(rows, static_cast<int>(maps.size()));
  for (std::size_t j = 0; j < maps.size(); ++j) {
    std::vector<Scalar> flat = maps[j].flatten();
    for (int i = 0; i < rows; ++i) out(i, static_cast<int>(j)) = flat[static_cast<std::size_t>(i)];
  }
  return out;
}

// P_t M P_s for every intertwiner M, keeping the first independent ones.
std::vector<RepMap> compressed_rep_basis(const RepObject& s, const RepObject& t, int k, int l,
                                         const Field& field) {
  std::vector<RepMap> all;
  for (const Matrix& m : rep_hom_basis(k, l, field)) all.push_back(t.projector * m * s.projector);
  std::vector<RepMap> out;
  for (int i : independent_columns(flatten_columns(all, 1 << (k + l)))) {
    out.push_back(all[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace

const RepMap& F_diagram(const SimpleDiagram& d, const Field& field) {
  static std::map<std::pair<int, SimpleDiagram>, std::unique_ptr<RepMap>> memo;
  const auto key = std::make_pair(field.r(), d);
  {
    std::lock_guard<std::mutex> lock(memo_mu);
    auto it = memo.find(key);
    if (it != memo.end()) return *it->second;
  }
  auto value = std::make_unique<RepMap>(evaluate_word(presentation(d), d.inputs(), d.outputs(), field));
  std::lock_guard<std::mutex> lock(memo_mu);
  auto [it, inserted] = memo.try_emplace(key, std::move(value));
  return *it->second;
}

RepMap F_diagram(const TLMorphism& f) {
  RepMap out(1 << f.outputs(), 1 << f.inputs());
  for (const auto& [d, c] : f.terms()) out += c * F_diagram(d, f.field());
  return out;
}

RepMap F_word(const GeneratorWord& word, const Field& field) {
  return evaluate_word(word, word.inputs(), word.outputs(), field);
}

std::vector<TensorVector> RepObject::basis_vectors() const {
  std::vector<TensorVector> out;
  for (int j = 0; j < basis.cols(); ++j) out.push_back(TensorVector::from_column(basis, j));
  return out;
}

RepObject F_object(const ObjectSeq& s, const Field& field) {
  s.validate(field);
  RepObject out;
  out.projector = F_diagram(jw_tensor(s.colors(), field));
  out.basis = out.projector.select_columns(independent_columns(out.projector));
  return out;
}

HomMatrix F_hom_matrix(const ObjectSeq& s, const ObjectSeq& t, const Field& field) {
  const int k = s.strands(), l = t.strands();
  const RepObject fs = F_object(s, field);
  const RepObject ft = F_object(t, field);
  HomMatrix out;
  out.rep_basis = flatten_columns(compressed_rep_basis(fs, ft, k, l, field), 1 << (k + l));
  std::vector<RepMap> images;
  for (const HattedMorphism& h : hom_basis(s, t, field)) images.push_back(F_diagram(h.value));
  out.matrix = coordinates(out.rep_basis, flatten_columns(images, 1 << (k + l)));
  return out;
}

Scalar pivotal_trace(const RepMap& f, const Field& field) {
  if (f.rows() != f.cols()) throw ArityMismatch("trace of a non-endomorphism");
  int n = 0;
  while ((1 << n) < f.rows()) ++n;
  Scalar total = field.zero();
  for (int x = 0; x < f.rows(); ++x) {
    if (!f(x, x).is_zero()) total += field.q_pow(weight(static_cast<BasisIndex>(x), n)) * f(x, x);
  }
  return total;
}

Scalar quantum_trace_rep(const RepMap& f, const Field& field) {
  if (f.rows() != f.cols()) throw ArityMismatch("trace of a non-endomorphism");
  int n = 0;
  while ((1 << n) < f.rows()) ++n;
  return trace_composite(rep_twist(n, field) * f, n, field);
}

Scalar coefficient_b(int n, int m, int j, const Field& field) {
  if (n < 1 || m < 1 || j < 0 || j > std::min(n, m)) throw InvalidArgument("coefficient_b: need n, m >= 1 and 0 <= j <= min(n, m)");
  return field.q_pow(-m + j - 1) * field.quantum_int(n + m - j + 1) / field.quantum_int(n);
}

TensorVector top_cg_vector(int n, int m, int j, const Field& field) {
  const HWVector w{TensorVector::basis(n, 0), n};
  const HWVector w2{TensorVector::basis(m, 0), m};
  return cg_vector(w, w2, j, field).vector;
}

RepMap mate_sharp(const RepMap& f, int v) {
  const int dv = 1 << v;
  if (f.cols() % dv != 0) throw ArityMismatch("mate_sharp: source is not U⊗V^{⊗v}");
  const int du = f.cols() / dv;
  RepMap out(f.rows() * dv, du);
  for (int y = 0; y < f.rows(); ++y) {
    for (int x = 0; x < du; ++x) {
      for (int xp = 0; xp < dv; ++xp) out(y * dv + xp, x) = f(y, x * dv + xp);
    }
  }
  return out;
}

RepMap mate_flat(const RepMap& g, int v) {
  const int dv = 1 << v;
  if (g.rows() % dv != 0) throw ArityMismatch("mate_flat: target is not W⊗V*^{⊗v}");
  const int dw = g.rows() / dv;
  RepMap out(dw, g.cols() * dv);
  for (int y = 0; y < dw; ++y) {
    for (int x = 0; x < g.cols(); ++x) {
      for (int xp = 0; xp < dv; ++xp) out(y, x * dv + xp) = g(y * dv + xp, x);
    }
  }
  return out;
}

FunctorReport verify_equivalence(const ObjectSeq& s, const ObjectSeq& t, const Field& field) {
  s.validate(field);
  t.validate(field);
  FunctorReport rep{s, t, 0, 0, 0, false, field};
  const int k = s.strands(), l = t.strands();
  if (field.is_generic()) {
    const HomMatrix h = F_hom_matrix(s, t, field);
    rep.dim_diagram_side = h.matrix.cols();
    rep.dim_rep_side = h.rep_basis.cols();
    rep.matrix_rank = rank(h.matrix);
  } else {
    const RepObject fs = F_object(s, field);
    const RepObject ft = F_object(t, field);
    const std::vector<RepMap> forward = compressed_rep_basis(fs, ft, k, l, field);
    const std::vector<RepMap> backward = compressed_rep_basis(ft, fs, l, k, field);
    rep.dim_diagram_side = purified_hom_dim(s, t, field);
    Matrix gr(static_cast<int>(forward.size()), static_cast<int>(backward.size()));
    for (std::size_t i = 0; i < forward.size(); ++i) {
      for (std::size_t j = 0; j < backward.size(); ++j) {
        gr(static_cast<int>(i), static_cast<int>(j)) = pivotal_trace(forward[i] * backward[j], field);
      }
    }
    rep.dim_rep_side = rank(gr);
    const std::vector<HattedMorphism> basis = hom_basis(s, t, field);
    Matrix h(static_cast<int>(basis.size()), static_cast<int>(backward.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const RepMap fi = F_diagram(basis[i].value);
      for (std::size_t j = 0; j < backward.size(); ++j) {
        h(static_cast<int>(i), static_cast<int>(j)) = pivotal_trace(fi * backward[j], field);
      }
    }
    rep.matrix_rank = rank(h);
  }
  rep.iso = rep.dim_diagram_side == rep.dim_rep_side && rep.dim_rep_side == rep.matrix_rank;
  return rep;
}

}  // namespace tlq
