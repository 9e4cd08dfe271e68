#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tlq/matrix.hpp"
#include "tlq/tl_category.hpp"

namespace tlq {

/// An object of V(a): a finite sequence of colors. Color 0 is dropped, so the
/// sequence (0) is the unit object.
class ObjectSeq {
 public:
  ObjectSeq() = default;
  explicit ObjectSeq(std::vector<int> colors);
  /// Comma-separated colors; "", "()" and "0" give the unit object.
  /// Parentheses around the list are optional.
  static ObjectSeq parse(std::string_view text);

  const std::vector<int>& colors() const { return colors_; }
  bool empty() const { return colors_.empty(); }
  int length() const { return static_cast<int>(colors_.size()); }
  /// |s|: total number of strands.
  int strands() const;
  /// Block index of every strand.
  std::vector<int> block_of_strand() const;
  ObjectSeq dual() const;
  /// Throws InvalidArgument unless every color lies in J for the field
  /// (J = {1..r-2} at a root).
  void validate(const Field& field) const;

  /// `(1,2)`, `()` for the unit.
  std::string to_string() const;
  bool operator==(const ObjectSeq&) const = default;
  auto operator<=>(const ObjectSeq&) const = default;

 private:
  std::vector<int> colors_;
};

ObjectSeq concat(const ObjectSeq& s, const ObjectSeq& t);

struct HattedMorphism {
  ObjectSeq source;
  ObjectSeq target;
  TLMorphism value;
};

/// ĝ = f_t g f_s.
HattedMorphism hat(const TLMorphism& g, const ObjectSeq& s, const ObjectSeq& t);

/// Simple diagrams |s| -> |t| with no arc inside a single input block or a
/// single output block, in canonical order.
std::vector<SimpleDiagram> good_type_diagrams(const ObjectSeq& s, const ObjectSeq& t);
/// The hats of the good-type diagrams.
std::vector<HattedMorphism> hom_basis(const ObjectSeq& s, const ObjectSeq& t, const Field& field);

/// The (n+m) -> (n+m-2j) diagram capping the last j points of the first block
/// against the first j points of the second.
SimpleDiagram d_nmj(int n, int m, int j);

struct RibbonData {
  TLMorphism braiding;  // s⊗t -> t⊗s
  TLMorphism twist;     // s -> s
  TLMorphism coev;      // 1 -> s⊗s*
  TLMorphism ev;        // s*⊗s -> 1
};
RibbonData ribbon_data(const ObjectSeq& s, const ObjectSeq& t, const Field& field);

/// M[i][j] = tr_q(B_i ∘ B'_j) with B = hom_basis(s,t), B' = hom_basis(t,s).
Matrix gram_matrix(const ObjectSeq& s, const ObjectSeq& t, const Field& field);
/// tr_q(D ∘ X) for a simple diagram D: s->t and X: t->s (one side hatted).
Scalar trace_pairing(const SimpleDiagram& d, const TLMorphism& x);
/// Rank of the Gram matrix.
int purified_hom_dim(const ObjectSeq& s, const ObjectSeq& t, const Field& field);

}  // namespace tlq
