#pragma once

#include <map>
#include <string>

#include "tlq/diagram.hpp"
#include "tlq/scalar.hpp"

namespace tlq {

/// A linear combination of simple diagrams k -> l over a coefficient field
/// (an element of E_{k,l}). Zero coefficients are never stored.
class TLMorphism {
 public:
  using Terms = std::map<SimpleDiagram, Scalar>;

  TLMorphism() : TLMorphism(0, 0, Field::generic()) {}
  /// The zero morphism k -> l.
  TLMorphism(int inputs, int outputs, Field field);
  TLMorphism(const SimpleDiagram& d, Field field, Scalar coeff = 1);

  static TLMorphism identity(int n, Field field);
  /// The TL generator e_i on n strands.
  static TLMorphism e_generator(int i, int n, Field field);

  int inputs() const { return k_; }
  int outputs() const { return l_; }
  const Field& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const SimpleDiagram& d) const;

  /// Adds c*d, dropping the term if it cancels.
  void add_term(const SimpleDiagram& d, const Scalar& c);

  TLMorphism operator-() const;
  TLMorphism& operator+=(const TLMorphism& o);
  TLMorphism& operator-=(const TLMorphism& o);
  TLMorphism& operator*=(const Scalar& c);
  friend TLMorphism operator+(TLMorphism x, const TLMorphism& y) { return x += y; }
  friend TLMorphism operator-(TLMorphism x, const TLMorphism& y) { return x -= y; }
  friend TLMorphism operator*(TLMorphism x, const Scalar& c) { return x *= c; }
  friend TLMorphism operator*(const Scalar& c, TLMorphism x) { return x *= c; }
  bool operator==(const TLMorphism& o) const;

  /// Upside-down reflection, coefficients unchanged.
  TLMorphism flipped() const;
  /// Coefficients mapped into Q(zeta_{4r}); throws PoleAtRoot.
  TLMorphism specialized(int r) const;

  /// One line per term: `[matching] coefficient`.
  std::string to_string() const;

 private:
  void check_compatible(const TLMorphism& o) const;

  int k_;
  int l_;
  Field field_;
  Terms terms_;
};

/// f ∘ g: f placed above g. Each closed loop contributes delta.
TLMorphism compose(const TLMorphism& f, const TLMorphism& g);
/// f ⊗ g: f placed left of g.
TLMorphism tensor(const TLMorphism& f, const TLMorphism& g);

}  // namespace tlq
