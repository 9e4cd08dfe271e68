#include "tlq/tl_morphism.hpp"

#include <vector>

#include "tlq/errors.hpp"

namespace tlq {

TLMorphism::TLMorphism(int inputs, int outputs, Field field) : k_(inputs), l_(outputs), field_(field) {
  if (inputs < 0 || outputs < 0) throw InvalidArgument("negative arity");
}

TLMorphism::TLMorphism(const SimpleDiagram& d, Field field, Scalar coeff)
    : TLMorphism(d.inputs(), d.outputs(), field) {
  add_term(d, field_.lift(coeff));
}

TLMorphism TLMorphism::identity(int n, Field field) { return TLMorphism(SimpleDiagram::identity(n), field); }

TLMorphism TLMorphism::e_generator(int i, int n, Field field) {
  return TLMorphism(SimpleDiagram::e(i, n), field);
}

Scalar TLMorphism::coefficient(const SimpleDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? field_.zero() : it->second;
}

void TLMorphism::add_term(const SimpleDiagram& d, const Scalar& c) {
  if (c.is_zero()) return;
  if (d.inputs() != k_ || d.outputs() != l_) throw ArityMismatch("diagram arity differs from morphism");
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TLMorphism::check_compatible(const TLMorphism& o) const {
  if (k_ != o.k_ || l_ != o.l_) {
    throw ArityMismatch("morphisms " + std::to_string(k_) + "->" + std::to_string(l_) + " and " +
                        std::to_string(o.k_) + "->" + std::to_string(o.l_) + " are not parallel");
  }
  if (!(field_ == o.field_)) throw ModeMismatch("morphisms live over different fields");
}

TLMorphism TLMorphism::operator-() const {
  TLMorphism r = *this;
  for (auto& [d, c] : r.terms_) c = -c;
  return r;
}

TLMorphism& TLMorphism::operator+=(const TLMorphism& o) {
  check_compatible(o);
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

TLMorphism& TLMorphism::operator-=(const TLMorphism& o) {
  check_compatible(o);
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

TLMorphism& TLMorphism::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, x] : terms_) x *= c;
  return *this;
}

bool TLMorphism::operator==(const TLMorphism& o) const {
  if (k_ != o.k_ || l_ != o.l_ || terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [d, c] : terms_) {
    if (!(d == it->first) || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

TLMorphism TLMorphism::flipped() const {
  TLMorphism r(l_, k_, field_);
  for (const auto& [d, c] : terms_) r.terms_.emplace(d.flipped(), c);
  return r;
}

TLMorphism TLMorphism::specialized(int r) const {
  Field f = Field::root(r);
  TLMorphism out(k_, l_, f);
  for (const auto& [d, c] : terms_) out.add_term(d, f.lift(c));
  return out;
}

std::string TLMorphism::to_string() const {
  if (terms_.empty()) return "0\n";
  std::string out;
  for (const auto& [d, c] : terms_) out += d.to_string() + " " + c.to_string() + "\n";
  return out;
}

TLMorphism compose(const TLMorphism& f, const TLMorphism& g) {
  if (f.inputs() != g.outputs()) {
    throw ArityMismatch("cannot compose " + std::to_string(f.inputs()) + "->" +
                        std::to_string(f.outputs()) + " after " + std::to_string(g.inputs()) + "->" +
                        std::to_string(g.outputs()));
  }
  if (!(f.field() == g.field())) throw ModeMismatch("morphisms live over different fields");
  const Field& field = f.field();
  TLMorphism out(g.inputs(), f.outputs(), field);
  std::vector<Scalar> delta_pow{field.one()};
  for (const auto& [df, cf] : f.terms()) {
    for (const auto& [dg, cg] : g.terms()) {
      Stacked s = stack(df, dg);
      while (static_cast<int>(delta_pow.size()) <= s.loops) {
        delta_pow.push_back(delta_pow.back() * field.delta());
      }
      Scalar c = cf * cg;
      if (s.loops > 0) c *= delta_pow[static_cast<std::size_t>(s.loops)];
      out.add_term(s.diagram, c);
    }
  }
  return out;
}

TLMorphism tensor(const TLMorphism& f, const TLMorphism& g) {
  if (!(f.field() == g.field())) throw ModeMismatch("morphisms live over different fields");
  TLMorphism out(f.inputs() + g.inputs(), f.outputs() + g.outputs(), f.field());
  for (const auto& [df, cf] : f.terms()) {
    for (const auto& [dg, cg] : g.terms()) out.add_term(juxtapose(df, dg), cf * cg);
  }
  return out;
}

}  // namespace tlq
