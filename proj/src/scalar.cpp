#include "tlq/scalar.hpp"

#include <charconv>

#include "tlq/errors.hpp"
#include "tlq/quantum.hpp"

namespace tlq {

namespace {

Cyclotomic constant_into(const RationalFunction& x, int order) {
  if (!x.is_constant()) {
    throw ModeMismatch("generic scalar " + x.to_string() + " used in root-of-unity arithmetic");
  }
  return Cyclotomic(order, x.num());
}

}  // namespace

int Scalar::root_order() const {
  return is_generic() ? 0 : std::get<Cyclotomic>(v_).order();
}

const RationalFunction& Scalar::generic() const {
  if (!is_generic()) throw ModeMismatch("scalar is not generic");
  return std::get<RationalFunction>(v_);
}

const Cyclotomic& Scalar::cyclotomic() const {
  if (is_generic()) throw ModeMismatch("scalar is not cyclotomic");
  return std::get<Cyclotomic>(v_);
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

bool Scalar::is_one() const {
  return std::visit([](const auto& x) { return x.is_one(); }, v_);
}

void Scalar::align(const Scalar& o) {
  if (is_generic() && !o.is_generic()) {
    v_ = constant_into(std::get<RationalFunction>(v_), o.root_order());
  }
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& x) { return Scalar(-x); }, v_);
}

Scalar Scalar::inv() const {
  return std::visit([](const auto& x) { return Scalar(x.inv()); }, v_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  align(o);
  if (is_generic()) {
    std::get<RationalFunction>(v_) += o.generic();
  } else if (o.is_generic()) {
    std::get<Cyclotomic>(v_) += constant_into(o.generic(), root_order());
  } else {
    std::get<Cyclotomic>(v_) += o.cyclotomic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  align(o);
  if (is_generic()) {
    std::get<RationalFunction>(v_) *= o.generic();
  } else if (o.is_generic()) {
    std::get<Cyclotomic>(v_) *= constant_into(o.generic(), root_order());
  } else {
    std::get<Cyclotomic>(v_) *= o.cyclotomic();
  }
  return *this;
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_generic() && o.is_generic()) return generic() == o.generic();
  if (!is_generic() && !o.is_generic()) return cyclotomic() == o.cyclotomic();
  const Scalar& g = is_generic() ? *this : o;
  const Scalar& c = is_generic() ? o : *this;
  if (!g.generic().is_constant()) return false;
  return constant_into(g.generic(), c.root_order()) == c.cyclotomic();
}

std::string Scalar::to_string() const {
  return std::visit([](const auto& x) { return x.to_string(); }, v_);
}

Scalar specialize(const Scalar& x, int r) {
  if (!x.is_generic()) {
    if (x.root_order() != 4 * r) throw ModeMismatch("scalar already specialized at another root");
    return x;
  }
  return Scalar(specialize(x.generic(), r));
}

Field Field::root(int r) {
  if (r < 3) throw InvalidArgument("root mode requires r >= 3, got " + std::to_string(r));
  return Field(r);
}

Field Field::parse(std::string_view text) {
  if (text == "generic") return generic();
  constexpr std::string_view prefix = "root:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::string_view digits = text.substr(prefix.size());
    int r = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return root(r);
  }
  throw ParseError("invalid mode '" + std::string(text) + "' (expected generic or root:<r>)");
}

Scalar Field::zero() const { return lift(LaurentPoly()); }
Scalar Field::one() const { return lift(LaurentPoly(1)); }
Scalar Field::a_pow(int e) const { return lift(LaurentPoly::a_pow(e)); }
Scalar Field::delta() const { return lift(loop_value()); }
Scalar Field::quantum_int(int n) const { return lift(tlq::quantum_int(n)); }
Scalar Field::quantum_factorial(int n) const { return lift(tlq::quantum_factorial(n)); }

Scalar Field::lift(const LaurentPoly& p) const {
  if (is_generic()) return Scalar(RationalFunction(p));
  return Scalar(Cyclotomic(4 * r_, p));
}

Scalar Field::lift(const RationalFunction& x) const {
  if (is_generic()) return Scalar(x);
  return Scalar(specialize(x, r_));
}

Scalar Field::lift(const Scalar& x) const {
  if (x.is_generic()) return lift(x.generic());
  if (is_generic() || x.root_order() != 4 * r_) {
    throw ModeMismatch("scalar from root order " + std::to_string(x.root_order()) +
                       " used in field " + to_string());
  }
  return x;
}

Scalar Field::parse_scalar(std::string_view text) const {
  return lift(RationalFunction::parse(text));
}

std::string Field::to_string() const {
  return is_generic() ? "generic" : "root:" + std::to_string(r_);
}

}  // namespace tlq
