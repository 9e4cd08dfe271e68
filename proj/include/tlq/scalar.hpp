#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "tlq/cyclotomic.hpp"
#include "tlq/rational_function.hpp"

namespace tlq {

/// A coefficient: either a generic element of Q(a) or an element of
/// Q(zeta_{4r}). Rational constants in generic form mix freely with either
/// mode; any other cross-mode operation throws ModeMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long c) : v_(RationalFunction(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(RationalFunction x) : v_(std::move(x)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Cyclotomic x) : v_(std::move(x)) {}  // NOLINT(google-explicit-constructor)

  bool is_generic() const { return std::holds_alternative<RationalFunction>(v_); }
  /// 0 for generic values, 4r otherwise.
  int root_order() const;
  const RationalFunction& generic() const;
  const Cyclotomic& cyclotomic() const;

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inv() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  bool operator==(const Scalar& o) const;

  std::string to_string() const;

 private:
  // Lifts a rational constant held by *this into o's mode when needed.
  void align(const Scalar& o);

  std::variant<RationalFunction, Cyclotomic> v_;
};

/// Specializes a generic scalar at a = zeta_{4r}.
Scalar specialize(const Scalar& x, int r);

/// The active coefficient field: Q(a) (r == 0) or Q(zeta_{4r}).
class Field {
 public:
  static Field generic() { return Field(0); }
  static Field root(int r);
  /// Parses `generic` or `root:<r>`.
  static Field parse(std::string_view text);

  bool is_generic() const { return r_ == 0; }
  int r() const { return r_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar a_pow(int e) const;
  Scalar q_pow(int e) const { return a_pow(2 * e); }
  /// Loop value -(a^2 + a^-2).
  Scalar delta() const;
  Scalar quantum_int(int n) const;
  Scalar quantum_factorial(int n) const;
  /// Brings a generic value into this field (specializing at a root).
  Scalar lift(const LaurentPoly& p) const;
  Scalar lift(const RationalFunction& x) const;
  Scalar lift(const Scalar& x) const;
  /// Parses a scalar written in the text grammar and lifts it.
  Scalar parse_scalar(std::string_view text) const;

  std::string to_string() const;
  bool operator==(const Field& o) const { return r_ == o.r_; }

 private:
  explicit Field(int r) : r_(r) {}
  int r_;
};

}  // namespace tlq
