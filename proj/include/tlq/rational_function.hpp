#pragma once

#include <string>
#include <string_view>

#include "tlq/laurent_poly.hpp"

namespace tlq {

/// Element of Q(a), kept as num/den in lowest terms.
///
/// Canonical form: the denominator is an ordinary polynomial with nonzero
/// constant term and leading coefficient 1; every power of a is carried by the
/// numerator. Two values are equal iff their canonical forms are identical.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(LaurentPoly p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when den is zero.
  RationalFunction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_zero(); }
  bool is_polynomial() const { return den_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_zero(); }

  RationalFunction operator-() const;
  RationalFunction inv() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inv(); }
  friend RationalFunction operator+(RationalFunction x, const RationalFunction& y) { return x += y; }
  friend RationalFunction operator-(RationalFunction x, const RationalFunction& y) { return x -= y; }
  friend RationalFunction operator*(RationalFunction x, const RationalFunction& y) { return x *= y; }
  friend RationalFunction operator/(RationalFunction x, const RationalFunction& y) { return x /= y; }
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// `num` when the denominator is 1, else `(num) / (den)`.
  std::string to_string() const;
  /// Accepts `p`, `p / q` and `(p) / (q)`.
  static RationalFunction parse(std::string_view text);

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;  // empty stands for 1
};

}  // namespace tlq
