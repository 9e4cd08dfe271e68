#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tlq {

using Rational = mpq_class;

/// Laurent polynomial in the indeterminate a with rational coefficients.
///
/// Stored densely from the lowest nonzero exponent upwards. The zero
/// polynomial has no coefficients; otherwise both the first and last stored
/// coefficients are nonzero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Rational& c);

  static LaurentPoly monomial(const Rational& c, int exponent);
  /// a^e
  static LaurentPoly a_pow(int exponent) { return monomial(1, exponent); }
  /// Builds from a coefficient list starting at exponent `low`.
  static LaurentPoly from_coefficients(int low, std::vector<Rational> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && low_ == 0); }
  bool is_one() const { return c_.size() == 1 && low_ == 0 && c_[0] == 1; }
  bool is_monomial() const { return c_.size() == 1; }

  /// Lowest / highest exponent with a nonzero coefficient. Undefined for zero.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }

  Rational coeff(int exponent) const;
  const Rational& leading() const { return c_.back(); }
  const Rational& trailing() const { return c_.front(); }
  const std::vector<Rational>& dense() const { return c_; }

  /// Nonzero terms, ascending by exponent.
  std::vector<std::pair<int, Rational>> terms() const;

  /// Multiplies by a^e.
  LaurentPoly shifted(int e) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);

  bool operator==(const LaurentPoly& o) const { return low_ == o.low_ && c_ == o.c_; }

  /// Substitutes a -> a^k (k may be negative).
  LaurentPoly substitute_power(int k) const;

  /// Canonical text, terms in descending exponent: `-a^2 - a^-2`, `3/2*a - 1`.
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  void trim();

  int low_ = 0;
  std::vector<Rational> c_;
};

// Ordinary polynomial helpers. Arguments must have low() >= 0 (or be zero).

/// Quotient and remainder of polynomial division; divisor nonzero.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& num, const LaurentPoly& den);

/// Monic greatest common divisor; gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& x, const LaurentPoly& y);

/// Returns (g, s, t) with s*x + t*y = g, g the monic gcd.
struct ExtendedGcd {
  LaurentPoly gcd, s, t;
};
ExtendedGcd poly_extended_gcd(const LaurentPoly& x, const LaurentPoly& y);

/// Rational -> canonical text ("3", "-1/2").
std::string rational_to_string(const Rational& r);

}  // namespace tlq
