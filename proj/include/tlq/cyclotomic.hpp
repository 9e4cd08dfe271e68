#pragma once

#include <string>

#include "tlq/laurent_poly.hpp"
#include "tlq/rational_function.hpp"

namespace tlq {

/// The cyclotomic polynomial Phi_m (cached; safe to call concurrently).
const LaurentPoly& cyclotomic_polynomial(int m);

/// Element of Q(zeta) for zeta a primitive `order`-th root of unity, stored as
/// its residue modulo Phi_order in the variable a = zeta.
class Cyclotomic {
 public:
  /// Zero of Q(zeta_order).
  explicit Cyclotomic(int order);
  /// Reduces an arbitrary Laurent polynomial in a.
  Cyclotomic(int order, const LaurentPoly& p);

  static Cyclotomic a_pow(int order, int exponent);

  int order() const { return order_; }
  const LaurentPoly& residue() const { return res_; }

  bool is_zero() const { return res_.is_zero(); }
  bool is_one() const { return res_.is_one(); }
  bool is_rational() const { return res_.is_constant(); }

  Cyclotomic operator-() const;
  Cyclotomic inv() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inv(); }
  friend Cyclotomic operator+(Cyclotomic x, const Cyclotomic& y) { return x += y; }
  friend Cyclotomic operator-(Cyclotomic x, const Cyclotomic& y) { return x -= y; }
  friend Cyclotomic operator*(Cyclotomic x, const Cyclotomic& y) { return x *= y; }
  friend Cyclotomic operator/(Cyclotomic x, const Cyclotomic& y) { return x /= y; }
  bool operator==(const Cyclotomic& o) const { return order_ == o.order_ && res_ == o.res_; }

  std::string to_string() const { return res_.to_string(); }

 private:
  void check_same(const Cyclotomic& o) const;

  int order_;
  LaurentPoly res_;
};

/// Image of x under a -> zeta_{4r}. Throws PoleAtRoot if the denominator of x
/// vanishes there.
Cyclotomic specialize(const RationalFunction& x, int r);

}  // namespace tlq
