#include "tlq/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "tlq/errors.hpp"

namespace tlq {

namespace {

LaurentPoly compute_cyclotomic(int m) {
  // x^m - 1 divided by Phi_d for every proper divisor d of m.
  LaurentPoly p = LaurentPoly::a_pow(m) - LaurentPoly(1);
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = poly_divmod(p, cyclotomic_polynomial(d)).first;
  }
  return p;
}

// Reduces p (Laurent) modulo the monic polynomial phi, using a^order = 1 to
// clear negative exponents first.
LaurentPoly reduce(int order, const LaurentPoly& p) {
  if (p.is_zero()) return p;
  const LaurentPoly& phi = cyclotomic_polynomial(order);
  const int deg = phi.high();
  if (p.low() >= 0 && p.high() < deg) return p;
  std::vector<Rational> c(static_cast<std::size_t>(order), Rational(0));
  for (const auto& [e, v] : p.terms()) {
    int k = ((e % order) + order) % order;
    c[static_cast<std::size_t>(k)] += v;
  }
  const auto& pc = phi.dense();  // phi.low() == 0, monic
  for (int i = order - 1; i >= deg; --i) {
    Rational lead = c[static_cast<std::size_t>(i)];
    if (lead == 0) continue;
    for (int j = 0; j <= deg; ++j) {
      if (pc[static_cast<std::size_t>(j)] != 0) {
        c[static_cast<std::size_t>(i - deg + j)] -= lead * pc[static_cast<std::size_t>(j)];
      }
    }
  }
  c.resize(static_cast<std::size_t>(deg));
  return LaurentPoly::from_coefficients(0, std::move(c));
}

}  // namespace

const LaurentPoly& cyclotomic_polynomial(int m) {
  if (m < 1) throw InvalidArgument("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<LaurentPoly>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
  }
  auto value = std::make_unique<LaurentPoly>(
      m == 1 ? LaurentPoly::a_pow(1) - LaurentPoly(1) : compute_cyclotomic(m));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(m, std::move(value));
  return *it->second;
}

Cyclotomic::Cyclotomic(int order) : order_(order) {
  if (order < 1) throw InvalidArgument("cyclotomic order must be positive");
}

Cyclotomic::Cyclotomic(int order, const LaurentPoly& p) : Cyclotomic(order) {
  res_ = reduce(order, p);
}

Cyclotomic Cyclotomic::a_pow(int order, int exponent) {
  return Cyclotomic(order, LaurentPoly::a_pow(((exponent % order) + order) % order));
}

void Cyclotomic::check_same(const Cyclotomic& o) const {
  if (order_ != o.order_) {
    throw ModeMismatch("cyclotomic orders differ: " + std::to_string(order_) + " vs " +
                       std::to_string(o.order_));
  }
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  r.res_ = -r.res_;
  return r;
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (res_.is_constant()) {
    Cyclotomic r(order_);
    r.res_ = LaurentPoly(Rational(1 / res_.leading()));
    return r;
  }
  // s*res + t*phi = 1 since phi is irreducible.
  ExtendedGcd eg = poly_extended_gcd(res_, cyclotomic_polynomial(order_));
  return Cyclotomic(order_, eg.s);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_same(o);
  res_ += o.res_;
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check_same(o);
  res_ -= o.res_;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  check_same(o);
  res_ = reduce(order_, res_ * o.res_);
  return *this;
}

Cyclotomic specialize(const RationalFunction& x, int r) {
  if (r < 3) throw InvalidArgument("root mode requires r >= 3");
  const int order = 4 * r;
  Cyclotomic den(order, x.den());
  if (den.is_zero()) {
    throw PoleAtRoot("denominator " + x.den().to_string() + " vanishes at a primitive " +
                     std::to_string(order) + "th root of unity");
  }
  Cyclotomic num(order, x.num());
  if (den.is_one()) return num;
  return num * den.inv();
}

}  // namespace tlq
