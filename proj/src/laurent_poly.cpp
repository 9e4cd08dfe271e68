#include "tlq/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "tlq/errors.hpp"

namespace tlq {

namespace {

using IntPoly = std::vector<mpz_class>;  // ascending degree

void trim_int(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntPoly& p) {
  if (p.empty()) return;
  mpz_class g = content(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// Clears denominators of an ordinary polynomial (low() >= 0) and returns its
// primitive integer part, indexed from degree 0.
IntPoly to_primitive(const LaurentPoly& x) {
  IntPoly out;
  if (x.is_zero()) return out;
  mpz_class l = 1;
  for (const auto& c : x.dense()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  out.assign(static_cast<std::size_t>(x.low()), mpz_class(0));
  for (const auto& c : x.dense()) {
    mpz_class v = c.get_num() * (l / c.get_den());
    out.push_back(std::move(v));
  }
  make_primitive(out);
  return out;
}

// a <- prem(a, b), primitive part taken.
void pseudo_remainder(IntPoly& a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    mpz_class la = a.back();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
    mpz_class fa = lb / g;
    mpz_class fb = la / g;
    for (auto& c : a) c *= fa;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= fb * b[i];
    trim_int(a);
  }
  make_primitive(a);
}

void check_ordinary(const LaurentPoly& p) {
  if (!p.is_zero() && p.low() < 0) {
    throw InvalidArgument("polynomial helper called with negative exponents");
  }
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = exponent;
    p.c_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(int low, std::vector<Rational> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (c_.empty()) low_ = 0;
}

Rational LaurentPoly::coeff(int exponent) const {
  if (c_.empty() || exponent < low_ || exponent > high()) return 0;
  return c_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, Rational>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), c_[i]);
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly p = *this;
  if (!p.c_.empty()) p.low_ += e;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  c_.resize(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    c_[static_cast<std::size_t>(o.low_ - low_) + i] += o.c_[i];
  }
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly p;
  if (x.c_.empty() || y.c_.empty()) return p;
  p.low_ = x.low_ + y.low_;
  p.c_.assign(x.c_.size() + y.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) {
      if (y.c_[j] == 0) continue;
      p.c_[i + j] += x.c_[i] * y.c_[j];
    }
  }
  p.trim();
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms()) out += monomial(c, e * k);
  return out;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (int e = high(); e >= low_; --e) {
    const Rational& c = c_[static_cast<std::size_t>(e - low_)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(c);
    if (e == 0) {
      out += rational_to_string(mag);
      continue;
    }
    if (mag != 1) out += rational_to_string(mag) + "*";
    out += 'a';
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ParseError("empty polynomial");
  std::size_t pos = 0;
  auto read_int = [&](bool allow_sign) -> mpz_class {
    std::size_t start = pos;
    if (allow_sign && pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (digits == pos) throw ParseError("expected integer in '" + std::string(text) + "'");
    return mpz_class(s.substr(start, pos - start));
  };
  LaurentPoly out;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in '" + std::string(text) + "'");
    }
    first = false;
    Rational coeff = 1;
    bool have_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      mpz_class num = read_int(false);
      mpz_class den = 1;
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = read_int(false);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      have_coeff = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    int exponent = 0;
    if (pos < s.size() && s[pos] == 'a') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        exponent = static_cast<int>(read_int(true).get_si());
      }
    } else if (!have_coeff) {
      throw ParseError("malformed term in '" + std::string(text) + "'");
    }
    out += monomial(coeff * sign, exponent);
  }
  return out;
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& num, const LaurentPoly& den) {
  check_ordinary(num);
  check_ordinary(den);
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero() || num.high() < den.high()) return {LaurentPoly(), num};
  const int dd = den.high();
  std::vector<Rational> r(static_cast<std::size_t>(num.high() + 1), Rational(0));
  for (const auto& [e, c] : num.terms()) r[static_cast<std::size_t>(e)] = c;
  std::vector<Rational> dv(static_cast<std::size_t>(dd + 1), Rational(0));
  for (const auto& [e, c] : den.terms()) dv[static_cast<std::size_t>(e)] = c;
  std::vector<Rational> quo(static_cast<std::size_t>(num.high() - dd + 1), Rational(0));
  const Rational inv_lead = 1 / den.leading();
  for (int i = num.high(); i >= dd; --i) {
    Rational c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    c *= inv_lead;
    quo[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) {
      if (dv[static_cast<std::size_t>(j)] != 0) {
        r[static_cast<std::size_t>(i - dd + j)] -= c * dv[static_cast<std::size_t>(j)];
      }
    }
  }
  r.resize(static_cast<std::size_t>(dd));
  return {LaurentPoly::from_coefficients(0, std::move(quo)),
          LaurentPoly::from_coefficients(0, std::move(r))};
}

LaurentPoly poly_gcd(const LaurentPoly& x, const LaurentPoly& y) {
  check_ordinary(x);
  check_ordinary(y);
  IntPoly a = to_primitive(x);
  IntPoly b = to_primitive(y);
  if (a.empty() && b.empty()) return LaurentPoly();
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return LaurentPoly(1);
    pseudo_remainder(a, b);
    std::swap(a, b);
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(a.size());
  for (const auto& c : a) coeffs.emplace_back(c, a.back());
  for (auto& c : coeffs) c.canonicalize();
  return LaurentPoly::from_coefficients(0, std::move(coeffs));
}

ExtendedGcd poly_extended_gcd(const LaurentPoly& x, const LaurentPoly& y) {
  check_ordinary(x);
  check_ordinary(y);
  LaurentPoly r0 = x, r1 = y;
  LaurentPoly s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    auto [quo, rem] = poly_divmod(r0, r1);
    r0 = std::exchange(r1, rem);
    s0 = std::exchange(s1, s0 - quo * s1);
    t0 = std::exchange(t1, t0 - quo * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  r0 *= inv;
  s0 *= inv;
  t0 *= inv;
  return {r0, s0, t0};
}

}  // namespace tlq
