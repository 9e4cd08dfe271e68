#include "tlq/rational_function.hpp"

#include "tlq/errors.hpp"

namespace tlq {

namespace {

const LaurentPoly kOne = 1;

// Splits p = a^low * p' with p' ordinary and p'(0) != 0.
LaurentPoly strip_low(const LaurentPoly& p, int& low) {
  low = p.low();
  return p.shifted(-low);
}

std::string trim_spaces(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && s[b] == ' ') ++b;
  while (e > b && s[e - 1] == ' ') --e;
  return std::string(s.substr(b, e - b));
}

std::string strip_parens(std::string s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    return trim_spaces(std::string_view(s).substr(1, s.size() - 2));
  }
  return s;
}

}  // namespace

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  canonicalize();
}

const LaurentPoly& RationalFunction::den() const { return den_.is_zero() ? kOne : den_; }

// Expects den_ to be a genuine (nonzero) polynomial.
void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly();
    return;
  }
  if (den_.is_monomial()) {
    num_ = num_.shifted(-den_.low());
    num_ *= Rational(1 / den_.leading());
    den_ = LaurentPoly();
    return;
  }
  int nlow = 0, dlow = 0;
  LaurentPoly n = strip_low(num_, nlow);
  LaurentPoly d = strip_low(den_, dlow);
  LaurentPoly g = poly_gcd(n, d);
  if (!g.is_one()) {
    n = poly_divmod(n, g).first;
    d = poly_divmod(d, g).first;
  }
  Rational lead = d.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    n *= inv;
    d *= inv;
  }
  num_ = n.shifted(nlow - dlow);
  den_ = d.is_one() ? LaurentPoly() : std::move(d);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inv() const {
  if (is_zero()) throw DivisionByZero();
  return RationalFunction(den(), num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero()) {
      den_ = LaurentPoly();
    } else if (!den_.is_zero()) {
      canonicalize();
    }
    return *this;
  }
  const LaurentPoly& da = den();
  const LaurentPoly& db = o.den();
  LaurentPoly g = poly_gcd(da, db);
  LaurentPoly d1 = poly_divmod(da, g).first;
  LaurentPoly d2 = poly_divmod(db, g).first;
  num_ = num_ * d2 + o.num_ * d1;
  den_ = da * d2;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  if (den_.is_zero() && o.den_.is_zero()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel before multiplying so the result is already reduced.
  int l1 = 0, l2 = 0;
  LaurentPoly n1 = strip_low(num_, l1);
  LaurentPoly n2 = strip_low(o.num_, l2);
  LaurentPoly d1 = den(), d2 = o.den();
  if (!d2.is_one()) {
    LaurentPoly g1 = poly_gcd(n1, d2);
    if (!g1.is_one()) {
      n1 = poly_divmod(n1, g1).first;
      d2 = poly_divmod(d2, g1).first;
    }
  }
  if (!d1.is_one()) {
    LaurentPoly g2 = poly_gcd(n2, d1);
    if (!g2.is_one()) {
      n2 = poly_divmod(n2, g2).first;
      d1 = poly_divmod(d1, g2).first;
    }
  }
  LaurentPoly d = d1 * d2;
  LaurentPoly n = (n1 * n2).shifted(l1 + l2);
  Rational lead = d.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    n *= inv;
    d *= inv;
  }
  num_ = std::move(n);
  den_ = d.is_one() ? LaurentPoly() : std::move(d);
  return *this;
}

std::string RationalFunction::to_string() const {
  if (den_.is_zero()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RationalFunction RationalFunction::parse(std::string_view text) {
  std::string s = trim_spaces(text);
  int depth = 0;
  std::size_t split = std::string::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      --depth;
    } else if (s[i] == '/' && depth == 0 && i > 0 && s[i - 1] == ' ') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return LaurentPoly::parse(strip_parens(s));
  LaurentPoly n = LaurentPoly::parse(strip_parens(trim_spaces(std::string_view(s).substr(0, split))));
  LaurentPoly d = LaurentPoly::parse(strip_parens(trim_spaces(std::string_view(s).substr(split + 1))));
  if (d.is_zero()) throw ParseError("zero denominator in '" + s + "'");
  return RationalFunction(std::move(n), std::move(d));
}

}  // namespace tlq
