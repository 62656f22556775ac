#include "docalc/rational.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

namespace docalc {
namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < -static_cast<i128>(INT64_MAX)) {
    throw ArithmeticOverflow("rational arithmetic overflowed int64");
  }
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make(i128 n, i128 d) {
  if (d == 0) throw std::domain_error("rational division by zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational(narrow(n), narrow(d));
}

bool isqrt(std::int64_t v, std::int64_t& root) {
  if (v < 0) return false;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(v))));
  for (std::int64_t c = r > 1 ? r - 1 : 0; c <= r + 1; ++c) {
    if (static_cast<i128>(c) * c == v) {
      root = c;
      return true;
    }
  }
  return false;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    if (n == INT64_MIN || d == INT64_MIN) throw ArithmeticOverflow("rational normalization overflow");
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n, d);
  num_ = g > 1 ? n / g : n;
  den_ = g > 1 ? d / g : d;
}

Rational Rational::operator-() const {
  if (num_ == INT64_MIN) throw ArithmeticOverflow("rational negation overflow");
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ = narrow(static_cast<i128>(num_) + o.num_);
    return *this;
  }
  *this = make(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
               static_cast<i128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ = narrow(static_cast<i128>(num_) * o.num_);
    return *this;
  }
  *this = make(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  *this = make(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  i128 lhs = static_cast<i128>(a.num_) * b.den_;
  i128 rhs = static_cast<i128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::pow(unsigned e) const {
  Rational result(1);
  Rational base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e != 0) base *= base;
  }
  return result;
}

bool Rational::exact_sqrt(Rational& out) const {
  std::int64_t n = 0;
  std::int64_t d = 0;
  if (!isqrt(num_, n) || !isqrt(den_, d)) return false;
  out = Rational(n, d);
  return true;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  std::size_t used = 0;
  if (slash == std::string::npos) {
    auto dot = text.find('.');
    if (dot == std::string::npos) {
      std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument("bad rational: " + text);
      return Rational(v);
    }
    // Finite decimal, read exactly.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::int64_t scale = 1;
    for (std::size_t k = dot + 1; k < text.size(); ++k) scale = narrow(static_cast<i128>(scale) * 10);
    std::int64_t v = std::stoll(digits, &used);
    if (used != digits.size()) throw std::invalid_argument("bad rational: " + text);
    return Rational(v, scale);
  }
  std::int64_t n = std::stoll(text.substr(0, slash), &used);
  if (used != slash) throw std::invalid_argument("bad rational: " + text);
  std::string rest = text.substr(slash + 1);
  std::int64_t d = std::stoll(rest, &used);
  if (used != rest.size()) throw std::invalid_argument("bad rational: " + text);
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (im.is_zero() && o.im.is_zero()) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = r;
  im = i;
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  Rational n = o.norm();
  if (n.is_zero()) throw std::domain_error("gaussian rational division by zero");
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

GaussRational GaussRational::pow(unsigned e) const {
  GaussRational result(1);
  GaussRational base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e != 0) base *= base;
  }
  return result;
}

std::string GaussRational::str() const {
  if (im.is_zero()) return re.str();
  std::string imag;
  if (im == Rational(1)) {
    imag = "i";
  } else if (im == Rational(-1)) {
    imag = "-i";
  } else {
    imag = im.str() + "i";
  }
  if (re.is_zero()) return imag;
  std::ostringstream os;
  os << re.str();
  if (im.sign() > 0) os << "+";
  os << imag;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.str(); }

}  // namespace docalc
