#include "docalc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace docalc {

Poly Poly::constant(std::size_t nvars, Rational c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t v) {
  if (v >= nvars) throw std::out_of_range("poly variable index");
  Monomial m(nvars, 0);
  m[v] = 1;
  Poly p(nvars);
  p.add_term(m, Rational(1));
  return p;
}

Poly Poly::monomial(Rational c, Monomial exps) {
  Poly p(exps.size());
  p.add_term(exps, c);
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                            [](std::uint32_t e) { return e == 0; }));
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    unsigned s = 0;
    for (auto e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

unsigned Poly::degree_in(std::size_t v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("poly variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("poly variable count mismatch");
  Poly out(a.nvars_);
  Poly::Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t k = 0; k < a.nvars_; ++k) m[k] = ma[k] + mb[k];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly out = constant(nvars_, Rational(1));
  for (unsigned k = 0; k < e; ++k) out = out * *this;
  return out;
}

Poly Poly::derivative(std::size_t v) const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[v] == 0) continue;
    Monomial d = m;
    --d[v];
    out.add_term(d, c * Rational(m[v]));
  }
  return out;
}

Poly Poly::substitute(std::size_t v, const Poly& value) const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest[v] = 0;
    out += monomial(c, rest) * value.pow(m[v]);
  }
  return out;
}

Poly Poly::scale_variable(std::size_t v, const Rational& s) const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) out.add_term(m, c * s.pow(m[v]));
  return out;
}

Poly Poly::divide_by_variable(std::size_t v) const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[v] == 0) throw std::domain_error("polynomial not divisible by variable");
    Monomial d = m;
    --d[v];
    out.add_term(d, c);
  }
  return out;
}

Poly Poly::divide_by_linear(std::size_t v, const Rational& root) const {
  // Group by the other variables, then synthetic division in x_v.
  std::map<Monomial, std::vector<Rational>> groups;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest[v] = 0;
    auto& coeffs = groups[rest];
    if (coeffs.size() <= m[v]) coeffs.resize(m[v] + 1);
    coeffs[m[v]] = c;
  }
  Poly out(nvars_);
  for (auto& [rest, coeffs] : groups) {
    std::size_t deg = coeffs.size() - 1;
    Rational carry(0);
    std::vector<Rational> quotient(deg);
    for (std::size_t k = deg; k >= 1; --k) {
      carry = coeffs[k] + carry * root;
      quotient[k - 1] = carry;
    }
    Rational remainder = coeffs[0] + carry * root;
    if (!remainder.is_zero()) throw std::domain_error("polynomial not divisible by linear factor");
    for (std::size_t k = 0; k < quotient.size(); ++k) {
      Monomial m = rest;
      m[v] = static_cast<std::uint32_t>(k);
      out.add_term(m, quotient[k]);
    }
  }
  return out;
}

double Poly::evaluate(std::span<const double> x) const {
  double total = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.to_double();
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (m[k] != 0) t *= std::pow(x[k], static_cast<int>(m[k]));
    }
    total += t;
  }
  return total;
}

Rational Poly::evaluate(std::span<const Rational> x) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (m[k] != 0) t *= x[k].pow(m[k]);
    }
    total += t;
  }
  return total;
}

std::string Poly::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first.
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.rbegin(), terms_.rend());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    unsigned da = 0;
    unsigned db = 0;
    for (auto e : a.first) da += e;
    for (auto e : b.first) db += e;
    return da > db;
  });
  for (const auto& [m, c] : ordered) {
    Rational mag = c.abs();
    bool unit_monomial = std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (unit_monomial || mag != Rational(1)) {
      os << mag.str();
      wrote = true;
    }
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (m[k] == 0) continue;
      if (wrote) os << "*";
      os << (k < names.size() ? names[k] : "x" + std::to_string(k + 1));
      if (m[k] > 1) os << "^" << m[k];
      wrote = true;
    }
  }
  return os.str();
}

std::string Poly::str() const { return str(std::span<const std::string>{}); }

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, std::span<const std::string> names) : s_(s), names_(names) {}

  Poly run() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("polynomial parse error: " + msg + " at offset " + std::to_string(pos_) +
                                " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    bool neg = accept('-');
    if (!neg) accept('+');
    Poly acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
        if (start == pos_) fail("only numeric divisors are supported");
        Rational d = Rational::parse(std::string(s_.substr(start, pos_ - start)));
        if (d.is_zero()) fail("division by zero");
        acc *= Rational(1) / d;
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      return Poly::constant(names_.size(), Rational::parse(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      for (std::size_t k = 0; k < names_.size(); ++k) {
        if (names_[k] == name) return Poly::variable(names_.size(), k);
      }
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::span<const std::string> names) {
  return PolyParser(text, names).run();
}

}  // namespace docalc
