#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "docalc/rational.hpp"

namespace docalc {

/// Commutative polynomial with exact rational coefficients in a fixed
/// number of variables.
class Poly {
 public:
  using Monomial = std::vector<std::uint32_t>;

  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, Rational c);
  static Poly variable(std::size_t nvars, std::size_t v);
  static Poly monomial(Rational c, Monomial exps);

  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  unsigned degree() const;
  unsigned degree_in(std::size_t v) const;
  Rational coefficient(const Monomial& m) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  Poly pow(unsigned e) const;
  Poly derivative(std::size_t v) const;
  /// Replace variable v by `value` (a polynomial in the same variables).
  Poly substitute(std::size_t v, const Poly& value) const;
  /// p(x_v) -> p(s * x_v).
  Poly scale_variable(std::size_t v, const Rational& s) const;
  /// Exact division by x_v; throws std::domain_error when not divisible.
  Poly divide_by_variable(std::size_t v) const;
  /// Exact division by (x_v - root), treating other variables as coefficients.
  Poly divide_by_linear(std::size_t v, const Rational& root) const;

  double evaluate(std::span<const double> x) const;
  Rational evaluate(std::span<const Rational> x) const;

  std::string str(std::span<const std::string> names) const;
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::size_t nvars_;
  std::map<Monomial, Rational> terms_;
};

/// Parse "+ - * ^ ( )" over rationals/decimals and the given variable names.
Poly parse_poly(std::string_view text, std::span<const std::string> names);

}  // namespace docalc
