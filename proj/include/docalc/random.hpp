#pragma once

#include <random>

#include "docalc/ncalg/expression.hpp"
#include "docalc/poly.hpp"

namespace docalc {

// Seeded generators for property checks over the free algebra and polynomials.
class ExprGen {
 public:
  explicit ExprGen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  ncalg::Atom atom(bool allow_primes = true) {
    using ncalg::Family;
    static const ncalg::Atom pool[] = {
        ncalg::Atom(Family::X, {1}), ncalg::Atom(Family::X, {2}), ncalg::Atom(Family::Y),
        ncalg::Atom(Family::Z),      ncalg::Atom(Family::P, {1}), ncalg::Atom(Family::Const),
    };
    ncalg::Atom a = pool[uniform(0, 5)];
    if (allow_primes) a = a.primed(static_cast<std::uint32_t>(uniform(0, 1)));
    return a;
  }

  GaussRational coeff() {
    int re = uniform(-3, 3);
    int im = uniform(-1, 1);
    int den = uniform(1, 2);
    if (re == 0 && im == 0) re = 1;
    return {Rational(re, den), Rational(im)};
  }

  /// Sum of up to `max_terms` terms, each a word of up to `max_atoms` atoms
  /// with an optional leading J.
  ncalg::Expression expr(int max_terms = 3, int max_atoms = 3, bool allow_j = true) {
    ncalg::Expression e;
    int n = uniform(1, max_terms);
    for (int k = 0; k < n; ++k) {
      ncalg::Expression w(coeff());
      if (allow_j && uniform(0, 3) == 0) w = ncalg::Expression::j() * w;
      int len = uniform(0, max_atoms);
      for (int a = 0; a < len; ++a) w = w * ncalg::Expression(atom());
      e += w;
    }
    return e;
  }

  /// Up to `terms` monomials with total degree <= max_degree, small integer coefficients.
  Poly poly(std::size_t nvars, unsigned max_degree, int terms = 4) {
    Poly out(nvars);
    for (int k = 0; k < terms; ++k) {
      Poly::Monomial m(nvars);
      int budget = uniform(0, static_cast<int>(max_degree));
      for (int step = 0; step < budget; ++step) ++m[static_cast<std::size_t>(uniform(0, static_cast<int>(nvars) - 1))];
      out += Poly::monomial(Rational(uniform(-3, 3)), m);
    }
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace docalc
