#include "docalc/doc/derivation.hpp"

#include <stdexcept>

namespace docalc::doc {

Expression classical_difference(const Expression& e) { return ncalg::prime_shift(e) - e; }

Expression doc_derivative(const Expression& e, const CommutationTable& t) {
  return ncalg::commutator(e, Expression::j(), t);
}

DerivationHandle DerivationHandle::time_shift(CommutationTable table, Rational tau) {
  if (tau.sign() <= 0) throw std::invalid_argument("time step must be positive");
  return {Kind::Commutator, Expression::j(), std::move(table), tau};
}

DerivationHandle DerivationHandle::commutator_with(Expression generator, CommutationTable table) {
  return {Kind::Commutator, std::move(generator), std::move(table), Rational(1)};
}

DerivationHandle DerivationHandle::classical_difference(CommutationTable table) {
  return {Kind::ClassicalDifference, Expression{}, std::move(table), Rational(1)};
}

Expression DerivationHandle::apply(const Expression& e) const {
  if (kind_ == Kind::ClassicalDifference) return ncalg::normalize(doc::classical_difference(e), table_);
  Expression out = ncalg::commutator(e, generator_, table_);
  if (tau_ != Rational(1)) out *= GaussRational(Rational(1) / tau_);
  return out;
}

Expression leibniz_defect(const DerivationHandle& h, const Expression& a, const Expression& b) {
  Expression defect = h.apply(a * b) - h.apply(a) * b - a * h.apply(b);
  return ncalg::normalize(defect, h.table());
}

XdxResult xdx_commutator(const Atom& x, bool commuting_series) {
  CommutationTable t("series");
  t.set_commuting_series(commuting_series);
  Expression X(x);
  Expression Xp = ncalg::prime_shift(X);
  XdxResult r;
  r.value = ncalg::commutator(X, doc_derivative(X, t), t);
  Expression step = Xp - X;
  Expression expected = Expression::j() * step * step;
  if (!commuting_series) expected += Expression::j() * ncalg::free_commutator(X, Xp);
  r.expected = ncalg::normalize(expected, t);
  r.matches = r.value == r.expected;
  return r;
}

Rational q_integer(unsigned n, const Rational& q) {
  Rational sum(0);
  Rational power(1);
  for (unsigned j = 0; j < n; ++j) {
    sum += power;
    power *= q;
  }
  return sum;
}

Poly q_integer_poly(unsigned n) {
  Poly sum(1);
  for (unsigned j = 0; j < n; ++j) sum += Poly::monomial(Rational(1), {j});
  return sum;
}

Poly q_derivative(const Poly& f, const Rational& q) {
  if (f.nvars() != 1) throw std::invalid_argument("q_derivative expects a polynomial in one variable");
  if (q == Rational(1)) return f.derivative(0);
  Poly numerator = f.scale_variable(0, q) - f;
  return numerator.divide_by_variable(0) * (Rational(1) / (q - Rational(1)));
}

Poly q_derivative_symbolic(const Poly& f) {
  if (f.nvars() != 2) throw std::invalid_argument("q_derivative_symbolic expects variables (x, q)");
  // f(qx): substitute x -> q*x.
  Poly qx = Poly::variable(2, 0) * Poly::variable(2, 1);
  Poly numerator = f.substitute(0, qx) - f;
  return numerator.divide_by_variable(0).divide_by_linear(1, Rational(1));
}

}  // namespace docalc::doc
