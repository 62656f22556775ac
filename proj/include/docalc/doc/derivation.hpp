#pragma once

#include "docalc/ncalg/table.hpp"
#include "docalc/poly.hpp"

namespace docalc::doc {

using ncalg::Atom;
using ncalg::CommutationTable;
using ncalg::Expression;

/// dX = X' - X. Not a derivation: d(XY) = X'd(Y) + d(X)Y.
Expression classical_difference(const Expression& e);

/// DX = [X, J], which equals J(X' - X) in the free table.
Expression doc_derivative(const Expression& e, const CommutationTable& t);

/// A linear operator on expressions. Commutator kinds act as
/// A -> scale * [A, K] and satisfy the Leibniz rule exactly.
class DerivationHandle {
 public:
  enum class Kind { Commutator, ClassicalDifference };

  /// D = [., J] / tau. tau = 1 is the unit time step.
  static DerivationHandle time_shift(CommutationTable table, Rational tau = Rational(1));
  static DerivationHandle commutator_with(Expression generator, CommutationTable table);
  static DerivationHandle classical_difference(CommutationTable table = CommutationTable::free());

  Kind kind() const { return kind_; }
  const Expression& generator() const { return generator_; }
  const CommutationTable& table() const { return table_; }
  const Rational& tau() const { return tau_; }

  Expression apply(const Expression& e) const;

 private:
  DerivationHandle(Kind k, Expression gen, CommutationTable t, Rational tau)
      : kind_(k), generator_(std::move(gen)), table_(std::move(t)), tau_(tau) {}

  Kind kind_;
  Expression generator_;
  CommutationTable table_;
  Rational tau_;
};

/// h(ab) - h(a)b - a h(b), normalized under the handle's table.
Expression leibniz_defect(const DerivationHandle& h, const Expression& a, const Expression& b);

struct XdxResult {
  Expression value;     // normalize([x, Dx])
  Expression expected;  // closed form for the chosen series model
  bool matches = false;
};

/// [x, Dx] for a single series x. With `commuting_series` the times of x
/// commute and the result is J(x' - x)^2; otherwise J((x' - x)^2 + [x, x']).
XdxResult xdx_commutator(const Atom& x, bool commuting_series);

/// Σ_{j<n} q^j for a numeric q; n = 0 gives 0.
Rational q_integer(unsigned n, const Rational& q);
/// [n]_q as a polynomial in one variable q.
Poly q_integer_poly(unsigned n);

/// (f(qx) - f(x)) / (qx - x) for a polynomial f in one variable x.
/// q = 1 returns the ordinary derivative.
Poly q_derivative(const Poly& f, const Rational& q);

/// Same with q symbolic: `f` is a polynomial in (x, q) with x as
/// variable 0 and q as variable 1; the result is exact in both.
Poly q_derivative_symbolic(const Poly& f);

}  // namespace docalc::doc
