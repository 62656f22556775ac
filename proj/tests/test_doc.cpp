#include "doctest.h"
#include "docalc/doc/derivation.hpp"
#include "docalc/ncalg/render.hpp"
#include "random_exprs.hpp"

using namespace docalc;
using namespace docalc::doc;
using ncalg::parse;

namespace {
const CommutationTable kFree = CommutationTable::free();
}

TEST_CASE("classical difference") {
  CHECK(classical_difference(parse("X")) == parse("X' - X"));
  CHECK(classical_difference(parse("c")).is_zero());
  // Lemma 1 form: d(XY) = X'd(Y) + d(X)Y
  Expression xy = classical_difference(parse("X Y"));
  CHECK(xy == parse("X'Y' - X Y"));
  CHECK(xy == parse("X'") * classical_difference(parse("Y")) + classical_difference(parse("X")) * parse("Y"));
}

TEST_CASE("doc derivative") {
  CHECK(doc_derivative(parse("X"), kFree) == parse("J(X' - X)"));
  Expression x = parse("X");
  Expression y = parse("Y");
  Expression lhs = doc_derivative(x * y, kFree);
  Expression rhs = x * doc_derivative(y, kFree) + doc_derivative(x, kFree) * y;
  CHECK(ncalg::equals(lhs, rhs, kFree));
  CHECK(doc_derivative(Expression(1), kFree).is_zero());
  // The literal statement D(XY) = XD(Y) + D(Y)X does not hold in general.
  CHECK(!ncalg::equals(lhs, x * doc_derivative(y, kFree) + doc_derivative(y, kFree) * x, kFree));
}

TEST_CASE("D equals J times the classical difference in the free table") {
  testing::ExprGen gen(21);
  for (int k = 0; k < 100; ++k) {
    Expression e = gen.expr(3, 3, false);
    REQUIRE(ncalg::equals(doc_derivative(e, kFree), Expression::j() * classical_difference(e), kFree));
  }
}

TEST_CASE("second DOC derivative is the J^2 second difference") {
  Expression x = parse("X");
  Expression d2 = doc_derivative(doc_derivative(x, kFree), kFree);
  CHECK(d2 == parse("J^2(X'' - 2X' + X)"));
}

TEST_CASE("leibniz defect") {
  auto D = DerivationHandle::time_shift(kFree);
  auto d = DerivationHandle::classical_difference();
  CHECK(leibniz_defect(D, parse("X"), parse("Y")).is_zero());
  CHECK(leibniz_defect(D, Expression(1), parse("X Y + Z")).is_zero());
  // Oracle: d(XY) - d(X)Y - Xd(Y) = X'Y' - X'Y - XY' + XY.
  Expression expected = parse("X'Y' - X'Y - X Y' + X Y");
  CHECK(leibniz_defect(d, parse("X"), parse("Y")) == expected);
  CHECK(expected == parse("(X' - X)(Y' - Y)"));
  CHECK(D.apply(Expression(1)).is_zero());
}

TEST_CASE("property: D is a derivation, d satisfies the shifted rule") {
  testing::ExprGen gen(99);
  auto D = DerivationHandle::time_shift(kFree);
  for (int k = 0; k < 200; ++k) {
    Expression a = gen.expr();
    Expression b = gen.expr();
    REQUIRE(leibniz_defect(D, a, b).is_zero());
    Expression shifted = classical_difference(a * b) - ncalg::prime_shift(a) * classical_difference(b) -
                         classical_difference(a) * b;
    REQUIRE(shifted.is_zero());
  }
}

TEST_CASE("time step option scales D") {
  auto D = DerivationHandle::time_shift(kFree, Rational(1, 4));
  CHECK(D.apply(parse("X")) == parse("4J(X' - X)"));
  CHECK(leibniz_defect(D, parse("X"), parse("Y X")).is_zero());
  CHECK_THROWS(DerivationHandle::time_shift(kFree, Rational(0)));
}

TEST_CASE("[X, DX]") {
  auto x = ncalg::Atom(ncalg::Family::X, {1});
  auto general = xdx_commutator(x, false);
  CHECK(general.matches);
  CHECK(general.value == parse("J(X1'X1' - 2X1'X1 + X1X1)"));
  CHECK(ncalg::render(general.value) == "J(X1'X1' - 2X1'X1 + X1X1)");
  // The same element written as J((X'-X)^2 + [X,X']).
  CHECK(general.value == parse("J((X1' - X1)^2 + [X1, X1'])"));

  auto commuting = xdx_commutator(x, true);
  CHECK(commuting.matches);
  CommutationTable series("series");
  series.set_commuting_series(true);
  CHECK(commuting.value == ncalg::normalize(parse("J(X1' - X1)^2"), series));

  auto constant = xdx_commutator(ncalg::Atom(ncalg::Family::Const), false);
  CHECK(constant.value.is_zero());
  CHECK(constant.matches);
}

TEST_CASE("q-integers") {
  CHECK(q_integer(3, Rational(2)) == Rational(7));
  CHECK(q_integer(1, Rational(5, 3)) == Rational(1));
  CHECK(q_integer(5, Rational(1)) == Rational(5));
  CHECK(q_integer(0, Rational(3)) == Rational(0));
  Poly q3 = q_integer_poly(3);
  CHECK(q3 == Poly::monomial(1, {0}) + Poly::monomial(1, {1}) + Poly::monomial(1, {2}));
}

TEST_CASE("q-derivative") {
  // Variables (x, q).
  Poly x3 = Poly::monomial(1, {3, 0});
  Poly expected = Poly::monomial(1, {2, 0}) + Poly::monomial(1, {2, 1}) + Poly::monomial(1, {2, 2});
  CHECK(q_derivative_symbolic(x3) == expected);
  CHECK(q_derivative_symbolic(Poly::monomial(1, {1, 0})) == Poly::constant(2, 1));
  CHECK(q_derivative_symbolic(Poly::constant(2, 7)).is_zero());

  CHECK(q_derivative(Poly::monomial(1, {3}), Rational(2)) == Poly::monomial(7, {2}));
  CHECK(q_derivative(Poly::monomial(1, {3}), Rational(1)) == Poly::monomial(3, {2}));
  CHECK(q_derivative(Poly::constant(1, 4), Rational(3)).is_zero());
}

TEST_CASE("property: D_q(x^n) = [n]_q x^(n-1)") {
  for (unsigned n = 1; n <= 32; ++n) {
    Poly xn = Poly::monomial(1, {n, 0});
    Poly expected(2);
    Poly qn = q_integer_poly(n);
    for (const auto& [m, c] : qn.terms()) expected += Poly::monomial(c, {n - 1, m[0]});
    REQUIRE(q_derivative_symbolic(xn) == expected);
    for (Rational q : {Rational(2), Rational(-1, 3), Rational(1)}) {
      REQUIRE(q_derivative(Poly::monomial(1, {n}), q) == Poly::monomial(q_integer(n, q), {n - 1}));
    }
  }
}
