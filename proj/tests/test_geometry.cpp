#include <cmath>
#include <random>

#include "doctest.h"
#include "docalc/geometry/metric.hpp"
#include "docalc/geometry/poisson.hpp"
#include "docalc/geometry/symbolic.hpp"
#include "docalc/ncalg/render.hpp"
#include "random_exprs.hpp"

using namespace docalc;
using namespace docalc::geometry;
using ncalg::parse;

namespace {

// Evaluate a combination of ∇_i g_jk atoms by reading the numeric partials.
double eval_nabla(const Expression& e, const std::vector<Mat>& dg) {
  double sum = 0;
  for (const auto& t : e.terms()) {
    REQUIRE(t.word.atoms.size() == 1);
    const auto& a = t.word.atoms[0];
    REQUIRE(a.family == Family::NablaG);
    REQUIRE(t.coeff.im.is_zero());
    sum += t.coeff.re.to_double() * dg[a.indices[0] - 1](a.indices[1] - 1, a.indices[2] - 1);
  }
  return sum;
}

Poly random_poly(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree = 2, int terms = 3) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  Poly out(nvars);
  for (int k = 0; k < terms; ++k) {
    Poly::Monomial m(nvars);
    for (auto& e : m) e = deg(rng);
    out += Poly::monomial(Rational(coeff(rng)), m);
  }
  return out;
}

}  // namespace

TEST_CASE("flat curvature vanishes") {
  auto bg = flat_background(2);
  testing::ExprGen gen(5);
  Expression p1 = parse("P1");
  Expression p2 = parse("P2");
  for (const char* f : {"X1", "X2", "X1 X2 P1", "P2 X1 X1", "c X2"}) {
    CHECK(curvature_operator(p1, p2, parse(f), bg.table).is_zero());
  }
  CHECK(curvature_operator(p1, p1, parse("X1 X2"), bg.table).is_zero());
}

TEST_CASE("curvature operator on free atoms") {
  auto free = CommutationTable::free();
  Expression a = parse("X"), b = parse("Y"), f = parse("Z");
  Expression value = curvature_operator(a, b, f, free);
  // [[a,b],f] = abf - baf - fab + fba
  CHECK(value == parse("X Y Z - Y X Z - Z X Y + Z Y X"));
  CHECK(value == covariant_commutator(a, b, f, free));
  Expression jacobi = value + curvature_operator(b, f, a, free) + curvature_operator(f, a, b, free);
  CHECK(jacobi.is_zero());
}

TEST_CASE("property: curvature operator equals the covariant commutator") {
  auto free = CommutationTable::free();
  auto flat = flat_background(2);
  testing::ExprGen gen(17);
  for (int k = 0; k < 50; ++k) {
    Expression a = gen.expr(2, 2, false), b = gen.expr(2, 2, false), f = gen.expr(2, 2, false);
    REQUIRE(curvature_operator(a, b, f, free) == covariant_commutator(a, b, f, free));
  }
  for (int k = 0; k < 30; ++k) {
    Expression f = gen.expr(2, 2, false);
    REQUIRE(curvature_operator(parse("X1 + P2"), parse("P1"), f, flat.table) ==
            covariant_commutator(parse("X1 + P2"), parse("P1"), f, flat.table));
  }
}

TEST_CASE("gauge curvature") {
  auto bg = gauge_background(3);
  CHECK(gauge_curvature(bg, 1, 2) == parse("dA12 - dA21 + A1 A2 - A2 A1"));
  CHECK(gauge_curvature(bg, 2, 3) == parse("dA23 - dA32 + [A2, A3]"));
  CHECK(gauge_curvature(bg, 2, 2).is_zero());
  auto abelian = gauge_background(3, {.abelian = true});
  CHECK(gauge_curvature(abelian, 1, 2) == parse("dA12 - dA21"));
  CHECK(gauge_curvature(abelian, 1, 3) == -gauge_curvature(abelian, 3, 1));
  // Vanishing potentials leave [P_i, P_j] in the flat table.
  CHECK(ncalg::commutator(parse("P1"), parse("P2"), flat_background(3).table).is_zero());
  CHECK_THROWS(gauge_curvature(bg, 1, 4));
  CHECK_THROWS(gauge_curvature(flat_background(3), 1, 2));
}

TEST_CASE("metric symmetry") {
  auto bg = metric_background(3);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      auto r = metric_symmetry(bg, i, j);
      CHECK(r.residual.is_zero());
      CHECK(r.d_commutator.is_zero());
    }
  }
  auto asym = metric_background(2, {.symmetric = false});
  auto r = metric_symmetry(asym, 1, 2);
  CHECK(r.residual == parse("g12 - g21"));
  CHECK(impose_metric_symmetry(r.residual).is_zero());
  CHECK(metric_symmetry(asym, 2, 2).residual.is_zero());

  // Dropping [X_i, X_j] = 0 keeps a nonzero D[X_i, X_j].
  auto loose = metric_background(2, {.symmetric = false, .commuting_coordinates = false});
  auto w = metric_symmetry(loose, 1, 2);
  CHECK(w.d_commutator == parse("g12 - g21"));
  CHECK(!w.d_commutator.is_zero());
  CHECK(w.residual.is_zero());
}

TEST_CASE("derived [X, F] rule") {
  auto bg = metric_background(3);
  CHECK(ncalg::commutator(parse("X1"), parse("F23"), bg.table) == parse("Ng312 - Ng213"));
  CHECK(ncalg::commutator(parse("X1"), parse("F23 + F32"), bg.table).is_zero());
}

TEST_CASE("levi-civita via nested commutators") {
  auto bg = metric_background(3);
  CHECK(levi_civita_nested(bg, 1, 2, 3) == parse("Ng123 - Ng312 + Ng213"));
  CHECK(ncalg::render(levi_civita_nested(bg, 1, 2, 3)) == "Ng123 + Ng213 - Ng312");
  // Equal indices: Ng111 - Ng111 + Ng111.
  CHECK(levi_civita_nested(bg, 1, 1, 1) == parse("Ng111"));
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) REQUIRE(levi_civita_nested(bg, i, j, k) == levi_civita_expected(i, j, k));
    }
  }
  auto flat = metric_background(3, {.constant_metric = true});
  CHECK(levi_civita_nested(flat, 1, 2, 3).is_zero());
}

TEST_CASE("property: symmetries of the symbolic results") {
  auto gauge = gauge_background(3);
  auto metric = metric_background(3);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      REQUIRE(gauge_curvature(gauge, i, j) == -gauge_curvature(gauge, j, i));
      for (int k = 1; k <= 3; ++k) REQUIRE(levi_civita_nested(metric, i, j, k) == levi_civita_nested(metric, j, i, k));
    }
  }
}

TEST_CASE("levi-civita index-free route") {
  auto bg = metric_background(3);
  auto X = [](int i) { return coord(i); };
  CHECK(levi_civita_index_free(bg, X(1), X(2), X(3)) == parse("Ng123 - Ng312 + Ng213"));
  CHECK(levi_civita_index_free(bg, X(1), X(1), X(1)) == parse("Ng111"));
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        REQUIRE(levi_civita_index_free(bg, X(i), X(j), X(k)) == levi_civita_nested(bg, i, j, k));
      }
    }
  }
  auto flat = metric_background(3, {.constant_metric = true});
  CHECK(levi_civita_index_free(flat, X(1), X(2), X(3)).is_zero());
  CHECK_THROWS(levi_civita_index_free(bg, velocity(1), X(2), X(3)));
}

TEST_CASE("levi-civita matches the numeric first-kind symbols") {
  auto bg = metric_background(3);
  auto m = MetricField::parse("3\nx1^2 + 2, x2, 0\nx2, 1 + x3^2, x1*x2\n0, x1*x2, 3 + x1");
  Vec x(3);
  x << 0.3, -0.7, 1.1;
  auto c = christoffel_numeric(m, x);
  auto dg = m.partials(x);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        double symbolic = eval_nabla(levi_civita_nested(bg, i, j, k), dg) / 2;
        REQUIRE(symbolic == doctest::Approx(c.first_kind(i - 1, j - 1, k - 1)));
        REQUIRE(c.first_kind(i - 1, j - 1, k - 1) == doctest::Approx(c.first_kind_lowered_first(k - 1, i - 1, j - 1)));
      }
    }
  }
}

TEST_CASE("metric_dot") {
  CHECK(metric_dot(parse("X1 g12")) == parse("V1 g12 + X1 Dg12"));
  CHECK(metric_dot(parse("c V2")) == parse("c W2"));
  CHECK_THROWS(metric_dot(parse("J X1")));
  CHECK_THROWS(metric_dot(parse("P1")));
}

TEST_CASE("bianchi cyclic sum") {
  auto free = CommutationTable::free();
  CHECK(bianchi_cyclic(1, 2, 3, free).is_zero());
  CHECK(bianchi_cyclic(1, 1, 2, free).is_zero());
  CHECK(bianchi_cyclic(1, 2, 3, metric_background(3).table).is_zero());
  testing::ExprGen gen(3);
  for (int k = 0; k < 100; ++k) {
    REQUIRE(bianchi_cyclic(Expression(gen.atom()), Expression(gen.atom()), Expression(gen.atom()), free).is_zero());
  }
}

TEST_CASE("lorentz force consistency") {
  auto bg = lorentz_background(3);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      auto r = lorentz_force_consistency(bg, i, j);
      REQUIRE(r.bracket == Expression(field(j, i)));
      REQUIRE(r.field_matches);
      REQUIRE(lorentz_force_consistency(bg, i, j, false).bracket.is_zero());
    }
  }
  auto r = lorentz_force_consistency(bg, 1, 2);
  CHECK(impose_field_antisymmetry(r.velocity_commutator) == parse("F12"));
}

TEST_CASE("christoffel symbols") {
  auto e = christoffel_numeric(MetricField::euclidean(3), Vec::Constant(3, 0.5));
  for (double v : e.lowered) CHECK(v == 0.0);
  for (double v : e.raised) CHECK(v == 0.0);

  // Polar coordinates: Γ^r_θθ = -r, Γ^θ_rθ = 1/r.
  Vec x(2);
  x << 2.0, 0.4;
  auto c = christoffel_numeric(MetricField::polar(), x);
  CHECK(c.second_kind(0, 1, 1) == doctest::Approx(-2.0));
  CHECK(c.second_kind(1, 0, 1) == doctest::Approx(0.5));
  CHECK(c.second_kind(1, 1, 0) == doctest::Approx(0.5));
  CHECK(c.second_kind(0, 0, 0) == 0.0);
  CHECK(c.reconstruction_residual < 1e-9);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<Poly>> g(3, std::vector<Poly>(3, Poly(3)));
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) {
        g[i][j] = random_poly(rng, 3);
        g[j][i] = g[i][j];
      }
      g[i][i] += Poly::constant(3, Rational(40));
    }
    auto m = MetricField::from_polynomials(g);
    Vec p = Vec::Random(3) * 0.5;
    REQUIRE(christoffel_numeric(m, p).reconstruction_residual < 1e-9);
  }
}

TEST_CASE("callable metric with finite differences") {
  auto fn = [](const Vec& x) {
    Mat g = Mat::Identity(2, 2);
    g(1, 1) = x(0) * x(0);
    return g;
  };
  auto m = MetricField::from_function(2, fn);
  Vec x(2);
  x << 2.0, 0.1;
  auto c = christoffel_numeric(m, x);
  CHECK(c.second_kind(0, 1, 1) == doctest::Approx(-2.0).epsilon(1e-8));
  CHECK(c.second_kind(1, 0, 1) == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("metric errors") {
  auto asym = MetricField::parse("2\n1, x1\n0, 1");
  Vec x(2);
  x << 1.0, 1.0;
  CHECK_THROWS_AS(christoffel_numeric(asym, x), NonSymmetricMetric);
  auto singular = MetricField::parse("2\n1, 1\n1, 1");
  CHECK_THROWS_AS(christoffel_numeric(singular, x), SingularMetric);
  CHECK_THROWS_AS(christoffel_numeric(MetricField::polar(), Vec::Zero(2)), SingularMetric);
  CHECK_THROWS(MetricField::parse("2\n1, 0\n0"));
  CHECK_THROWS(MetricField::parse("zero"));
  auto commented = MetricField::parse("# polar\n2\n1\n0\n0\nx1^2\n");
  CHECK(commented.at(x)(1, 1) == 1.0);
}

TEST_CASE("parallel translation preserves the inner product to second order") {
  Vec x(2);
  x << 2.0, 0.3;
  Vec a(2);
  a << 0.7, -0.4;
  Vec dir(2);
  dir << 1.0, 0.6;
  CHECK(std::abs(parallel_invariance_check(MetricField::euclidean(2), x, a, 1e-3 * dir)) < 1e-15);
  CHECK(parallel_invariance_check(MetricField::polar(), x, Vec::Zero(2), 1e-3 * dir) == 0.0);
  double r1 = parallel_invariance_check(MetricField::polar(), x, a, 1e-3 * dir);
  double r2 = parallel_invariance_check(MetricField::polar(), x, a, 5e-4 * dir);
  CHECK(std::abs(r1) < 1e-5);
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("lagrangian bracket") {
  auto flat = lagrangian_bracket_check(MetricField::euclidean(3), {Vec::Ones(3)});
  CHECK((flat.brackets[0] - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-9);
  auto heavy = lagrangian_bracket_check(MetricField::polar(), {Vec::Constant(2, 2.0)}, 2.0);
  CHECK(heavy.brackets[0](1, 1) == doctest::Approx(2.0));
  Vec x(2);
  x << 2.0, 1.0;
  auto r = lagrangian_bracket_check(MetricField::polar(), {x});
  REQUIRE(r.brackets.size() == 1);
  CHECK(r.brackets[0](0, 0) == doctest::Approx(1.0));
  CHECK(r.brackets[0](1, 1) == doctest::Approx(4.0));
  CHECK(std::abs(r.brackets[0](0, 1)) < 1e-9);
  CHECK(r.max_error < 1e-8);
  auto m = MetricField::parse("3\nx1^2 + 2, x2, 0\nx2, 1 + x3^2, x1*x2\n0, x1*x2, 3 + x1");
  std::vector<Vec> pts;
  for (int k = 0; k < 10; ++k) pts.push_back(Vec::Random(3) * 0.5);
  CHECK(lagrangian_bracket_check(m, pts, 2.5).max_error < 1e-8);
}

TEST_CASE("poisson bracket") {
  PhaseSpace s(1);
  Poly q = s.q(), p = s.p();
  CHECK(poisson_bracket(s, q, p) == s.constant(1));
  CHECK(poisson_bracket(s, q * q, p * p) == q * p * Rational(4));
  CHECK(poisson_bracket(s, s.parse("q^2*p + 3"), s.parse("q^2*p + 3")).is_zero());
  PhaseSpace s2(2);
  CHECK(poisson_bracket(s2, s2.q(2), s2.p(2)) == s2.constant(1));
  CHECK(poisson_bracket(s2, s2.q(1), s2.p(2)).is_zero());
}

TEST_CASE("property: poisson jacobi identity") {
  PhaseSpace s(2);
  std::mt19937_64 rng(4);
  for (int k = 0; k < 40; ++k) {
    Poly a = random_poly(rng, 4, 1), b = random_poly(rng, 4, 1), c = random_poly(rng, 4, 1);
    Poly jac = poisson_bracket(s, a, poisson_bracket(s, b, c)) + poisson_bracket(s, b, poisson_bracket(s, c, a)) +
               poisson_bracket(s, c, poisson_bracket(s, a, b));
    REQUIRE(jac.is_zero());
  }
}

TEST_CASE("poisson leibniz defect") {
  PhaseSpace s(1);
  Poly q = s.q(), p = s.p();
  auto ham = hamiltonian_flow(s, p * p * Rational(1, 2));
  CHECK(poisson_leibniz_defect(s, q, p, ham).is_zero());
  CHECK(poisson_leibniz_defect(s, q * q, p * q, ham).is_zero());

  PhaseFlow stretch{{q}, {Poly(2)}};
  CHECK(flow_divergence(s, stretch) == s.constant(1));
  CHECK(poisson_leibniz_defect(s, q, p, stretch) == s.constant(-1));
  CHECK(poisson_defect_formula(s, q, p, stretch) == s.constant(-1));
  CHECK(poisson_leibniz_defect(s, s.constant(5), p * p, stretch).is_zero());
  CHECK_THROWS(poisson_leibniz_defect(s, q, p, PhaseFlow{}));
}

TEST_CASE("property: defect formula for one degree of freedom") {
  PhaseSpace s(1);
  std::mt19937_64 rng(12);
  for (int k = 0; k < 100; ++k) {
    Poly a = random_poly(rng, 2), b = random_poly(rng, 2);
    PhaseFlow flow{{random_poly(rng, 2)}, {random_poly(rng, 2)}};
    REQUIRE(poisson_leibniz_defect(s, a, b, flow) == poisson_defect_formula(s, a, b, flow));
    REQUIRE(poisson_leibniz_defect(s, a, b, hamiltonian_flow(s, random_poly(rng, 2, 3))).is_zero());
  }
  PhaseSpace s2(2);
  for (int k = 0; k < 50; ++k) {
    Poly a = random_poly(rng, 4), b = random_poly(rng, 4), h = random_poly(rng, 4, 2, 4);
    REQUIRE(poisson_leibniz_defect(s2, a, b, hamiltonian_flow(s2, h)).is_zero());
  }
}
