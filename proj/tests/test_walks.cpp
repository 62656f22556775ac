#include <cmath>
#include <random>

#include "doctest.h"
#include "docalc/walks/physics.hpp"
#include "docalc/walks/quantum.hpp"
#include "docalc/walks/random_walk.hpp"

using namespace docalc;
using namespace docalc::walks;

TEST_CASE("brownian single step and zero k") {
  WalkConfig c{.k = 2.0, .tau = 0.5, .steps = 1, .walkers = 1000, .seed = 3};
  auto r = brownian_ensemble(c);
  CHECK(r.msd[1] == doctest::Approx(1.0));  // Δ² = kτ
  c.k = 0;
  c.steps = 50;
  c.record = 4;
  auto still = brownian_ensemble(c);
  for (double m : still.msd) CHECK(m == 0.0);
  for (const auto& p : still.paths) {
    for (double v : p) CHECK(v == 0.0);
  }
  CHECK_THROWS(brownian_ensemble(WalkConfig{.walkers = 0}));
  CHECK_THROWS(brownian_ensemble(WalkConfig{.steps = 0}));
}

TEST_CASE("brownian steps have length delta and streams are per walker") {
  WalkConfig c{.k = 1.0, .tau = 0.25, .steps = 200, .walkers = 10, .seed = 9, .record = 10};
  auto a = brownian_ensemble(c);
  for (const auto& p : a.paths) {
    for (std::size_t t = 1; t < p.size(); ++t) REQUIRE(std::abs(p[t] - p[t - 1]) == doctest::Approx(c.delta()));
  }
  // A bigger ensemble reproduces the same first walkers.
  c.walkers = 40;
  auto b = brownian_ensemble(c);
  for (std::size_t w = 0; w < 10; ++w) CHECK(a.paths[w] == b.paths[w]);
  auto again = brownian_ensemble(c);
  CHECK(again.msd == b.msd);
  c.seed = 10;
  CHECK(brownian_ensemble(c).msd != b.msd);
}

TEST_CASE("brownian msd slope and mean") {
  WalkConfig c{.k = 1.0, .tau = 1.0, .steps = 1000, .walkers = 10000, .seed = 2024};
  auto r = brownian_ensemble(c);
  CHECK(r.slope == doctest::Approx(c.k).epsilon(0.05));
  // Mean displacement within 4 standard errors of zero.
  const double t = static_cast<double>(c.steps);
  CHECK(std::abs(r.mean.back()) < 4 * std::sqrt(c.k * t / static_cast<double>(c.walkers)));
}

TEST_CASE("diffusion stencil") {
  std::vector<Rational> spike(5, Rational(0));
  spike[2] = Rational(1);
  auto two = diffusion_fd_evolve(spike, 2);
  CHECK(two == std::vector<Rational>{Rational(1, 4), Rational(0), Rational(1, 2), Rational(0), Rational(1, 4)});

  std::vector<double> uniform(8, 0.125);
  CHECK(diffusion_fd_evolve(uniform, 13) == uniform);

  // Binomial law against Pascal's triangle built independently.
  const std::uint64_t T = 20;
  std::vector<Rational> p(2 * T + 1, Rational(0));
  p[T] = Rational(1);
  std::vector<std::int64_t> row{1};
  for (std::uint64_t t = 1; t <= T; ++t) {
    std::vector<std::int64_t> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = next;
    auto evolved = diffusion_fd_evolve(p, t);
    check_distribution(evolved);
    for (std::uint64_t j = 0; j <= t; ++j) {
      REQUIRE(evolved[T - t + 2 * j] == Rational(row[j], static_cast<std::int64_t>(1) << t));
    }
  }
  auto closed = binomial_spike(T);
  auto evolved = diffusion_fd_evolve(p, T);
  CHECK(closed == evolved);
}

TEST_CASE("diffusion variance grows by delta squared per step") {
  std::vector<double> p(101, 0.0);
  p[50] = 1.0;
  for (int t : {1, 5, 17, 30}) {
    auto e = diffusion_fd_evolve(p, static_cast<std::uint64_t>(t));
    CHECK(grid_variance(e, 50) == doctest::Approx(t));
    double total = 0;
    for (double v : e) total += v;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
  }
  std::vector<Rational> edge(3, Rational(0));
  edge[0] = Rational(1);
  auto absorbed = diffusion_fd_evolve(edge, 1, Boundary::Absorbing);
  CHECK(absorbed == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(0)});
  CHECK_THROWS(check_distribution(std::vector<double>{0.5, 0.6}));
  CHECK_THROWS(check_distribution(std::vector<double>{1.5, -0.5}));
}

TEST_CASE("quantum walk stencil") {
  using C = std::complex<double>;
  auto flat = make_field(std::vector<C>(16, C(0.3, -0.2)), 0.1, 0.01);
  auto evolved = quantum_walk_evolve(flat, 5);
  for (std::size_t i = 0; i < 16; ++i) CHECK(std::abs(evolved.at(i) - C(0.3, -0.2)) < 1e-15);
  CHECK(evolved.t == doctest::Approx(0.05));

  std::vector<C> spike(7, 0.0);
  spike[3] = 1.0;
  auto one = quantum_walk_evolve(make_field(spike, 1, 1), 1);
  CHECK(one.at(2) == C(0, 0.5));
  CHECK(one.at(3) == C(1, -1));
  CHECK(one.at(4) == C(0, 0.5));
  CHECK(one.at(0) == C(0, 0));
}

TEST_CASE("quantum walk commutes with grid shifts") {
  using C = std::complex<double>;
  std::mt19937_64 rng(1);
  std::normal_distribution<double> nd;
  std::vector<C> psi(20);
  for (auto& v : psi) v = C(nd(rng), nd(rng));
  std::vector<C> shifted(20);
  for (std::size_t i = 0; i < 20; ++i) shifted[(i + 3) % 20] = psi[i];
  auto a = quantum_walk_evolve(make_field(psi, 1, 1), 4);
  auto b = quantum_walk_evolve(make_field(shifted, 1, 1), 4);
  for (std::size_t i = 0; i < 20; ++i) CHECK(std::abs(b.at((i + 3) % 20) - a.at(i)) < 1e-12);
}

TEST_CASE("crank-nicolson reference agrees with the closed form") {
  using C = std::complex<double>;
  const double delta = 1.0 / 32, beta = 0.5, s0 = 1.0, t = 1.0 / 16;
  std::vector<C> psi0;
  for (double x = -16; x < 16 - 1e-12; x += delta) psi0.push_back(std::exp(-x * x / (2 * s0)));
  auto ref = crank_nicolson_reference(psi0, delta, beta, t, 256);
  double err = 0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    double x = -16 + static_cast<double>(i) * delta;
    err += std::norm(ref[i] - free_gaussian(x, t, s0, beta)) * delta;
  }
  CHECK(std::sqrt(err) < 1e-5);
  CHECK(free_gaussian(0.7, 0, s0, beta) == C(std::exp(-0.49 / 2), 0));
}

TEST_CASE("quantum refinement study") {
  auto quad = quantum_refinement_study({});
  REQUIRE(quad.levels.size() == 4);
  CHECK(quad.monotone);
  for (std::size_t l = 1; l < quad.levels.size(); ++l) {
    CHECK(quad.levels[l].steps == 4 * quad.levels[l - 1].steps);
    // First order in τ: each halving of Δ quarters τ and the error.
    CHECK(quad.levels[l - 1].l2_error / quad.levels[l].l2_error == doctest::Approx(4.0).epsilon(0.1));
  }
  // The stencil is not unitary; the drift is reported, small and positive.
  CHECK(quad.levels[0].norm_drift > 0);
  CHECK(quad.levels[0].norm_drift < 1e-3);

  QuantumStudyConfig dbl{.levels = 3, .precision = Precision::Double};
  CHECK(quantum_refinement_study(dbl).monotone);
  CHECK_THROWS(quantum_refinement_study(QuantumStudyConfig{.t_end = 0.1}));
}

TEST_CASE("planck numbers") {
  auto unit = planck_numbers(1, 1, 1);
  CHECK(unit.mass == 1.0);
  CHECK(unit.length == 1.0);
  CHECK(unit.time == 1.0);
  CHECK(unit.residual == 0.0);
  auto p = planck_numbers(si::hbar, si::c, si::G);
  CHECK(p.residual < 1e-12);
  CHECK(p.mass == doctest::Approx(2.176434e-8).epsilon(1e-6));
  CHECK(p.length == doctest::Approx(1.616255e-35).epsilon(1e-6));
  CHECK(p.time == doctest::Approx(5.391247e-44).epsilon(1e-6));
  CHECK(p.jones_mass == p.mass / 2);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> logm(-40, 10);
  for (int k = 0; k < 100; ++k) REQUIRE(compton_residual(si::hbar, si::c, std::pow(10.0, logm(rng))) < 1e-12);
  CHECK_THROWS(planck_numbers(0, 1, 1));
  CHECK_THROWS(compton_residual(1, 1, -2));
}

TEST_CASE("chaos recursion") {
  auto o = chaos_orbit({.k = 1, .n = 1, .initial = {1, 3}, .max_steps = 1});
  REQUIRE(o.y.size() == 3);
  CHECK(o.y[2] == -2.0);  // (1 - 3)/(3 - 2)
  CHECK_THROWS_AS(chaos_orbit({.k = 1, .n = 1, .initial = {1, 2}}), SingularStart);
  CHECK_THROWS(chaos_orbit({.k = 1, .n = 2, .initial = {1, 2}}));

  // n = 2: y_3 = (k - y_2 y_0)/(y_1 - 2y_0).
  auto o2 = chaos_orbit({.k = 2, .n = 2, .initial = {1, 4, 3}, .max_steps = 1});
  CHECK(o2.y[3] == doctest::Approx((2.0 - 3.0 * 1.0) / (4.0 - 2.0)));

  for (double k : {-2.0, -0.5, 0.3, 1.0, 2.5}) {
    auto orbit = chaos_orbit({.k = k, .n = 1, .initial = {0.4, 1.7}, .max_steps = 500});
    for (double r : orbit.residuals) REQUIRE(r < 1e-9);
  }
  // k = 0, y = (1, 3): y2 = -3/1 = -3, y3 = (0 - (-3)(3))/(-3 - 6) = -1, ...
  auto z = chaos_orbit({.k = 0, .n = 1, .initial = {1, 3}, .max_steps = 2});
  CHECK(z.y[2] == -3.0);
  CHECK(z.y[3] == -1.0);
  CHECK(orbit_kind_name(OrbitKind::Periodic) == "periodic");
}

TEST_CASE("chaos classification") {
  // With k = 0 a constant window is fixed: (0 - c²)/(c - 2c) = c.
  auto fixed = chaos_orbit({.k = 0, .n = 1, .initial = {2, 2}, .max_steps = 20});
  CHECK(fixed.kind == OrbitKind::Periodic);
  CHECK(fixed.period == 1);
  auto blow = chaos_orbit({.k = 1, .n = 1, .initial = {1, 2.0000001}, .max_steps = 50, .guard = 1e-12,
                           .overflow = 1e3});
  CHECK(blow.kind == OrbitKind::Unbounded);
}

TEST_CASE("sign field model") {
  SignSeries same{{{1, 1, 1}, {1, 1, 1}}, 1.0};
  auto r = sign_field_series(same);
  REQUIRE(r.b.size() == 1);
  CHECK(r.b[0] == Sign3{0, 0, 0});
  SignSeries turn{{{1, 1, 1}, {1, -1, 1}}, 4.0};
  auto t = sign_field_series(turn);
  CHECK(t.b[0] == Sign3{-2, 0, 2});
  CHECK(t.consistent);
  CHECK(t.position[2] == Vec3{4, 0, 4});

  // All 64 ordered pairs of sign vectors.
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      Sign3 e{a & 1 ? 1 : -1, a & 2 ? 1 : -1, a & 4 ? 1 : -1};
      Sign3 f{b & 1 ? 1 : -1, b & 2 ? 1 : -1, b & 4 ? 1 : -1};
      for (int v : sign_cross(f, e)) REQUIRE((v == 0 || v == 2 || v == -2));
    }
  }
  std::mt19937_64 rng(7);
  SignSeries walk;
  walk.k = 2.0;
  for (int s = 0; s < 100; ++s) walk.eps.push_back({rng() & 1 ? 1 : -1, rng() & 1 ? 1 : -1, rng() & 1 ? 1 : -1});
  CHECK(sign_field_series(walk).consistent);
  CHECK_THROWS(sign_field_series(SignSeries{{{1, 0, 1}}, 1.0}));
}

TEST_CASE("commuting scalars cannot carry the sign model") {
  CHECK(!commuting_scalar_feasible(1.0).feasible);
  CHECK(!commuting_scalar_feasible(-3.0).feasible);
  CHECK(commuting_scalar_feasible(0.0).feasible);
}

TEST_CASE("discrete lorentz step") {
  const double v = 1.5, b = 0.5, e = 2.0;
  auto s = EMState::make({0, 0, 0}, {v, 0, 0}, {0, e, 0}, {0, 0, b});
  auto r = em_lorentz_step(s);
  CHECK(r.lambda == doctest::Approx(-e * v / b));
  CHECK(r.residual < 1e-12);

  auto noe = em_lorentz_step(EMState::make({0, 0, 0}, {1, 2, 0}, {0, 0, 0}, {0, 0, 3}));
  CHECK(noe.lambda == 0.0);
  CHECK(noe.residual == 0.0);

  auto none = em_lorentz_step(EMState::make({1, 1, 1}, {1, 2, 3}, {0, 0, 0}, {0, 0, 0}));
  CHECK(none.dx == Vec3{1, 2, 3});
  CHECK(none.x == Vec3{2, 3, 4});
  CHECK(none.residual == 0.0);

  CHECK_THROWS(EMState::make({0, 0, 0}, {1, 0, 0}, {1, 0, 0}, {0, 0, 1}));
  CHECK_THROWS(EMState::make({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 1, 0}));
  CHECK_THROWS(em_lorentz_step(EMState{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
}
