#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "docalc/iterants/iterant.hpp"
#include "docalc/iterants/permutation.hpp"

using namespace docalc;
using namespace docalc::iterants;

namespace {

const GaussRational I = GaussRational::i();

GaussRational g(std::int64_t re, std::int64_t im = 0) { return {Rational(re), Rational(im)}; }

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  Mat2 out{};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) out[r][c] = x[r][0] * y[0][c] + x[r][1] * y[1][c];
  }
  return out;
}

struct Rng {
  std::mt19937_64 engine;
  std::uniform_int_distribution<int> d{-6, 6};
  GaussRational scalar() { return GaussRational(Rational(d(engine), 1 + std::abs(d(engine))), Rational(d(engine))); }
  Iterant iterant() { return {scalar(), scalar()}; }
  EtaElement element() { return {iterant(), iterant()}; }
};

}  // namespace

TEST_CASE("iterant arithmetic") {
  Iterant a{g(1), g(2)}, b{g(3), g(4)};
  CHECK(a * b == Iterant{g(3), g(8)});
  CHECK(a + b == Iterant{g(4), g(6)});
  CHECK(Iterant::sigma() * Iterant::sigma() == Iterant::one());
  // [t − x, t + x] = t·1 + x·σ at t = 3, x = 2.
  CHECK(g(3) * Iterant::one() + g(2) * Iterant::sigma() == Iterant{g(1), g(5)});
  CHECK(Iterant::sigma().bar() == -Iterant::sigma());
  Rng rng{std::mt19937_64(5)};
  for (int k = 0; k < 100; ++k) {
    auto x = rng.iterant();
    REQUIRE(x.bar().bar() == x);
  }
}

TEST_CASE("eta algebra") {
  const auto i = EtaElement::i_unit();
  CHECK(i * i == EtaElement::scalar(g(-1)));
  CHECK(EtaElement::eta() * EtaElement::eta() == EtaElement::unit());
  CHECK(to_matrix(i) == Mat2{{{g(0), g(-1)}, {g(1), g(0)}}});
  CHECK(to_matrix(EtaElement::unit()) == Mat2{{{g(1), g(0)}, {g(0), g(1)}}});
  Rng rng{std::mt19937_64(7)};
  for (int k = 0; k < 200; ++k) {
    auto p = rng.element();
    auto q = rng.element();
    auto qi = rng.iterant();
    REQUIRE(EtaElement::unit() * p == p);
    // ηQ = Q̄η.
    REQUIRE(EtaElement::eta() * EtaElement{qi, {}} == EtaElement{qi.bar(), {}} * EtaElement::eta());
    // (A + Bη)(Ā − Bη) = AĀ − BB̄, and that is the determinant on both sides.
    auto d = p * p.conj();
    REQUIRE(d == EtaElement{p.det(), {}});
    auto m = to_matrix(p);
    GaussRational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    REQUIRE(p.det() == Iterant{det, det});
    REQUIRE((p * q).conj() == q.conj() * p.conj());
  }
}

TEST_CASE("to_matrix is an algebra isomorphism") {
  Rng rng{std::mt19937_64(13)};
  for (int k = 0; k < 10000; ++k) {
    auto p = rng.element();
    auto q = rng.element();
    REQUIRE(from_matrix(to_matrix(p)) == p);
    REQUIRE(to_matrix(p * q) == mat_mul(to_matrix(p), to_matrix(q)));
    auto mp = to_matrix(p), mq = to_matrix(q), sum = to_matrix(p + q);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) REQUIRE(sum[r][c] == mp[r][c] + mq[r][c]);
    }
  }
}

TEST_CASE("quaternions") {
  for (JSign sign : {JSign::Literal, JSign::Flipped}) {
    auto r = quaternion_check(sign);
    CHECK(r.all_hold);
    for (const auto& rel : r.relations) {
      CAPTURE(rel.name);
      CHECK(rel.holds);
    }
    // Independent route: the same products as 2×2 matrices over Gaussian rationals.
    auto mi = to_matrix(r.i), mj = to_matrix(r.j), mk = to_matrix(r.k);
    Mat2 minus{{{g(-1), g(0)}, {g(0), g(-1)}}};
    CHECK(mat_mul(mi, mi) == minus);
    CHECK(mat_mul(mj, mj) == minus);
    CHECK(mat_mul(mk, mk) == minus);
    CHECK(mat_mul(mat_mul(mi, mj), mk) == minus);
    CHECK(mat_mul(mi, mj) == mk);
  }
  // The literal j is √−1·ε̄ = [i, −i]; the flipped one is its negative.
  CHECK(quaternion_check(JSign::Literal).j == EtaElement{{I, -I}, {}});
  CHECK(quaternion_check(JSign::Flipped).j == -quaternion_check(JSign::Literal).j);
}

TEST_CASE("exact boosts") {
  CHECK(RationalBoost::from_velocity(Rational(0)).iterant() == Iterant::one());
  auto b = RationalBoost::from_velocity(Rational(3, 5));
  CHECK(b.k() == Rational(2));
  CHECK(b.velocity() == Rational(3, 5));
  // t = 1, x = 0: t' = γ = 5/4, x' = −vγ = −3/4.
  CHECK(b.apply({Rational(1), Rational(0)}) == Event{Rational(5, 4), Rational(-3, 4)});
  CHECK_THROWS_AS(RationalBoost::from_velocity(Rational(1, 2)), InvalidVelocity);
  CHECK_THROWS_AS(SquaredBoost::from_velocity(Rational(1)), InvalidVelocity);
  CHECK_THROWS_AS(SquaredBoost::from_velocity(Rational(-3, 2)), InvalidVelocity);

  // Pythagorean velocities v = (m² − n²)/(m² + n²) give k = m/n.
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(1, 12), e(-30, 30);
  for (int trial = 0; trial < 500; ++trial) {
    std::int64_t m = d(rng), n = d(rng);
    Rational v(m * m - n * n, m * m + n * n);
    auto boost = RationalBoost::from_velocity(v);
    REQUIRE(boost.k() == Rational(m, n));
    Event ev{Rational(e(rng), d(rng)), Rational(e(rng), d(rng))};
    Event out = boost.apply(ev);
    REQUIRE(out.t * out.t - out.x * out.x == ev.t * ev.t - ev.x * ev.x);
    // γ = (m² + n²)/(2mn) and the textbook transformation.
    Rational gamma(m * m + n * n, 2 * m * n);
    REQUIRE(out.t == gamma * (ev.t - v * ev.x));
    REQUIRE(out.x == gamma * (ev.x - v * ev.t));
  }
}

TEST_CASE("boost composition") {
  auto half = SquaredBoost::from_velocity(Rational(1, 2));
  CHECK(half * half == SquaredBoost::from_velocity(Rational(4, 5)));
  RationalBoost exact(Rational(1));
  CHECK(!half.exact(exact));
  CHECK((half * half).exact(exact));
  CHECK(exact.k() == Rational(3));
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 500; ++trial) {
    Rational v1(d(rng), 10), v2(d(rng), 10);
    auto composed = SquaredBoost::from_velocity(v1) * SquaredBoost::from_velocity(v2);
    REQUIRE(composed == SquaredBoost::from_velocity(add_velocities(v1, v2)));
    REQUIRE(composed.velocity() == (v1 + v2) / (Rational(1) + v1 * v2));
  }
  auto f = FloatBoost::from_velocity(0.6);
  auto out = f.apply(1.0, 0.0);
  CHECK(out[0] == doctest::Approx(1.25));
  CHECK(out[1] == doctest::Approx(-0.75));
  CHECK(f.velocity() == doctest::Approx(0.6));
}

TEST_CASE("permutation decomposition") {
  GaussRational a = g(1, 1), b = g(2), c = g(-3), d = g(0, 4);
  auto terms = perm_decompose({{a, b}, {c, d}});
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].perm == Permutation{0, 1});
  CHECK(terms[0].diag == std::vector<GaussRational>{a, d});
  CHECK(terms[1].perm == Permutation{1, 0});
  CHECK(terms[1].diag == std::vector<GaussRational>{b, c});
  CHECK(perm_reconstruct(terms, 2) == DenseMatrix{{a, b}, {c, d}});
  CHECK(perm_reconstruct(perm_decompose({{g(7)}}), 1) == DenseMatrix{{g(7)}});

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> e(-20, 20);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      DenseMatrix m(n, std::vector<GaussRational>(n));
      for (auto& row : m) {
        for (auto& v : row) v = g(e(rng), e(rng));
      }
      auto ts = perm_decompose(m);
      std::size_t fact = 1;
      for (std::size_t k = 2; k <= n; ++k) fact *= k;
      REQUIRE(ts.size() == fact);
      // Direct summation: dense Δ times dense [π], accumulated then divided.
      DenseMatrix sum(n, std::vector<GaussRational>(n));
      for (const auto& t : ts) {
        DenseMatrix delta(n, std::vector<GaussRational>(n)), pm(n, std::vector<GaussRational>(n));
        for (std::size_t i = 0; i < n; ++i) {
          delta[i][i] = m[i][t.perm[i]];
          pm[i][t.perm[i]] = g(1);
        }
        auto prod = multiply(delta, pm);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) sum[i][j] += prod[i][j];
        }
      }
      for (auto& row : sum) {
        for (auto& v : row) v = v / g(static_cast<std::int64_t>(fact / n));
      }
      REQUIRE(sum == m);
      REQUIRE(perm_reconstruct(ts, n) == m);
    }
    auto cover = perm_coverage(n);
    std::uint64_t expected = 1;
    for (std::size_t k = 2; k < n; ++k) expected *= k;
    for (const auto& row : cover) {
      for (auto v : row) REQUIRE(v == expected);
    }
  }
  CHECK_THROWS_AS(perm_decompose(DenseMatrix(7, std::vector<GaussRational>(7))), PermutationCapExceeded);
  CHECK_THROWS(perm_decompose({{g(1), g(2)}}));
}

TEST_CASE("permutation intertwining") {
  auto id = perm_conjugation_check({g(1), g(2), g(3)}, {0, 1, 2});
  CHECK(id.holds);
  CHECK(id.lhs == diagonal({g(1), g(2), g(3)}));
  auto sw = perm_conjugation_check({g(5), g(9)}, {1, 0});
  CHECK(sw.holds);
  CHECK(sw.lhs == DenseMatrix{{g(0), g(9)}, {g(5), g(0)}});
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> e(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    Permutation p(4);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<GaussRational> v(4);
    for (auto& x : v) x = g(e(rng), e(rng));
    auto r = perm_conjugation_check(v, p);
    REQUIRE(r.holds);
    // Row i of [π]Δ holds v_{π_i} in column π_i and nothing else.
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) REQUIRE(r.lhs[i][j] == (j == p[i] ? v[p[i]] : g(0)));
    }
  }
  CHECK_THROWS(perm_conjugation_check({g(1), g(2)}, {0, 0}));
}
