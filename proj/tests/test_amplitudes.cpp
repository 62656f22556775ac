#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "docalc/amplitudes/checkerboard.hpp"
#include "docalc/amplitudes/network.hpp"

using namespace docalc;
using namespace docalc::amplitudes;

namespace {

const GaussRational I = GaussRational::i();

// Every one of the 3^E colorings, checking properness edge pair by edge pair.
std::uint64_t brute_force_colorings(const Network& g) {
  const std::size_t m = g.edge_count();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < m; ++k) total *= 3;
  std::uint64_t count = 0;
  std::vector<unsigned> c(m);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = code;
    for (std::size_t e = 0; e < m; ++e) {
      c[e] = static_cast<unsigned>(x % 3);
      x /= 3;
    }
    bool ok = true;
    for (std::size_t e = 0; e < m && ok; ++e) {
      for (std::size_t f = e + 1; f < m && ok; ++f) {
        bool share = false;
        for (std::size_t u : g.ends(e)) {
          for (std::size_t v : g.ends(f)) share = share || u == v;
        }
        if (share && c[e] == c[f]) ok = false;
      }
      // A loop meets itself.
      if (g.ends(e).size() == 2 && g.ends(e)[0] == g.ends(e)[1]) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

Matrix two_state() { return {{GaussRational(1), I}, {I, GaussRational(1)}}; }

Matrix matmul(const Matrix& x, const Matrix& y) {
  Matrix out(x.size(), std::vector<GaussRational>(y[0].size(), GaussRational(0)));
  for (std::size_t r = 0; r < x.size(); ++r) {
    for (std::size_t c = 0; c < y[0].size(); ++c) {
      for (std::size_t k = 0; k < y.size(); ++k) out[r][c] += x[r][k] * y[k][c];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("chain amplitude") {
  Matrix ac{{GaussRational(1), GaussRational(1)}};
  Matrix cb{{GaussRational(1)}, {GaussRational(1)}};
  CHECK(chain_amplitude({ac, cb}, 0, 0) == GaussRational(2));
  // L -> L in two links: 1·1 + i·i = 0.
  CHECK(chain_amplitude({two_state(), two_state()}, 0, 0) == GaussRational(0));
  CHECK(chain_amplitude({two_state(), two_state()}, 0, 1) == GaussRational(0, 2));
  Matrix power = two_state();
  for (int m = 2; m <= 8; ++m) {
    power = matmul(power, two_state());
    std::vector<Matrix> links(static_cast<std::size_t>(m), two_state());
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) REQUIRE(chain_amplitude(links, a, b) == power[a][b]);
    }
  }
  CHECK_THROWS(chain_amplitude({ac, ac}, 0, 0));
  CHECK_THROWS(chain_amplitude({}, 0, 0));
}

TEST_CASE("chain amplitude splits associatively") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  auto random = [&](std::size_t r, std::size_t c) {
    Matrix m(r, std::vector<GaussRational>(c));
    for (auto& row : m) {
      for (auto& v : row) v = GaussRational(Rational(d(rng)), Rational(d(rng)));
    }
    return m;
  };
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Matrix> links{random(3, 2), random(2, 4), random(4, 3), random(3, 3)};
    for (std::size_t split = 1; split < links.size(); ++split) {
      std::vector<Matrix> head(links.begin(), links.begin() + static_cast<std::ptrdiff_t>(split));
      std::vector<Matrix> tail(links.begin() + static_cast<std::ptrdiff_t>(split), links.end());
      for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
          GaussRational composed(0);
          for (std::size_t c = 0; c < head.back()[0].size(); ++c) {
            composed += chain_amplitude(head, a, c) * chain_amplitude(tail, c, b);
          }
          REQUIRE(composed == chain_amplitude(links, a, b));
        }
      }
    }
  }
}

TEST_CASE("partition function basics") {
  Network edge(4, {{0}, {0}});
  CHECK(network_partition_function(edge) == GaussRational(4));
  auto chain = chain_network({two_state(), two_state(), two_state()}, 0, 1);
  CHECK(network_partition_function(chain) == chain_amplitude({two_state(), two_state(), two_state()}, 0, 1));
  Network dead(3, {{0, 1, 2}, {2, 1, 0}});
  dead.set_weight([](std::size_t v, std::span<const unsigned>) { return GaussRational(v == 1 ? 0 : 5); });
  CHECK(network_partition_function(dead) == GaussRational(0));
  CHECK_THROWS_AS(network_partition_function(cube_graph(), 1000), EnumerationCapExceeded);
}

TEST_CASE("penrose evaluation counts colorings") {
  struct Case {
    const char* name;
    Network g;
    std::uint64_t expected;
  };
  // Hand counts; the loop below checks every graph against brute force.
  std::vector<Case> cases{{"theta", theta_graph(), 6}, {"bridged", bridged_graph(), 0}};
  for (auto& c : cases) {
    auto r = penrose_count(c.g);
    CAPTURE(c.name);
    CHECK(r.value == GaussRational(static_cast<std::int64_t>(c.expected)));
    CHECK(r.proper_colorings == c.expected);
    CHECK(r.matches);
  }
  for (const auto& g : {theta_graph(), k4_graph(), prism_graph(), cube_graph(), bridged_graph()}) {
    auto r = penrose_count(g);
    std::uint64_t brute = brute_force_colorings(g);
    REQUIRE(r.proper_colorings == brute);
    REQUIRE(r.value == GaussRational(static_cast<std::int64_t>(brute)));
  }
  CHECK(brute_force_colorings(k4_graph()) == 6);
  CHECK(brute_force_colorings(cube_graph()) > 0);
  CHECK_THROWS_AS(penrose_count(Network(3, {{0, 1}, {0, 1}})), NotCubic);
}

TEST_CASE("test graphs are planar embeddings") {
  for (const auto& g : {theta_graph(), k4_graph(), prism_graph(), cube_graph(), bridged_graph()}) {
    auto e = euler_check(g);
    CHECK(e.planar);
    CHECK(e.components == 1);
  }
  auto b = euler_check(bridged_graph());
  CHECK(b.vertices == 6);
  CHECK(b.edges == 9);
  CHECK(b.faces == 5);
  // Reversing one vertex of K4 breaks the embedding.
  auto k4 = k4_graph();
  std::vector<std::vector<std::size_t>> rot;
  for (std::size_t v = 0; v < k4.vertex_count(); ++v) rot.push_back(k4.incident(v));
  std::swap(rot[0][0], rot[0][1]);
  CHECK(!euler_check(Network(3, rot)).planar);
}

TEST_CASE("penrose is multiplicative and relabeling invariant") {
  auto u = Network::disjoint_union(theta_graph(), k4_graph());
  CHECK(penrose_count(u).value == GaussRational(36));
  auto p = prism_graph();
  std::vector<std::size_t> vperm(p.vertex_count()), eperm(p.edge_count());
  std::iota(vperm.begin(), vperm.end(), 0);
  std::iota(eperm.begin(), eperm.end(), 0);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 5; ++k) {
    std::shuffle(vperm.begin(), vperm.end(), rng);
    std::shuffle(eperm.begin(), eperm.end(), rng);
    REQUIRE(penrose_count(p.relabeled(vperm, eperm)).value == penrose_count(p).value);
  }
  auto chain = chain_network({two_state(), two_state()}, 0, 1);
  CHECK(network_partition_function(chain.relabeled({1, 0}, {2, 1, 0})) == network_partition_function(chain));
}

TEST_CASE("network text format") {
  auto g = Network::parse("# theta\ncolors 3\n0: 0 1 2\n1: 2 1 0\n");
  CHECK(penrose_count(g).value == GaussRational(6));
  auto f = Network::parse("colors 2\n0: 0\n1: 0 1\nfix 1 = 1\n");
  CHECK(f.is_boundary(1));
  CHECK(f.free_edge_count() == 1);
  CHECK(network_partition_function(f) == GaussRational(2));
  CHECK_THROWS(Network::parse("0: 0 1\n"));
  CHECK_THROWS(Network::parse("colors 3\n1: 0 1\n"));
  CHECK_THROWS(Network::parse("colors 3\n0: 0\nfix 0 = 7\n"));
  CHECK_THROWS(Network::parse("colors 3\nbogus\n"));
}

TEST_CASE("checkerboard recursion") {
  auto l = checkerboard_evolve({GaussRational(1), GaussRational(0)}, 2);
  CHECK(l.left(0, 1) == GaussRational(1));
  auto r = checkerboard_evolve({}, 2);
  CHECK(r.left(0, 1) == I);
  CHECK(r.right(1, 0) == GaussRational(1));
  CHECK(r.left(1, 0) == GaussRational(0));
  CHECK_THROWS(checkerboard_evolve({}, kLatticeHorizonCap + 1));
  CHECK_THROWS(r.left(2, 1));
}

TEST_CASE("checkerboard path oracle") {
  Source right{};
  CHECK(checkerboard_path_oracle(right, 1, 0, Direction::Right) == GaussRational(1));
  CHECK(checkerboard_path_oracle(right, 0, 1, Direction::Left) == I);
  CHECK(checkerboard_path_oracle(right, 0, 0, Direction::Right) == GaussRational(1));
  CHECK(checkerboard_path_oracle(right, 0, 0, Direction::Left) == GaussRational(0));
  // (1,1) entering left: R then L (1 corner) or L then R... only paths ending in L:
  // RL has 1 corner, LR ends in R. Source heading R: RL -> i.
  CHECK(checkerboard_path_oracle(right, 1, 1, Direction::Left) == I);
  CHECK_THROWS(checkerboard_path_oracle(right, 20, 5, Direction::Left));
}

TEST_CASE("checkerboard recursion equals the path sum") {
  for (Source src : {Source{}, Source{GaussRational(1), GaussRational(0)}, Source{GaussRational(2, -1), I}}) {
    auto lattice = checkerboard_evolve(src, 12);
    for (unsigned a = 0; a <= 12; ++a) {
      for (unsigned b = 0; a + b <= 12; ++b) {
        REQUIRE(lattice.left(a, b) == checkerboard_path_oracle(src, a, b, Direction::Left));
        REQUIRE(lattice.right(a, b) == checkerboard_path_oracle(src, a, b, Direction::Right));
      }
    }
  }
}

TEST_CASE("checkerboard beyond 64-bit range") {
  // Rational source: values are carried over the lcm of the denominators.
  Source src{GaussRational(Rational(1, 2)), GaussRational(Rational(0), Rational(1, 3))};
  auto small = checkerboard_evolve(src, 10);
  CHECK(small.denominator() == 6);
  CHECK(small.left(3, 4) == checkerboard_path_oracle(src, 3, 4, Direction::Left));
  CHECK(small.re_str(small.left_numerator(0, 0)) == "1/2");

  // Along a = b the recursion doubles magnitudes roughly every two steps.
  auto big = checkerboard_evolve({}, 300);
  CHECK_THROWS_AS(big.left(150, 150), ArithmeticOverflow);
  // A point (x, y) feeds x + iy and y + ix to distinct slots, whose norms add to
  // 2(|x|² + |y|²); so each diagonal carries total norm 2^s for a unit source.
  for (unsigned s : {100U, 200U, 300U}) {
    BigInt total = 0;
    for (unsigned a = 0; a <= s; ++a) {
      for (const auto* z : {&big.left_numerator(a, s - a), &big.right_numerator(a, s - a)}) {
        total += z->re * z->re + z->im * z->im;
      }
    }
    CHECK(total == BigInt(1) << s);
  }
}
