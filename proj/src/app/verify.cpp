#include "docalc/app/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "docalc/doc/derivation.hpp"
#include "docalc/geometry/poisson.hpp"
#include "docalc/geometry/symbolic.hpp"
#include "docalc/iterants/iterant.hpp"
#include "docalc/iterants/permutation.hpp"
#include "docalc/ncalg/render.hpp"
#include "docalc/random.hpp"

namespace docalc::app {

using ncalg::Expression;
using ncalg::render;

bool SuiteResult::pass() const {
  return !lines.empty() && std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

std::string SuiteResult::text() const {
  std::ostringstream o;
  for (const auto& l : lines) {
    o << (l.pass ? "PASS " : "FAIL ") << l.label;
    if (!l.detail.empty()) o << ": " << l.detail;
    o << '\n';
  }
  o << (pass() ? "PASS " : "FAIL ") << suite << '\n';
  return o.str();
}

nlohmann::json SuiteResult::json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["pass"] = pass();
  j["checks"] = nlohmann::json::array();
  for (const auto& l : lines) j["checks"].push_back({{"label", l.label}, {"pass", l.pass}, {"detail", l.detail}});
  return j;
}

namespace {

struct Ctx {
  int dim;
  std::uint64_t seed;
  const RunConfig& cfg;
  std::uint64_t count(std::uint64_t fallback) const { return cfg.count("count", fallback); }
};


std::string tally(std::uint64_t good, std::uint64_t total, const std::string& what) {
  return std::to_string(good) + "/" + std::to_string(total) + " " + what;
}

void leibniz(const Ctx& c, std::vector<CheckLine>& out) {
  const auto n = c.count(500);
  const auto handle = doc::DerivationHandle::time_shift(ncalg::CommutationTable::free());
  ExprGen gen(c.seed);
  std::uint64_t good = 0;
  std::string first_bad;
  for (std::uint64_t k = 0; k < n; ++k) {
    auto a = gen.expr(3, 3), b = gen.expr(3, 3);
    auto d = doc::leibniz_defect(handle, a, b);
    if (d.is_zero()) ++good;
    else if (first_bad.empty()) first_bad = "a = " + render(a) + ", b = " + render(b) + " -> " + render(d);
  }
  out.push_back({good == n, "D(ab) - D(a)b - aD(b) = 0", tally(good, n, "random pairs") + (first_bad.empty() ? "" : "; " + first_bad)});
}

void xdx(const Ctx&, std::vector<CheckLine>& out) {
  const ncalg::Atom x(ncalg::Family::X, {1});
  auto general = doc::xdx_commutator(x, false);
  out.push_back({general.matches, "[X1, D(X1)]", render(general.value)});
  auto series = doc::xdx_commutator(x, true);
  out.push_back({series.matches, "[X1, D(X1)] with commuting series", render(series.value)});
}

void gauge(const Ctx& c, std::vector<CheckLine>& out) {
  for (bool abelian : {false, true}) {
    auto bg = geometry::gauge_background(static_cast<unsigned>(c.dim), {.abelian = abelian});
    for (int i = 1; i <= c.dim; ++i) {
      for (int j = 1; j <= c.dim; ++j) {
        auto got = geometry::gauge_curvature(bg, i, j);
        Expression want = Expression(geometry::dpotential(i, j)) - Expression(geometry::dpotential(j, i));
        if (!abelian) {
          want += ncalg::free_commutator(Expression(geometry::potential(i)), Expression(geometry::potential(j)));
        }
        want = ncalg::normalize(want, bg.table);
        out.push_back({got == want, std::string(abelian ? "abelian " : "") + "[P" + std::to_string(i) + "-A" +
                                        std::to_string(i) + ", P" + std::to_string(j) + "-A" + std::to_string(j) + "]",
                       render(got)});
      }
    }
  }
}

void levi_civita(const Ctx& c, std::vector<CheckLine>& out) {
  auto bg = geometry::metric_background(static_cast<unsigned>(c.dim));
  for (int i = 1; i <= c.dim; ++i) {
    for (int j = 1; j <= c.dim; ++j) {
      for (int k = 1; k <= c.dim; ++k) {
        auto nested = geometry::levi_civita_nested(bg, i, j, k);
        auto free_route = geometry::levi_civita_index_free(bg, geometry::coord(i), geometry::coord(j), geometry::coord(k));
        bool ok = nested == geometry::levi_civita_expected(i, j, k) && free_route == nested;
        out.push_back({ok, "[X" + std::to_string(i) + ", [X" + std::to_string(j) + ", D2X" + std::to_string(k) + "]]",
                       render(nested)});
      }
    }
  }
}

void bianchi(const Ctx& c, std::vector<CheckLine>& out) {
  auto bg = geometry::metric_background(static_cast<unsigned>(c.dim));
  const auto free = ncalg::CommutationTable::free();
  std::uint64_t good = 0, total = 0;
  for (int i = 1; i <= c.dim; ++i) {
    for (int j = 1; j <= c.dim; ++j) {
      for (int k = 1; k <= c.dim; ++k) {
        ++total;
        if (geometry::bianchi_cyclic(i, j, k, free).is_zero() && geometry::bianchi_cyclic(i, j, k, bg.table).is_zero()) {
          ++good;
        }
      }
    }
  }
  out.push_back({good == total, "cyclic sum over index triples", tally(good, total, "triples reduce to 0")});
  ExprGen gen(c.seed);
  const auto n = c.count(100);
  good = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    Expression a(gen.atom()), b(gen.atom()), d(gen.atom());
    if (geometry::bianchi_cyclic(a, b, d, free).is_zero()) ++good;
  }
  out.push_back({good == n, "cyclic sum over random atoms", tally(good, n, "substitutions reduce to 0")});
}

void metric_symmetry(const Ctx& c, std::vector<CheckLine>& out) {
  auto bg = geometry::metric_background(static_cast<unsigned>(c.dim));
  for (int i = 1; i <= c.dim; ++i) {
    for (int j = i + 1; j <= c.dim; ++j) {
      auto r = geometry::metric_symmetry(bg, i, j);
      out.push_back({r.residual.is_zero(), "[X" + std::to_string(i) + ", DX" + std::to_string(j) + "] - [X" +
                                               std::to_string(j) + ", DX" + std::to_string(i) + "] - D[X" +
                                               std::to_string(i) + ", X" + std::to_string(j) + "]",
                     render(r.residual)});
    }
  }
  auto loose = geometry::metric_background(2, {.symmetric = false, .commuting_coordinates = false});
  auto w = geometry::metric_symmetry(loose, 1, 2);
  out.push_back({!w.d_commutator.is_zero(), "noncommuting coordinates leave D[X1, X2] nonzero", render(w.d_commutator)});
}

void lorentz(const Ctx& c, std::vector<CheckLine>& out) {
  auto bg = geometry::lorentz_background(static_cast<unsigned>(c.dim));
  for (int i = 1; i <= c.dim; ++i) {
    for (int j = 1; j <= c.dim; ++j) {
      auto r = geometry::lorentz_force_consistency(bg, i, j);
      bool ok = r.field_matches && r.bracket == Expression(geometry::field(j, i));
      out.push_back({ok, "[DX" + std::to_string(i) + ", DX" + std::to_string(j) + "]",
                     render(geometry::impose_field_antisymmetry(r.velocity_commutator))});
    }
  }
}

void poisson(const Ctx& c, std::vector<CheckLine>& out) {
  ExprGen gen(c.seed);
  const geometry::PhaseSpace one(1);
  const auto n = c.count(200);
  std::uint64_t good = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    Poly a = gen.poly(2, 3), b = gen.poly(2, 3);
    geometry::PhaseFlow flow{{gen.poly(2, 3)}, {gen.poly(2, 3)}};
    if (geometry::poisson_leibniz_defect(one, a, b, flow) == geometry::poisson_defect_formula(one, a, b, flow)) ++good;
  }
  out.push_back({good == n, "defect = -{A,B} div(flow)", tally(good, n, "random one-dof triples, degree <= 3")});
  for (unsigned dof : {1U, 2U}) {
    const geometry::PhaseSpace s(dof);
    good = 0;
    for (int k = 0; k < 20; ++k) {
      Poly h = gen.poly(s.nvars(), 4, 5), a = gen.poly(s.nvars(), 3), b = gen.poly(s.nvars(), 3);
      if (geometry::poisson_leibniz_defect(s, a, b, geometry::hamiltonian_flow(s, h)).is_zero()) ++good;
    }
    out.push_back({good == 20, "Hamiltonian flow has zero defect, " + std::to_string(dof) + " dof",
                   tally(good, 20, "random H of degree <= 4")});
  }
}

GaussRational random_scalar(ExprGen& g) { return {Rational(g.uniform(-9, 9), g.uniform(1, 4)), Rational(g.uniform(-9, 9))}; }

void iterant_matrix(const Ctx& c, std::vector<CheckLine>& out) {
  using namespace iterants;
  ExprGen gen(c.seed);
  auto element = [&] {
    return EtaElement{{random_scalar(gen), random_scalar(gen)}, {random_scalar(gen), random_scalar(gen)}};
  };
  const auto n = c.count(10000);
  std::uint64_t good = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    auto p = element(), q = element();
    auto mp = to_matrix(p), mq = to_matrix(q), prod = to_matrix(p * q), sum = to_matrix(p + q);
    bool ok = from_matrix(mp) == p;
    for (int r = 0; r < 2; ++r) {
      for (int col = 0; col < 2; ++col) {
        ok = ok && prod[r][col] == mp[r][0] * mq[0][col] + mp[r][1] * mq[1][col];
        ok = ok && sum[r][col] == mp[r][col] + mq[r][col];
      }
    }
    if (ok) ++good;
  }
  out.push_back({good == n, "to_matrix preserves sums and products", tally(good, n, "random pairs")});
  auto p = element();
  auto m = to_matrix(p);
  GaussRational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  out.push_back({p * p.conj() == EtaElement{{det, det}, {}}, "(A + B eta)(conj A - B eta) = det", det.str()});
  auto i = EtaElement::i_unit();
  out.push_back({i * i == EtaElement::scalar(GaussRational(-1)), "i = eps eta squares to -1", (i * i).str()});
}

void quaternions(const Ctx&, std::vector<CheckLine>& out) {
  for (auto sign : {iterants::JSign::Literal, iterants::JSign::Flipped}) {
    auto r = iterants::quaternion_check(sign);
    const std::string tag = sign == iterants::JSign::Literal ? "j = sqrt(-1) conj(eps): " : "j = sqrt(-1) eps: ";
    for (const auto& rel : r.relations) out.push_back({rel.holds, tag + rel.name, rel.lhs.str()});
  }
}

void perm_theorem(const Ctx& c, std::vector<CheckLine>& out) {
  using namespace iterants;
  ExprGen gen(c.seed);
  for (std::size_t n = 1; n <= 5; ++n) {
    std::uint64_t good = 0;
    for (int t = 0; t < 10; ++t) {
      DenseMatrix m(n, std::vector<GaussRational>(n));
      for (auto& row : m) {
        for (auto& v : row) v = GaussRational(gen.uniform(-20, 20));
      }
      if (perm_reconstruct(perm_decompose(m), n) == m) ++good;
    }
    auto cover = perm_coverage(n);
    std::uint64_t fact = 1;
    for (std::size_t k = 2; k < n; ++k) fact *= k;
    bool covered = true;
    for (const auto& row : cover) covered = covered && std::all_of(row.begin(), row.end(), [&](auto v) { return v == fact; });
    out.push_back({good == 10 && covered, "M = (1/(n-1)!) sum Delta[M]_pi [pi], n = " + std::to_string(n),
                   tally(good, 10, "random integer matrices") + ", each entry covered " + std::to_string(fact) + " times"});
  }
  const auto n = c.count(100);
  std::uint64_t good = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    const std::size_t size = static_cast<std::size_t>(gen.uniform(1, 5));
    Permutation p(size);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), gen.engine());
    std::vector<GaussRational> v(size);
    for (auto& x : v) x = random_scalar(gen);
    if (perm_conjugation_check(v, p).holds) ++good;
  }
  out.push_back({good == n, "[pi] Delta = Delta^pi [pi]", tally(good, n, "random cases")});
}

using SuiteFn = std::function<void(const Ctx&, std::vector<CheckLine>&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r{
      {"leibniz", leibniz},
      {"xdx", xdx},
      {"gauge-curvature", gauge},
      {"levi-civita", levi_civita},
      {"bianchi", bianchi},
      {"metric-symmetry", metric_symmetry},
      {"lorentz-force", lorentz},
      {"poisson", poisson},
      {"iterant-matrix", iterant_matrix},
      {"quaternions", quaternions},
      {"perm-theorem", perm_theorem},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"leibniz",         "xdx",           "gauge-curvature", "levi-civita",
                                              "bianchi",         "metric-symmetry", "lorentz-force", "poisson",
                                              "iterant-matrix",  "quaternions",   "perm-theorem"};
  return names;
}

SuiteResult run_verify(const std::string& suite, const RunConfig& c) {
  auto it = registry().find(suite);
  if (it == registry().end()) throw UsageError("unknown verify suite: " + suite);
  const auto dim = c.integer("dim", 3);
  if (dim < 1 || dim > 9) throw UsageError("dim must be between 1 and 9");
  SuiteResult r{suite, {}};
  it->second(Ctx{static_cast<int>(dim), c.count("seed", 1), c}, r.lines);
  return r;
}

}  // namespace docalc::app
