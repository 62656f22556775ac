#include "docalc/geometry/background.hpp"

#include <algorithm>
#include <stdexcept>

namespace docalc::geometry {
namespace {

void check_dimension(unsigned n) {
  if (n < 1 || n > 9) throw std::invalid_argument("background dimension must be in 1..9");
}

std::pair<int, int> sorted(int a, int b, bool symmetric) {
  if (symmetric && a > b) std::swap(a, b);
  return {a, b};
}

// Every g_ab atom of the background.
std::vector<Atom> metric_atoms(unsigned n, bool symmetric) {
  std::vector<Atom> out;
  for (int a = 1; a <= static_cast<int>(n); ++a) {
    for (int b = symmetric ? a : 1; b <= static_cast<int>(n); ++b) out.push_back(metric(a, b, symmetric));
  }
  return out;
}

void add_flat_core(CommutationTable& t, unsigned n) {
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    for (int j = 1; j <= static_cast<int>(n); ++j) {
      if (i < j) {
        t.set_zero(coord(i), coord(j));
        t.set_zero(momentum(i), momentum(j));
      }
      t.set(coord(i), momentum(j), ncalg::RuleKind::KroneckerDelta, Expression(i == j ? 1 : 0));
    }
  }
}

}  // namespace

Atom coord(int i) { return Atom(Family::X, {i}); }
Atom momentum(int i) { return Atom(Family::P, {i}); }
Atom potential(int i) { return Atom(Family::A, {i}); }
Atom dpotential(int i, int j) { return Atom(Family::DA, {i, j}); }
Atom velocity(int i) { return Atom(Family::V, {i}); }
Atom accel(int i) { return Atom(Family::W, {i}); }
Atom efield(int i) { return Atom(Family::E, {i}); }
Atom field(int i, int j) { return Atom(Family::F, {i, j}); }

Atom metric(int i, int j, bool symmetric) {
  auto [a, b] = sorted(i, j, symmetric);
  return Atom(Family::G, {a, b});
}

Atom nabla_metric(int i, int j, int k, bool symmetric) {
  auto [a, b] = sorted(j, k, symmetric);
  return Atom(Family::NablaG, {i, a, b});
}

Atom dot_metric(int i, int j, bool symmetric) {
  auto [a, b] = sorted(i, j, symmetric);
  return Atom(Family::DotG, {a, b});
}

BackgroundSpec flat_background(unsigned n) {
  check_dimension(n);
  BackgroundSpec bg{n, BackgroundKind::Flat, CommutationTable("flat"), {}};
  add_flat_core(bg.table, n);
  bg.table.validate();
  return bg;
}

BackgroundSpec gauge_background(unsigned n, GaugeOptions opts) {
  check_dimension(n);
  BackgroundSpec bg{n, BackgroundKind::Gauge, CommutationTable(opts.abelian ? "gauge-abelian" : "gauge"), {}};
  auto& t = bg.table;
  add_flat_core(t, n);
  const int dim = static_cast<int>(n);
  for (int i = 1; i <= dim; ++i) {
    for (int j = 1; j <= dim; ++j) {
      t.set_zero(coord(i), potential(j));
      t.set_named(potential(i), momentum(j), Expression(dpotential(j, i)));
      if (opts.abelian && i < j) t.set_zero(potential(i), potential(j));
      for (int k = 1; k <= dim; ++k) t.set_zero(coord(k), dpotential(i, j));
    }
  }
  t.validate();
  return bg;
}

BackgroundSpec metric_background(unsigned n, MetricOptions opts) {
  check_dimension(n);
  const bool sym = opts.symmetric;
  const int dim = static_cast<int>(n);
  CommutationTable t(opts.constant_metric ? "metric-constant" : "metric");
  t.set_weight(Family::X, 1);
  t.set_weight(Family::G, 1);
  t.set_weight(Family::NablaG, 1);
  t.set_weight(Family::DotG, 1);
  t.set_weight(Family::F, 2);
  t.set_weight(Family::V, 2);
  t.set_weight(Family::W, 3);

  auto nabla = [&](int i, int a, int b) -> Expression {
    if (opts.constant_metric) return {};
    return Expression(nabla_metric(i, a, b, sym));
  };

  const auto gs = metric_atoms(n, sym);
  std::vector<Atom> ngs;
  for (int i = 1; i <= dim; ++i) {
    for (const auto& g : gs) ngs.push_back(nabla_metric(i, g.indices[0], g.indices[1], sym));
  }

  for (int i = 1; i <= dim; ++i) {
    for (int j = 1; j <= dim; ++j) {
      if (opts.commuting_coordinates && i < j) t.set_zero(coord(i), coord(j));
      t.set_named(coord(i), velocity(j), Expression(metric(i, j, sym)));
    }
    for (const auto& g : gs) {
      int a = g.indices[0];
      int b = g.indices[1];
      t.set_zero(coord(i), g);
      t.set_named(g, velocity(i), nabla(i, a, b));
      t.set_named(coord(i), dot_metric(a, b, sym), nabla(i, a, b));
    }
    for (const auto& ng : ngs) t.set_zero(coord(i), ng);
  }
  for (std::size_t u = 0; u < gs.size(); ++u) {
    for (std::size_t v = u + 1; v < gs.size(); ++v) t.set_zero(gs[u], gs[v]);
    for (const auto& ng : ngs) t.set_zero(gs[u], ng);
  }
  for (std::size_t u = 0; u < ngs.size(); ++u) {
    for (std::size_t v = u + 1; v < ngs.size(); ++v) t.set_zero(ngs[u], ngs[v]);
  }

  // [X_i, F_jk] follows from the rules above by Jacobi; derive it by
  // normal-ordering [X_i, Ẋ_j Ẋ_k - Ẋ_k Ẋ_j] before F is introduced.
  const CommutationTable aux = t;
  for (int i = 1; i <= dim; ++i) {
    for (int j = 1; j <= dim; ++j) {
      for (int k = 1; k <= dim; ++k) {
        if (j == k) continue;
        Expression vjk = ncalg::free_commutator(Expression(velocity(j)), Expression(velocity(k)));
        Expression rule = ncalg::commutator(Expression(coord(i)), vjk, aux);
        for (const auto& term : rule.terms()) {
          for (const auto& a : term.word.atoms) {
            if (a.family == Family::V) throw std::logic_error("metric background: [X, F] did not close");
          }
        }
        t.set_named(coord(i), field(j, k), rule);
      }
    }
  }
  for (int j = 1; j <= dim; ++j) {
    for (int k = 1; k <= dim; ++k) {
      Expression rhs(dot_metric(j, k, sym));
      if (j != k) rhs -= Expression(field(j, k));
      t.set_named(coord(j), accel(k), rhs);
    }
  }
  t.validate();
  return BackgroundSpec{n, BackgroundKind::Metric, std::move(t), opts};
}

BackgroundSpec lorentz_background(unsigned n) {
  check_dimension(n);
  const int dim = static_cast<int>(n);
  CommutationTable t("lorentz");
  for (int i = 1; i <= dim; ++i) {
    for (int j = 1; j <= dim; ++j) {
      if (i < j) t.set_zero(coord(i), coord(j));
      t.set(coord(i), velocity(j), ncalg::RuleKind::KroneckerDelta, Expression(i == j ? 1 : 0));
      t.set_zero(coord(i), efield(j));
      for (int k = 1; k <= dim; ++k) t.set_zero(coord(k), field(i, j));
    }
  }
  t.validate();
  return BackgroundSpec{n, BackgroundKind::Lorentz, std::move(t), {}};
}

Expression metric_dot(const Expression& e, bool symmetric) {
  auto dot_atom = [symmetric](const Atom& a) -> Expression {
    switch (a.family) {
      case Family::Const:
      case Family::K:
        return {};
      case Family::X:
        return Expression(velocity(a.indices[0]).primed(a.primes));
      case Family::V:
        return Expression(accel(a.indices[0]).primed(a.primes));
      case Family::G:
        return Expression(dot_metric(a.indices[0], a.indices[1], symmetric).primed(a.primes));
      default:
        throw std::invalid_argument("metric_dot: no derivative rule for atom " + a.str());
    }
  };
  std::vector<ncalg::Term> out;
  for (const auto& t : e.terms()) {
    if (t.word.jpower != 0) throw std::invalid_argument("metric_dot: J is not part of the metric background");
    const auto& atoms = t.word.atoms;
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      Expression d = dot_atom(atoms[k]);
      for (const auto& dt : d.terms()) {
        ncalg::Word w;
        w.atoms.assign(atoms.begin(), atoms.begin() + static_cast<std::ptrdiff_t>(k));
        w.atoms.insert(w.atoms.end(), dt.word.atoms.begin(), dt.word.atoms.end());
        w.atoms.insert(w.atoms.end(), atoms.begin() + static_cast<std::ptrdiff_t>(k) + 1, atoms.end());
        out.push_back({t.coeff * dt.coeff, std::move(w)});
      }
    }
  }
  return Expression::from_terms(std::move(out));
}

namespace {

template <class F>
Expression map_atoms(const Expression& e, F&& fn) {
  std::vector<ncalg::Term> out;
  for (const auto& t : e.terms()) {
    ncalg::Term nt{t.coeff, {t.word.jpower, {}}};
    bool zero = false;
    for (const auto& a : t.word.atoms) {
      auto [mapped, sign] = fn(a);
      if (sign == 0) {
        zero = true;
        break;
      }
      if (sign < 0) nt.coeff = -nt.coeff;
      nt.word.atoms.push_back(mapped);
    }
    if (!zero) out.push_back(std::move(nt));
  }
  return Expression::from_terms(std::move(out));
}

}  // namespace

Expression impose_metric_symmetry(const Expression& e) {
  return map_atoms(e, [](const Atom& a) -> std::pair<Atom, int> {
    Atom b = a;
    if (a.family == Family::G || a.family == Family::DotG) {
      if (b.indices[0] > b.indices[1]) std::swap(b.indices[0], b.indices[1]);
    } else if (a.family == Family::NablaG) {
      if (b.indices[1] > b.indices[2]) std::swap(b.indices[1], b.indices[2]);
    }
    return {b, 1};
  });
}

Expression impose_field_antisymmetry(const Expression& e) {
  return map_atoms(e, [](const Atom& a) -> std::pair<Atom, int> {
    if (a.family != Family::F || a.index_count != 2) return {a, 1};
    if (a.indices[0] == a.indices[1]) return {a, 0};
    if (a.indices[0] < a.indices[1]) return {a, 1};
    Atom b = a;
    std::swap(b.indices[0], b.indices[1]);
    return {b, -1};
  });
}

}  // namespace docalc::geometry
