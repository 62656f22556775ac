#include "docalc/geometry/symbolic.hpp"

#include <stdexcept>

namespace docalc::geometry {
namespace {

void require(const BackgroundSpec& bg, BackgroundKind kind, const char* what) {
  if (bg.kind != kind) throw std::invalid_argument(std::string(what) + ": wrong background kind");
}

void check_index(const BackgroundSpec& bg, int i) {
  if (i < 1 || i > static_cast<int>(bg.dimension)) throw std::out_of_range("index outside background dimension");
}

}  // namespace

Expression curvature_operator(const Expression& a, const Expression& b, const Expression& f,
                              const CommutationTable& t) {
  return ncalg::commutator(ncalg::commutator(a, b, t), f, t);
}

Expression covariant_commutator(const Expression& a, const Expression& b, const Expression& f,
                                const CommutationTable& t) {
  auto nabla = [&t](const Expression& k, const Expression& z) { return ncalg::commutator(z, k, t); };
  return ncalg::normalize(nabla(a, nabla(b, f)) - nabla(b, nabla(a, f)), t);
}

Expression gauge_curvature(const BackgroundSpec& bg, int i, int j) {
  require(bg, BackgroundKind::Gauge, "gauge_curvature");
  check_index(bg, i);
  check_index(bg, j);
  Expression li = Expression(momentum(i)) - Expression(potential(i));
  Expression lj = Expression(momentum(j)) - Expression(potential(j));
  return ncalg::commutator(li, lj, bg.table);
}

MetricSymmetryReport metric_symmetry(const BackgroundSpec& bg, int i, int j) {
  require(bg, BackgroundKind::Metric, "metric_symmetry");
  check_index(bg, i);
  check_index(bg, j);
  const auto& t = bg.table;
  Expression xi(coord(i));
  Expression xj(coord(j));
  MetricSymmetryReport r;
  r.antisymmetric = ncalg::commutator(xi, Expression(velocity(j)), t) - ncalg::commutator(xj, Expression(velocity(i)), t);
  r.d_commutator = ncalg::normalize(metric_dot(ncalg::commutator(xi, xj, t), bg.metric.symmetric), t);
  r.residual = ncalg::normalize(r.antisymmetric - r.d_commutator, t);
  return r;
}

Expression levi_civita_nested(const BackgroundSpec& bg, int i, int j, int k) {
  require(bg, BackgroundKind::Metric, "levi_civita_nested");
  for (int v : {i, j, k}) check_index(bg, v);
  const auto& t = bg.table;
  Expression inner = ncalg::commutator(Expression(coord(j)), Expression(accel(k)), t);
  return ncalg::commutator(Expression(coord(i)), inner, t);
}

Expression levi_civita_index_free(const BackgroundSpec& bg, const Atom& x, const Atom& y, const Atom& z) {
  require(bg, BackgroundKind::Metric, "levi_civita_index_free");
  for (const Atom* a : {&x, &y, &z}) {
    if (a->family != Family::X || a->index_count != 1 || a->primes != 0) {
      throw std::invalid_argument("levi_civita_index_free expects unprimed coordinate atoms");
    }
    check_index(bg, a->indices[0]);
  }
  const auto& t = bg.table;
  const bool sym = bg.metric.symmetric;
  Expression X(x);
  Expression dx(velocity(x.indices[0]));
  Expression dy(velocity(y.indices[0]));
  Expression dz(velocity(z.indices[0]));
  Expression g_yz(metric(y.indices[0], z.indices[0], sym));

  // [X, Dg_YZ] = [g_YZ, DX] because D[X, g_YZ] = 0.
  Expression first = ncalg::commutator(g_yz, dx, t);
  // -[X, [DY, DZ]] = [DZ, [X, DY]] + [DY, [DZ, X]].
  Expression second = ncalg::commutator(dz, ncalg::commutator(X, dy, t), t);
  Expression third = ncalg::commutator(dy, ncalg::commutator(dz, X, t), t);
  return ncalg::normalize(first + second + third, t);
}

Expression levi_civita_expected(int i, int j, int k, bool symmetric) {
  return Expression(nabla_metric(i, j, k, symmetric)) - Expression(nabla_metric(k, i, j, symmetric)) +
         Expression(nabla_metric(j, i, k, symmetric));
}

Expression bianchi_cyclic(const Expression& a, const Expression& b, const Expression& c,
                          const CommutationTable& t) {
  using ncalg::free_commutator;
  Expression sum = free_commutator(free_commutator(b, c), a) + free_commutator(free_commutator(c, a), b) +
                   free_commutator(free_commutator(a, b), c);
  return ncalg::normalize(sum, t);
}

Expression bianchi_cyclic(int i, int j, int k, const CommutationTable& t) {
  return bianchi_cyclic(Expression(velocity(i)), Expression(velocity(j)), Expression(velocity(k)), t);
}

LorentzReport lorentz_force_consistency(const BackgroundSpec& bg, int i, int j, bool with_field) {
  require(bg, BackgroundKind::Lorentz, "lorentz_force_consistency");
  check_index(bg, i);
  check_index(bg, j);
  Expression ansatz(efield(j));
  if (with_field) {
    for (int k = 1; k <= static_cast<int>(bg.dimension); ++k) {
      ansatz += Expression(field(j, k)) * Expression(velocity(k));
    }
  }
  LorentzReport r;
  r.bracket = ncalg::commutator(Expression(coord(i)), ansatz, bg.table);
  // D[X_i, Ẋ_j] = 0 gives [Ẋ_i, Ẋ_j] = -[X_i, Ẍ_j].
  r.velocity_commutator = -r.bracket;
  Expression expected = with_field ? Expression(field(i, j)) : Expression{};
  r.field_matches = impose_field_antisymmetry(r.velocity_commutator) == impose_field_antisymmetry(expected);
  return r;
}

}  // namespace docalc::geometry
