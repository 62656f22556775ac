#include "docalc/walks/physics.hpp"

#include <algorithm>
#include <cmath>

namespace docalc::walks {

PlanckNumbers planck_numbers(double hbar, double c, double G) {
  if (!(hbar > 0) || !(c > 0) || !(G > 0)) throw std::invalid_argument("planck constants must be positive");
  PlanckNumbers p;
  const double root = std::sqrt(hbar * c / G);
  p.mass = root;
  p.length = hbar / (p.mass * c);
  p.time = hbar / (p.mass * c * c);
  const double target = hbar / p.mass;
  p.residual = std::abs(p.length * p.length / p.time - target) / target;
  p.jones_mass = 0.5 * root;
  return p;
}

double compton_residual(double hbar, double c, double m) {
  if (!(hbar > 0) || !(c > 0) || !(m > 0)) throw std::invalid_argument("compton inputs must be positive");
  const double l = hbar / (m * c);
  const double t = hbar / (m * c * c);
  const double target = hbar / m;
  return std::abs(target - l * l / t) / target;
}

std::string orbit_kind_name(OrbitKind k) {
  switch (k) {
    case OrbitKind::Periodic:
      return "periodic";
    case OrbitKind::Bounded:
      return "bounded";
    case OrbitKind::Unbounded:
      return "unbounded";
    case OrbitKind::Singular:
      return "singular";
  }
  return "unknown";
}

ChaosOrbit chaos_orbit(const ChaosConfig& c) {
  if (c.n == 0) throw std::invalid_argument("delay order must be at least 1");
  if (c.initial.size() != c.n + 1) throw std::invalid_argument("initial window must hold n + 1 values");
  if (!(c.guard > 0)) throw std::invalid_argument("denominator guard must be positive");
  ChaosOrbit o;
  o.y = c.initial;
  for (std::uint64_t s = 0; s < c.max_steps; ++s) {
    const std::size_t t = o.y.size() - c.n - 1;
    const double yt = o.y[t];
    const double yt1 = o.y[t + 1];
    const double ytn = o.y[t + c.n];
    const double den = yt1 - 2 * yt;
    if (std::abs(den) < c.guard) {
      if (s == 0) throw SingularStart("chaos orbit: first denominator y_1 - 2y_0 vanishes");
      o.kind = OrbitKind::Singular;
      return o;
    }
    const double next = (c.k - ytn * yt) / den;
    if (!std::isfinite(next) || std::abs(next) > c.overflow) {
      o.kind = OrbitKind::Unbounded;
      return o;
    }
    o.y.push_back(next);
    const double m = std::max({std::abs(yt), std::abs(yt1), std::abs(ytn), std::abs(next)});
    const double res = std::abs(next * den - (c.k - ytn * yt)) / std::max(1.0, m * m);
    o.residuals.push_back(res);
    o.max_residual = std::max(o.max_residual, res);
  }
  // Periodic when the tail repeats with some period p for at least 2p values.
  const std::size_t len = o.y.size();
  for (unsigned p = 1; p <= c.max_period && 3 * static_cast<std::size_t>(p) <= len; ++p) {
    bool repeats = true;
    for (std::size_t j = len - 2 * p; j < len && repeats; ++j) {
      const double scale = std::max(1.0, std::abs(o.y[j]));
      if (std::abs(o.y[j] - o.y[j - p]) > c.period_tol * scale) repeats = false;
    }
    if (repeats) {
      o.kind = OrbitKind::Periodic;
      o.period = p;
      return o;
    }
  }
  o.kind = OrbitKind::Bounded;
  return o;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

std::array<int, 3> sign_cross(const Sign3& a, const Sign3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

void SignSeries::validate() const {
  for (const auto& e : eps) {
    for (int v : e) {
      if (v != 1 && v != -1) throw std::invalid_argument("sign series entries must be +1 or -1");
    }
  }
  if (!(k > 0)) throw std::invalid_argument("sign series step constant must be positive");
}

SignFieldResult sign_field_series(const SignSeries& s) {
  s.validate();
  SignFieldResult r;
  const double root = std::sqrt(s.k);
  Vec3 x{0, 0, 0};
  r.position.push_back(x);
  for (const auto& e : s.eps) {
    for (int i = 0; i < 3; ++i) x[i] += e[i] * root;
    r.position.push_back(x);
  }
  r.consistent = true;
  for (std::size_t t = 0; t + 1 < s.eps.size(); ++t) {
    r.b.push_back(sign_cross(s.eps[t + 1], s.eps[t]));
    Vec3 d0, d1;
    for (int i = 0; i < 3; ++i) {
      d0[i] = r.position[t + 1][i] - r.position[t][i];
      d1[i] = r.position[t + 2][i] - r.position[t + 1][i];
    }
    Vec3 dd = cross(d1, d0);
    for (int i = 0; i < 3; ++i) {
      if (std::abs(dd[i] / s.k - r.b.back()[i]) > 1e-9 * std::max(1.0, std::abs(x[i]))) r.consistent = false;
    }
  }
  return r;
}

ScalarFeasibility commuting_scalar_feasible(double k) {
  // ab = 0 forces a = 0 or b = 0; either makes one square vanish.
  if (k == 0) return {true, "k = 0: a = b = 0 solves the system"};
  if (k < 0) return {false, "a² = k < 0 has no real solution"};
  return {false, "ab = 0 forces a = 0 or b = 0, contradicting a² = b² = k ≠ 0"};
}

EMState EMState::make(const Vec3& x, const Vec3& dx, const Vec3& e, const Vec3& b, double tol) {
  auto perp = [tol](const Vec3& u, const Vec3& v) { return std::abs(dot(u, v)) <= tol * std::max(1.0, norm(u) * norm(v)); };
  if (!perp(e, dx)) throw std::invalid_argument("E must be perpendicular to dX");
  if (!perp(b, dx)) throw std::invalid_argument("B must be perpendicular to dX");
  if (!perp(e, b)) throw std::invalid_argument("E must be perpendicular to B");
  return EMState{x, dx, e, b};
}

EMStep em_lorentz_step(const EMState& s) {
  EMStep r;
  const Vec3 dxb = cross(s.dx, s.b);
  for (int i = 0; i < 3; ++i) r.dx[i] = s.dx[i] + s.e[i] + dxb[i];
  for (int i = 0; i < 3; ++i) r.x[i] = s.x[i] + r.dx[i];
  const Vec3 exd = cross(s.e, s.dx);
  const double bb = dot(s.b, s.b);
  if (bb == 0) {
    if (norm(exd) > 1e-12 * std::max(1.0, norm(s.e) * norm(s.dx))) {
      throw std::domain_error("B = 0 with E × dX ≠ 0: lambda is undefined");
    }
    r.lambda = 0;
  } else {
    r.lambda = dot(exd, s.b) / bb;
  }
  const double denom = r.lambda + dot(s.dx, s.dx);
  const Vec3 lhs = cross(r.dx, s.dx);
  Vec3 diff;
  if (denom == 0) {
    diff = s.b;
  } else {
    for (int i = 0; i < 3; ++i) diff[i] = s.b[i] - lhs[i] / denom;
  }
  r.residual = norm(diff);
  return r;
}

}  // namespace docalc::walks
