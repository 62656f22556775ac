#include "docalc/iterants/iterant.hpp"

#include <cmath>

namespace docalc::iterants {

std::string Iterant::str() const { return "[" + left.str() + ", " + right.str() + "]"; }

std::string EtaElement::str() const { return a.str() + " + " + b.str() + "η"; }

EtaElement eta_multiply(const EtaElement& p, const EtaElement& q) {
  return {p.a * q.a + p.b * q.b.bar(), p.a * q.b + p.b * q.a.bar()};
}

Mat2 to_matrix(const EtaElement& p) {
  return {{{p.a.left, p.b.left}, {p.b.right, p.a.right}}};
}

EtaElement from_matrix(const Mat2& m) {
  return {{m[0][0], m[1][1]}, {m[0][1], m[1][0]}};
}

namespace {

void check_speed(const Rational& v) {
  if (!(v.abs() < Rational(1))) throw InvalidVelocity("boost needs |v| < 1, got " + v.str());
}

}  // namespace

RationalBoost::RationalBoost(Rational k) : k_(k) {
  if (k.sign() <= 0) throw InvalidVelocity("boost factor k must be positive");
}

RationalBoost RationalBoost::from_velocity(Rational v) {
  RationalBoost b(Rational(1));
  if (!SquaredBoost::from_velocity(v).exact(b)) {
    throw InvalidVelocity("k = sqrt((1+v)/(1-v)) is irrational for v = " + v.str());
  }
  return b;
}

Rational RationalBoost::velocity() const {
  const Rational k2 = k_ * k_;
  return (k2 - Rational(1)) / (k2 + Rational(1));
}

Event RationalBoost::apply(const Event& e) const {
  const Rational l = k_ * (e.t - e.x);
  const Rational r = (e.t + e.x) / k_;
  return {(l + r) / Rational(2), (r - l) / Rational(2)};
}

SquaredBoost::SquaredBoost(Rational k2) : k2_(k2) {
  if (k2.sign() <= 0) throw InvalidVelocity("boost factor k^2 must be positive");
}

SquaredBoost SquaredBoost::from_velocity(Rational v) {
  check_speed(v);
  return SquaredBoost((Rational(1) + v) / (Rational(1) - v));
}

bool SquaredBoost::exact(RationalBoost& out) const {
  Rational k;
  if (!k2_.exact_sqrt(k)) return false;
  out = RationalBoost(k);
  return true;
}

FloatBoost FloatBoost::from_velocity(double v) {
  if (!(std::abs(v) < 1)) throw InvalidVelocity("boost needs |v| < 1");
  return {std::sqrt((1 + v) / (1 - v))};
}

std::array<double, 2> FloatBoost::apply(double t, double x) const {
  const double l = k * (t - x);
  const double r = (t + x) / k;
  return {(l + r) / 2, (r - l) / 2};
}

Rational add_velocities(Rational v1, Rational v2) {
  check_speed(v1);
  check_speed(v2);
  return (v1 + v2) / (Rational(1) + v1 * v2);
}

QuaternionReport quaternion_check(JSign sign) {
  const GaussRational root = GaussRational::i();
  const EtaElement eps = EtaElement::epsilon();
  const EtaElement eta = EtaElement::eta();
  QuaternionReport r;
  r.i = EtaElement::i_unit();
  if (sign == JSign::Literal) {
    r.j = root * EtaElement{eps.a.bar(), eps.b};
    r.k = root * eta;
  } else {
    r.j = root * eps;
    r.k = -(root * eta);
  }
  const EtaElement minus_one = EtaElement::scalar(GaussRational(-1));
  auto add = [&](std::string name, EtaElement lhs, EtaElement rhs) {
    const bool ok = lhs == rhs;
    r.relations.push_back({std::move(name), std::move(lhs), std::move(rhs), ok});
  };
  add("i*i = -1", r.i * r.i, minus_one);
  add("j*j = -1", r.j * r.j, minus_one);
  add("k*k = -1", r.k * r.k, minus_one);
  add("i*j*k = -1", r.i * r.j * r.k, minus_one);
  add("i*j = k", r.i * r.j, r.k);
  add("j*k = i", r.j * r.k, r.i);
  add("k*i = j", r.k * r.i, r.j);
  add("j*i = -k", r.j * r.i, -r.k);
  add("i = eps*eta", eps * eta, r.i);
  r.all_hold = true;
  for (const auto& rel : r.relations) r.all_hold = r.all_hold && rel.holds;
  return r;
}

}  // namespace docalc::iterants
