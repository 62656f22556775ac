#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "docalc/rational.hpp"

namespace docalc::iterants {

/// Ordered pair [left, right] with componentwise arithmetic.
struct Iterant {
  GaussRational left{0};
  GaussRational right{0};

  static Iterant one() { return {GaussRational(1), GaussRational(1)}; }
  static Iterant zero() { return {}; }
  /// σ = ε = [-1, 1].
  static Iterant sigma() { return {GaussRational(-1), GaussRational(1)}; }

  /// Delay shift D[a, b] = [b, a], written as an overbar.
  Iterant bar() const { return {right, left}; }

  Iterant operator-() const { return {-left, -right}; }
  friend Iterant operator+(const Iterant& x, const Iterant& y) { return {x.left + y.left, x.right + y.right}; }
  friend Iterant operator-(const Iterant& x, const Iterant& y) { return {x.left - y.left, x.right - y.right}; }
  friend Iterant operator*(const Iterant& x, const Iterant& y) { return {x.left * y.left, x.right * y.right}; }
  friend Iterant operator*(const GaussRational& s, const Iterant& x) { return {s * x.left, s * x.right}; }
  friend bool operator==(const Iterant&, const Iterant&) = default;

  std::string str() const;
};

/// A + Bη with η² = 1 and ηQ = Q̄η.
struct EtaElement {
  Iterant a;
  Iterant b;

  static EtaElement unit() { return {Iterant::one(), Iterant::zero()}; }
  static EtaElement scalar(const GaussRational& s) { return {s * Iterant::one(), Iterant::zero()}; }
  static EtaElement epsilon() { return {Iterant::sigma(), Iterant::zero()}; }
  static EtaElement eta() { return {Iterant::zero(), Iterant::one()}; }
  /// i = εη.
  static EtaElement i_unit() { return {Iterant::zero(), Iterant::sigma()}; }

  /// conj(A + Bη) = Ā − Bη.
  EtaElement conj() const { return {a.bar(), -b}; }
  /// (A + Bη) conj(A + Bη) = AĀ − BB̄.
  Iterant det() const { return a * a.bar() - b * b.bar(); }

  EtaElement operator-() const { return {-a, -b}; }
  friend EtaElement operator+(const EtaElement& p, const EtaElement& q) { return {p.a + q.a, p.b + q.b}; }
  friend EtaElement operator-(const EtaElement& p, const EtaElement& q) { return {p.a - q.a, p.b - q.b}; }
  friend EtaElement operator*(const GaussRational& s, const EtaElement& p) { return {s * p.a, s * p.b}; }
  friend bool operator==(const EtaElement&, const EtaElement&) = default;

  std::string str() const;
};

/// (A + Bη)(C + Dη) = (AC + BD̄) + (AD + BC̄)η.
EtaElement eta_multiply(const EtaElement& p, const EtaElement& q);
inline EtaElement operator*(const EtaElement& p, const EtaElement& q) { return eta_multiply(p, q); }

using Mat2 = std::array<std::array<GaussRational, 2>, 2>;

/// [a, d] + [b, c]η ↦ [[a, b], [c, d]].
Mat2 to_matrix(const EtaElement& p);
EtaElement from_matrix(const Mat2& m);

// Lorentz boosts T(v) = [k, 1/k] with k = sqrt((1 + v) / (1 − v)).

struct InvalidVelocity : std::domain_error {
  using std::domain_error::domain_error;
};

struct Event {
  Rational t;
  Rational x;
  friend bool operator==(const Event&, const Event&) = default;
};

/// Exact mode: k is rational (e.g. v = 3/5 gives k = 2).
class RationalBoost {
 public:
  explicit RationalBoost(Rational k);
  /// Throws InvalidVelocity for |v| >= 1 or when k is irrational.
  static RationalBoost from_velocity(Rational v);

  Rational k() const { return k_; }
  Rational velocity() const;
  Iterant iterant() const { return {GaussRational(k_), GaussRational(Rational(1) / k_)}; }
  /// t + xσ = [t − x, t + x] multiplied componentwise by [k, 1/k].
  Event apply(const Event& e) const;

  friend RationalBoost operator*(const RationalBoost& p, const RationalBoost& q) { return RationalBoost(p.k_ * q.k_); }
  friend bool operator==(const RationalBoost&, const RationalBoost&) = default;

 private:
  Rational k_;
};

/// Squared mode: keeps k² rational, so every rational |v| < 1 works.
/// Composition multiplies k²; events are not transformed here.
class SquaredBoost {
 public:
  explicit SquaredBoost(Rational k2);
  static SquaredBoost from_velocity(Rational v);

  Rational k_squared() const { return k2_; }
  Rational velocity() const { return (k2_ - Rational(1)) / (k2_ + Rational(1)); }
  /// Exact rational k when k² is a perfect square.
  bool exact(RationalBoost& out) const;

  friend SquaredBoost operator*(const SquaredBoost& p, const SquaredBoost& q) { return SquaredBoost(p.k2_ * q.k2_); }
  friend bool operator==(const SquaredBoost&, const SquaredBoost&) = default;

 private:
  Rational k2_;
};

/// Floating mode for general v.
struct FloatBoost {
  double k;
  static FloatBoost from_velocity(double v);
  double velocity() const { return (k * k - 1) / (k * k + 1); }
  std::array<double, 2> apply(double t, double x) const;
};

/// Relativistic velocity addition (v1 + v2) / (1 + v1 v2).
Rational add_velocities(Rational v1, Rational v2);

// Quaternions from i = εη, j = √−1·ε̄, k = √−1·η where √−1 is the scalar unit.

enum class JSign {
  Literal,  // j = √−1·ε̄
  Flipped,  // j = √−1·ε, with k negated to match
};

struct Relation {
  std::string name;
  EtaElement lhs;
  EtaElement rhs;
  bool holds = false;
};

struct QuaternionReport {
  EtaElement i, j, k;
  std::vector<Relation> relations;
  bool all_hold = false;
};

QuaternionReport quaternion_check(JSign sign = JSign::Literal);

}  // namespace docalc::iterants
