#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace docalc::walks {

namespace si {
inline constexpr double hbar = 1.054571817e-34;
inline constexpr double c = 299792458.0;
inline constexpr double G = 6.67430e-11;
}  // namespace si

struct PlanckNumbers {
  double mass = 0;    // sqrt(ħc/G)
  double length = 0;  // ħ/(Mc)
  double time = 0;    // ħ/(Mc²)
  double residual = 0;  // |L²/T - ħ/M| / (ħ/M)
  double jones_mass = 0;  // (1/2) sqrt(ħc/G)
};

PlanckNumbers planck_numbers(double hbar, double c, double G);

/// |ħ/m - L_C²/T_C| / (ħ/m) with L_C = ħ/(mc), T_C = ħ/(mc²).
double compton_residual(double hbar, double c, double m);

struct SingularStart : std::domain_error {
  using std::domain_error::domain_error;
};

struct ChaosConfig {
  double k = 1.0;
  unsigned n = 1;              // delay order
  std::vector<double> initial;  // y_0 .. y_n
  std::uint64_t max_steps = 100;
  double guard = 1e-12;        // minimum |denominator|
  double overflow = 1e12;      // |y| above this counts as unbounded
  unsigned max_period = 64;
  double period_tol = 1e-9;
};

enum class OrbitKind { Periodic, Bounded, Unbounded, Singular };

std::string orbit_kind_name(OrbitKind k);

struct ChaosOrbit {
  std::vector<double> y;          // initial window followed by emitted values
  std::vector<double> residuals;  // one per emitted value, scaled
  OrbitKind kind = OrbitKind::Bounded;
  unsigned period = 0;
  double max_residual = 0;
};

/// y_{t+n+1} = (k - y_{t+n} y_t) / (y_{t+1} - 2 y_t). The residual of each
/// emitted value is |y_{t+n+1}(y_{t+1} - 2y_t) - (k - y_{t+n}y_t)| divided by
/// max(1, m²), m the largest magnitude among the values involved.
/// Throws SingularStart when the first denominator is below the guard.
ChaosOrbit chaos_orbit(const ChaosConfig& c);

using Vec3 = std::array<double, 3>;
using Sign3 = std::array<int, 3>;

Vec3 cross(const Vec3& a, const Vec3& b);
double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

struct SignSeries {
  std::vector<Sign3> eps;  // ε^t, entries ±1
  double k = 1.0;

  void validate() const;
};

struct SignFieldResult {
  std::vector<Sign3> b;         // B^t = ε^{t+1} × ε^t
  std::vector<Vec3> position;   // X^{t+1} = X^t + ε^t sqrt(k), X^0 = 0
  bool consistent = false;      // B^t == (ΔX^{t+1} × ΔX^t) / k for every t
};

/// Steps use ε sqrt(k) so that [X_i, DX_i] = Jk.
SignFieldResult sign_field_series(const SignSeries& s);

std::array<int, 3> sign_cross(const Sign3& a, const Sign3& b);

struct ScalarFeasibility {
  bool feasible = false;
  std::string reason;
};

/// Real scalars a = X' - X, b = Y' - Y with a² = k, b² = k, ab = 0.
ScalarFeasibility commuting_scalar_feasible(double k);

struct EMState {
  Vec3 x{};
  Vec3 dx{};
  Vec3 e{};
  Vec3 b{};

  /// Throws std::invalid_argument unless E·dX, B·dX and E·B vanish to `tol`
  /// relative to the magnitudes.
  static EMState make(const Vec3& x, const Vec3& dx, const Vec3& e, const Vec3& b, double tol = 1e-12);
};

struct EMStep {
  Vec3 x{};      // x + dX'
  Vec3 dx{};     // dX' = dX + E + dX × B
  double lambda = 0;    // E × dX = λB
  double residual = 0;  // ||B - dX' × dX / (λ + ||dX||²)||
};

EMStep em_lorentz_step(const EMState& s);

}  // namespace docalc::walks
