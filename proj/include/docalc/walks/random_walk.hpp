#pragma once

#include <cstdint>
#include <vector>

#include "docalc/rational.hpp"

namespace docalc::walks {

/// Δ = sqrt(k τ) so that Δ²/τ = k.
struct WalkConfig {
  double k = 1.0;
  double tau = 1.0;
  std::uint64_t steps = 1000;
  std::uint64_t walkers = 1000;
  std::uint64_t seed = 1;
  /// Keep full paths for the first `record` walkers.
  std::uint64_t record = 0;

  double delta() const;
};

struct BrownianResult {
  std::vector<double> time;  // t * tau
  std::vector<double> msd;   // mean of X(t)², X(0) = 0
  std::vector<double> mean;  // mean of X(t)
  std::vector<std::vector<double>> paths;
  double slope = 0;      // least-squares slope of msd against time
  double intercept = 0;
};

/// Each walker steps ±Δ with probability 1/2, drawing from its own
/// stream keyed by (seed, walker), so results do not depend on the order
/// in which walkers run.
BrownianResult brownian_ensemble(const WalkConfig& c);

/// Random bits of walker `w`, block `b` (64 steps per block).
std::uint64_t walker_bits(std::uint64_t seed, std::uint64_t walker, std::uint64_t block);

enum class Boundary { Periodic, Absorbing };

/// P(x, t+τ) = P(x-Δ, t)/2 + P(x+Δ, t)/2 on a grid with spacing Δ.
template <class T>
std::vector<T> diffusion_fd_evolve(std::vector<T> p, std::uint64_t steps, Boundary b = Boundary::Periodic);

extern template std::vector<double> diffusion_fd_evolve(std::vector<double>, std::uint64_t, Boundary);
extern template std::vector<Rational> diffusion_fd_evolve(std::vector<Rational>, std::uint64_t, Boundary);

/// Check nonnegativity and unit mass.
void check_distribution(const std::vector<double>& p, double tol = 1e-12);
void check_distribution(const std::vector<Rational>& p);

/// Binomial law after t steps from a spike: offset 2j - t has C(t, j)/2^t.
std::vector<Rational> binomial_spike(std::uint64_t t);

/// Σ x² P(x) - (Σ x P(x))² with x measured in units of Δ from `origin`.
double grid_variance(const std::vector<double>& p, double origin);

}  // namespace docalc::walks
