#include "docalc/walks/random_walk.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace docalc::walks {
namespace {

// splitmix64 finalizer.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void least_squares(const std::vector<double>& x, const std::vector<double>& y, double& slope, double& intercept) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
  }
  slope = sxx > 0 ? sxy / sxx : 0.0;
  intercept = my - slope * mx;
}

}  // namespace

double WalkConfig::delta() const { return std::sqrt(k * tau); }

std::uint64_t walker_bits(std::uint64_t seed, std::uint64_t walker, std::uint64_t block) {
  return mix(mix(mix(seed) ^ walker) ^ block);
}

BrownianResult brownian_ensemble(const WalkConfig& c) {
  if (c.walkers == 0 || c.steps == 0) throw std::invalid_argument("brownian_ensemble needs walkers and steps");
  if (c.k < 0 || !(c.tau > 0)) throw std::invalid_argument("brownian_ensemble needs k >= 0 and tau > 0");
  const double d = c.delta();
  const std::size_t steps = c.steps;
  // Positions are integers in units of Δ, so the sums are exact.
  std::vector<std::int64_t> sum(steps + 1, 0);
  std::vector<std::uint64_t> sum_sq(steps + 1, 0);
  BrownianResult r;
  for (std::uint64_t w = 0; w < c.walkers; ++w) {
    std::int64_t pos = 0;
    const bool keep = w < c.record;
    std::vector<double> path;
    if (keep) {
      path.reserve(steps + 1);
      path.push_back(0.0);
    }
    std::uint64_t bits = 0;
    for (std::size_t t = 0; t < steps; ++t) {
      if (t % 64 == 0) bits = walker_bits(c.seed, w, t / 64);
      pos += (bits & 1U) ? 1 : -1;
      bits >>= 1;
      sum[t + 1] += pos;
      sum_sq[t + 1] += static_cast<std::uint64_t>(pos * pos);
      if (keep) path.push_back(static_cast<double>(pos) * d);
    }
    if (keep) r.paths.push_back(std::move(path));
  }
  const double W = static_cast<double>(c.walkers);
  for (std::size_t t = 0; t <= steps; ++t) {
    r.time.push_back(static_cast<double>(t) * c.tau);
    r.msd.push_back(static_cast<double>(sum_sq[t]) / W * d * d);
    r.mean.push_back(static_cast<double>(sum[t]) / W * d);
  }
  least_squares(r.time, r.msd, r.slope, r.intercept);
  return r;
}

template <class T>
std::vector<T> diffusion_fd_evolve(std::vector<T> p, std::uint64_t steps, Boundary b) {
  const std::size_t n = p.size();
  if (n == 0) return p;
  const T half = T(1) / T(2);
  std::vector<T> next(n, T(0));
  for (std::uint64_t s = 0; s < steps; ++s) {
    for (std::size_t x = 0; x < n; ++x) {
      T left = T(0), right = T(0);
      if (x > 0) {
        left = p[x - 1];
      } else if (b == Boundary::Periodic) {
        left = p[n - 1];
      }
      if (x + 1 < n) {
        right = p[x + 1];
      } else if (b == Boundary::Periodic) {
        right = p[0];
      }
      next[x] = (left + right) * half;
    }
    std::swap(p, next);
  }
  return p;
}

template std::vector<double> diffusion_fd_evolve(std::vector<double>, std::uint64_t, Boundary);
template std::vector<Rational> diffusion_fd_evolve(std::vector<Rational>, std::uint64_t, Boundary);

void check_distribution(const std::vector<double>& p, double tol) {
  double total = 0;
  for (double v : p) {
    if (v < 0) throw std::invalid_argument("probabilities must be nonnegative");
    total += v;
  }
  if (std::abs(total - 1.0) > tol) throw std::invalid_argument("probabilities must sum to 1");
}

void check_distribution(const std::vector<Rational>& p) {
  Rational total(0);
  for (const auto& v : p) {
    if (v.sign() < 0) throw std::invalid_argument("probabilities must be nonnegative");
    total += v;
  }
  if (total != Rational(1)) throw std::invalid_argument("probabilities must sum to 1");
}

std::vector<Rational> binomial_spike(std::uint64_t t) {
  if (t > 60) throw std::invalid_argument("binomial_spike supports t <= 60");
  std::vector<Rational> out(2 * t + 1, Rational(0));
  const auto denom = static_cast<std::int64_t>(std::uint64_t{1} << t);
  std::int64_t choose = 1;
  for (std::uint64_t j = 0; j <= t; ++j) {
    out[2 * j] = Rational(choose, denom);
    choose = static_cast<std::int64_t>(static_cast<__int128>(choose) * static_cast<__int128>(t - j) /
                                       static_cast<__int128>(j + 1));
  }
  return out;
}

double grid_variance(const std::vector<double>& p, double origin) {
  double m1 = 0, m2 = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    double off = static_cast<double>(x) - origin;
    m1 += off * p[x];
    m2 += off * off * p[x];
  }
  return m2 - m1 * m1;
}

}  // namespace docalc::walks
