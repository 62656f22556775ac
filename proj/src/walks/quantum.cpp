#include "docalc/walks/quantum.hpp"

#include <quadmath.h>

#include <Eigen/Sparse>
#include <cmath>
#include <stdexcept>

namespace docalc::walks {
namespace {

template <class R>
R real_exp(R v) {
  if constexpr (std::is_same_v<R, __float128>) {
    return expq(v);
  } else {
    return std::exp(v);
  }
}

// exp(-x²/(2 s0)) with x = x0 + i Δ computed in the working precision.
template <class R>
BasicComplexField<R> gaussian_field(double x0, double delta, double tau, std::size_t n, double s0) {
  BasicComplexField<R> f;
  f.x0 = x0;
  f.delta = delta;
  f.tau = tau;
  f.re.resize(n);
  f.im.assign(n, R(0));
  for (std::size_t i = 0; i < n; ++i) {
    R x = R(x0) + R(static_cast<double>(i)) * R(delta);
    f.re[i] = real_exp(-x * x / (R(2) * R(s0)));
  }
  return f;
}

template <class R>
double l2_error(const BasicComplexField<R>& f, double s0, double beta) {
  double sum = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::complex<double> ref = free_gaussian(f.x(i), f.t, s0, beta);
    sum += std::norm(f.at(i) - ref);
  }
  return std::sqrt(sum * f.delta);
}

template <class R>
QuantumLevel run_level(const QuantumStudyConfig& c, double delta) {
  QuantumLevel lv;
  lv.delta = delta;
  lv.tau = delta * delta / c.k;
  const double exact_steps = c.t_end / lv.tau;
  lv.steps = static_cast<std::uint64_t>(std::llround(exact_steps));
  if (lv.steps == 0 || std::abs(exact_steps - static_cast<double>(lv.steps)) > 1e-9 * exact_steps) {
    throw std::invalid_argument("t_end must be a whole number of steps at every level");
  }
  lv.points = static_cast<std::size_t>(std::llround(2 * c.half_width / delta));
  auto f = gaussian_field<R>(-c.half_width, delta, lv.tau, lv.points, c.s0);
  const double n0 = field_norm(f);
  f = quantum_walk_evolve(std::move(f), lv.steps);
  lv.l2_error = l2_error(f, c.s0, c.k / 2);
  lv.norm_drift = field_norm(f) / n0 - 1;
  return lv;
}

}  // namespace

ComplexField1D make_field(const std::vector<std::complex<double>>& psi, double delta, double tau) {
  if (!(delta > 0) || !(tau > 0)) throw std::invalid_argument("grid spacing and time step must be positive");
  ComplexField1D f;
  f.delta = delta;
  f.tau = tau;
  for (auto v : psi) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw std::invalid_argument("field values must be finite");
    f.re.push_back(v.real());
    f.im.push_back(v.imag());
  }
  return f;
}

template <class R>
BasicComplexField<R> quantum_walk_evolve(BasicComplexField<R> f, std::uint64_t steps) {
  const std::size_t n = f.size();
  if (n == 0) return f;
  std::vector<R> nre(n), nim(n);
  const R half = R(1) / R(2);
  const bool periodic = f.boundary == Boundary::Periodic;
  for (std::uint64_t s = 0; s < steps; ++s) {
    for (std::size_t x = 0; x < n; ++x) {
      R lre = 0, lim = 0, rre = 0, rim = 0;
      if (x > 0) {
        lre = f.re[x - 1];
        lim = f.im[x - 1];
      } else if (periodic) {
        lre = f.re[n - 1];
        lim = f.im[n - 1];
      }
      if (x + 1 < n) {
        rre = f.re[x + 1];
        rim = f.im[x + 1];
      } else if (periodic) {
        rre = f.re[0];
        rim = f.im[0];
      }
      // (i/2)(l + r) + (1 - i)c
      nre[x] = -half * (lim + rim) + f.re[x] + f.im[x];
      nim[x] = half * (lre + rre) + f.im[x] - f.re[x];
    }
    std::swap(f.re, nre);
    std::swap(f.im, nim);
  }
  f.t += static_cast<double>(steps) * f.tau;
  return f;
}

template ComplexField1D quantum_walk_evolve(ComplexField1D, std::uint64_t);
template QuadField1D quantum_walk_evolve(QuadField1D, std::uint64_t);

template <class R>
double field_norm(const BasicComplexField<R>& f) {
  R sum = 0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += f.re[i] * f.re[i] + f.im[i] * f.im[i];
  return std::sqrt(static_cast<double>(sum) * f.delta);
}

template double field_norm(const ComplexField1D&);
template double field_norm(const QuadField1D&);

std::complex<double> free_gaussian(double x, double t, double s0, double beta) {
  const std::complex<double> s(s0, 2 * beta * t);
  return std::sqrt(s0 / s) * std::exp(-x * x / (2.0 * s));
}

std::vector<std::complex<double>> crank_nicolson_reference(const std::vector<std::complex<double>>& psi0,
                                                           double delta, double beta, double t_end,
                                                           std::uint64_t steps) {
  using C = std::complex<double>;
  const auto n = static_cast<Eigen::Index>(psi0.size());
  if (n < 3) throw std::invalid_argument("reference grid needs at least 3 points");
  if (steps == 0) return psi0;
  const double dt = t_end / static_cast<double>(steps);
  const C r = C(0, beta * dt / (2 * delta * delta));
  std::vector<Eigen::Triplet<C>> lhs, rhs;
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index l = (i + n - 1) % n;
    Eigen::Index u = (i + 1) % n;
    lhs.emplace_back(i, i, 1.0 + 2.0 * r);
    lhs.emplace_back(i, l, -r);
    lhs.emplace_back(i, u, -r);
    rhs.emplace_back(i, i, 1.0 - 2.0 * r);
    rhs.emplace_back(i, l, r);
    rhs.emplace_back(i, u, r);
  }
  Eigen::SparseMatrix<C> A(n, n), B(n, n);
  A.setFromTriplets(lhs.begin(), lhs.end());
  B.setFromTriplets(rhs.begin(), rhs.end());
  Eigen::SparseLU<Eigen::SparseMatrix<C>> lu;
  lu.compute(A);
  if (lu.info() != Eigen::Success) throw std::runtime_error("Crank-Nicolson factorization failed");
  Eigen::VectorXcd psi = Eigen::Map<const Eigen::VectorXcd>(psi0.data(), n);
  for (std::uint64_t s = 0; s < steps; ++s) psi = lu.solve(B * psi);
  return {psi.data(), psi.data() + n};
}

QuantumStudy quantum_refinement_study(const QuantumStudyConfig& c) {
  if (!(c.k > 0) || !(c.s0 > 0) || !(c.t_end > 0) || !(c.base_delta > 0) || c.levels == 0) {
    throw std::invalid_argument("quantum study parameters must be positive");
  }
  QuantumStudy out;
  double delta = c.base_delta;
  for (unsigned l = 0; l < c.levels; ++l, delta /= 2) {
    out.levels.push_back(c.precision == Precision::Quad ? run_level<__float128>(c, delta)
                                                        : run_level<double>(c, delta));
  }
  out.monotone = true;
  for (std::size_t l = 1; l < out.levels.size(); ++l) {
    if (!(out.levels[l].l2_error < out.levels[l - 1].l2_error)) out.monotone = false;
  }
  return out;
}

}  // namespace docalc::walks
