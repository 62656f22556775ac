#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "docalc/walks/random_walk.hpp"

namespace docalc::walks {

/// Complex amplitudes on an evenly spaced grid. Real and imaginary parts
/// are stored separately so the stencil can run in any real type.
template <class R>
struct BasicComplexField {
  std::vector<R> re;
  std::vector<R> im;
  double x0 = 0;     // coordinate of cell 0
  double delta = 1;  // grid spacing
  double tau = 1;    // time step
  double t = 0;
  Boundary boundary = Boundary::Periodic;

  std::size_t size() const { return re.size(); }
  std::complex<double> at(std::size_t i) const {
    return {static_cast<double>(re[i]), static_cast<double>(im[i])};
  }
  double x(std::size_t i) const { return x0 + static_cast<double>(i) * delta; }
};

using ComplexField1D = BasicComplexField<double>;
using QuadField1D = BasicComplexField<__float128>;

ComplexField1D make_field(const std::vector<std::complex<double>>& psi, double delta, double tau);

/// ψ(x, t+τ) = (i/2)ψ(x-Δ) + (1-i)ψ(x) + (i/2)ψ(x+Δ): the explicit step of
/// ∂ψ/∂t = (iΔ²/2τ)∂²ψ/∂x². Not unitary: a mode of wavenumber θ/Δ grows by
/// |1 - i(1 - cos θ)| per step.
template <class R>
BasicComplexField<R> quantum_walk_evolve(BasicComplexField<R> f, std::uint64_t steps);

extern template ComplexField1D quantum_walk_evolve(ComplexField1D, std::uint64_t);
extern template QuadField1D quantum_walk_evolve(QuadField1D, std::uint64_t);

template <class R>
double field_norm(const BasicComplexField<R>& f);  // sqrt(Σ|ψ|² Δ)

extern template double field_norm(const ComplexField1D&);
extern template double field_norm(const QuadField1D&);

/// Closed-form solution of ∂ψ/∂t = iβ ∂²ψ/∂x² from ψ(x, 0) = exp(-x²/(2 s0)):
/// ψ = sqrt(s0/s) exp(-x²/(2s)), s = s0 + 2iβt.
std::complex<double> free_gaussian(double x, double t, double s0, double beta);

/// Crank-Nicolson integration of the same equation (unitary), used as an
/// independent fine-grid reference. Periodic boundary.
std::vector<std::complex<double>> crank_nicolson_reference(const std::vector<std::complex<double>>& psi0,
                                                           double delta, double beta, double t_end,
                                                           std::uint64_t steps);

enum class Precision { Double, Quad };

struct QuantumStudyConfig {
  double k = 1.0;          // Δ²/τ, kept fixed under refinement
  double s0 = 1.0;         // initial Gaussian width²
  double t_end = 1.0 / 16;
  double base_delta = 0.25;
  double half_width = 16.0;  // domain [-half_width, half_width)
  unsigned levels = 4;       // grids Δ, Δ/2, ... ; steps grow 4x per level
  Precision precision = Precision::Quad;
};

struct QuantumLevel {
  double delta = 0;
  double tau = 0;
  std::uint64_t steps = 0;
  std::size_t points = 0;
  double l2_error = 0;    // against the closed form
  double norm_drift = 0;  // ||ψ(T)|| / ||ψ(0)|| - 1
};

struct QuantumStudy {
  std::vector<QuantumLevel> levels;
  bool monotone = false;  // errors strictly decrease level to level
};

/// Evolve the same Gaussian on successively halved grids with τ = Δ²/k
/// and compare each against the closed form at t_end.
QuantumStudy quantum_refinement_study(const QuantumStudyConfig& c);

}  // namespace docalc::walks
