#pragma once

#include <string>
#include <vector>

#include "docalc/poly.hpp"

namespace docalc::geometry {

/// Polynomials in q1..qn, p1..pn. Variable k < n is q_{k+1}; variable
/// n + k is p_{k+1}.
class PhaseSpace {
 public:
  explicit PhaseSpace(unsigned dof);

  unsigned dof() const { return dof_; }
  std::size_t nvars() const { return 2 * static_cast<std::size_t>(dof_); }
  Poly q(unsigned i = 1) const;
  Poly p(unsigned i = 1) const;
  Poly constant(const Rational& c) const { return Poly::constant(nvars(), c); }
  const std::vector<std::string>& names() const { return names_; }
  Poly parse(std::string_view text) const;

 private:
  unsigned dof_;
  std::vector<std::string> names_;
};

/// q̇ and ṗ components, each of length dof.
struct PhaseFlow {
  std::vector<Poly> qdot;
  std::vector<Poly> pdot;
};

Poly poisson_bracket(const PhaseSpace& s, const Poly& a, const Poly& b);

/// Σ (∂F/∂q) q̇ + (∂F/∂p) ṗ.
Poly time_derivative(const PhaseSpace& s, const Poly& f, const PhaseFlow& flow);

/// Σ ∂q̇_i/∂q_i + ∂ṗ_i/∂p_i.
Poly flow_divergence(const PhaseSpace& s, const PhaseFlow& flow);

/// q̇ = ∂H/∂p, ṗ = -∂H/∂q.
PhaseFlow hamiltonian_flow(const PhaseSpace& s, const Poly& h);

/// (d/dt){a, b} - {ȧ, b} - {a, ḃ}.
Poly poisson_leibniz_defect(const PhaseSpace& s, const Poly& a, const Poly& b, const PhaseFlow& flow);

/// -{a, b} (∂q̇/∂q + ∂ṗ/∂p). Equals the defect for one degree of freedom.
Poly poisson_defect_formula(const PhaseSpace& s, const Poly& a, const Poly& b, const PhaseFlow& flow);

}  // namespace docalc::geometry
