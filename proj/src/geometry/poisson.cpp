#include "docalc/geometry/poisson.hpp"

#include <stdexcept>

namespace docalc::geometry {
namespace {

void check_flow(const PhaseSpace& s, const PhaseFlow& flow) {
  if (flow.qdot.size() != s.dof() || flow.pdot.size() != s.dof()) {
    throw std::invalid_argument("flow must have one q̇ and one ṗ per degree of freedom");
  }
}

}  // namespace

PhaseSpace::PhaseSpace(unsigned dof) : dof_(dof) {
  if (dof == 0) throw std::invalid_argument("phase space needs at least one degree of freedom");
  if (dof == 1) {
    names_ = {"q", "p"};
    return;
  }
  for (unsigned i = 1; i <= dof; ++i) names_.push_back("q" + std::to_string(i));
  for (unsigned i = 1; i <= dof; ++i) names_.push_back("p" + std::to_string(i));
}

Poly PhaseSpace::q(unsigned i) const {
  if (i < 1 || i > dof_) throw std::out_of_range("q index");
  return Poly::variable(nvars(), i - 1);
}

Poly PhaseSpace::p(unsigned i) const {
  if (i < 1 || i > dof_) throw std::out_of_range("p index");
  return Poly::variable(nvars(), dof_ + i - 1);
}

Poly PhaseSpace::parse(std::string_view text) const { return parse_poly(text, names_); }

Poly poisson_bracket(const PhaseSpace& s, const Poly& a, const Poly& b) {
  Poly out(s.nvars());
  for (unsigned i = 0; i < s.dof(); ++i) {
    const std::size_t q = i;
    const std::size_t p = s.dof() + i;
    out += a.derivative(q) * b.derivative(p) - a.derivative(p) * b.derivative(q);
  }
  return out;
}

Poly time_derivative(const PhaseSpace& s, const Poly& f, const PhaseFlow& flow) {
  check_flow(s, flow);
  Poly out(s.nvars());
  for (unsigned i = 0; i < s.dof(); ++i) {
    out += f.derivative(i) * flow.qdot[i] + f.derivative(s.dof() + i) * flow.pdot[i];
  }
  return out;
}

Poly flow_divergence(const PhaseSpace& s, const PhaseFlow& flow) {
  check_flow(s, flow);
  Poly out(s.nvars());
  for (unsigned i = 0; i < s.dof(); ++i) out += flow.qdot[i].derivative(i) + flow.pdot[i].derivative(s.dof() + i);
  return out;
}

PhaseFlow hamiltonian_flow(const PhaseSpace& s, const Poly& h) {
  PhaseFlow f;
  for (unsigned i = 0; i < s.dof(); ++i) {
    f.qdot.push_back(h.derivative(s.dof() + i));
    f.pdot.push_back(-h.derivative(i));
  }
  return f;
}

Poly poisson_leibniz_defect(const PhaseSpace& s, const Poly& a, const Poly& b, const PhaseFlow& flow) {
  Poly ab = poisson_bracket(s, a, b);
  return time_derivative(s, ab, flow) - poisson_bracket(s, time_derivative(s, a, flow), b) -
         poisson_bracket(s, a, time_derivative(s, b, flow));
}

Poly poisson_defect_formula(const PhaseSpace& s, const Poly& a, const Poly& b, const PhaseFlow& flow) {
  return -(poisson_bracket(s, a, b) * flow_divergence(s, flow));
}

}  // namespace docalc::geometry
