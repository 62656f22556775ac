#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "docalc/poly.hpp"

namespace docalc::geometry {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct SingularMetric : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonSymmetricMetric : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A classical metric g_ij(x). Polynomial entries have exact partials;
/// callable metrics either supply partials or fall back to central
/// differences with step `h`, Richardson-extrapolated with h/2.
class MetricField {
 public:
  using Function = std::function<Mat(const Vec&)>;
  /// partials(x)[k](i, j) = ∂_k g_ij.
  using Partials = std::function<std::vector<Mat>(const Vec&)>;

  static MetricField from_polynomials(std::vector<std::vector<Poly>> entries);
  static MetricField from_function(unsigned n, Function g, Partials partials = {}, double h = 1e-5);
  /// "n" followed by n² polynomial entries in x1..xn, row-major, separated
  /// by newlines or commas. Lines starting with '#' are ignored.
  static MetricField parse(std::string_view text);

  static MetricField euclidean(unsigned n);
  /// diag(1, r²) in (r, θ).
  static MetricField polar();

  unsigned dimension() const { return n_; }
  double det_margin() const { return det_margin_; }
  void set_det_margin(double m) { det_margin_ = m; }

  Mat at(const Vec& x) const;
  std::vector<Mat> partials(const Vec& x) const;
  /// g(x) after the symmetry and invertibility checks.
  Mat checked_at(const Vec& x, double sym_tol = 1e-12) const;

 private:
  MetricField() = default;

  unsigned n_ = 0;
  std::vector<std::vector<Poly>> poly_;
  Function fn_;
  Partials partials_;
  double h_ = 1e-5;
  double det_margin_ = 1e-12;
};

struct Christoffel {
  unsigned n = 0;
  std::vector<double> lowered;  // [l][a][b] = (1/2)(∂_a g_lb + ∂_b g_la - ∂_l g_ab)
  std::vector<double> raised;   // [k][i][j] = g^kl lowered[l][i][j]
  double reconstruction_residual = 0;  // max |∂_k g_ij - g_sj Γ^s_ik - g_is Γ^s_jk|

  double lower(int l, int a, int b) const { return lowered[idx(l, a, b)]; }
  double second_kind(int k, int i, int j) const { return raised[idx(k, i, j)]; }
  /// (1/2)(∂_i g_jk + ∂_j g_ik - ∂_k g_ij): the lowered index comes last.
  /// Half of [X_i, [X_j, D²X_k]] matches this form.
  double first_kind(int i, int j, int k) const { return lower(k, i, j); }
  /// (1/2)(∂_k g_ij - ∂_i g_jk + ∂_j g_ik) = g_is Γ^s_jk: lowered index first.
  double first_kind_lowered_first(int i, int j, int k) const { return lower(i, j, k); }

 private:
  std::size_t idx(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)) * n + static_cast<std::size_t>(c);
  }
};

/// Indices are 0-based here.
Christoffel christoffel_numeric(const MetricField& m, const Vec& x);

/// Transport a by δA^k = -Γ^k_ij A^i dx^j and return
/// <A + δA, A + δA>_{x+dx} - <A, A>_x.
double parallel_invariance_check(const MetricField& m, const Vec& x, const Vec& a, const Vec& dx);

struct LagrangianBracketReport {
  std::vector<Mat> brackets;  // {x_i, ẋ_j} at each point
  std::vector<Mat> expected;  // g_ij / mass
  double max_error = 0;
};

/// For L = (m/2) g^ij ẋ_i ẋ_j the momenta are p = m g^-1 ẋ; solving for ẋ
/// and differentiating numerically in p gives {x_i, ẋ_j} = ∂ẋ_j/∂p_i,
/// which should equal g_ij / m.
LagrangianBracketReport lagrangian_bracket_check(const MetricField& m, const std::vector<Vec>& points,
                                                 double mass = 1.0);

}  // namespace docalc::geometry
