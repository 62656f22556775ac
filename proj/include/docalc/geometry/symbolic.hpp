#pragma once

#include "docalc/geometry/background.hpp"

namespace docalc::geometry {

/// normalize([[a, b], f]).
Expression curvature_operator(const Expression& a, const Expression& b, const Expression& f,
                              const CommutationTable& t);

/// [∇_a, ∇_b] f with ∇_k z = [z, k]; agrees with curvature_operator.
Expression covariant_commutator(const Expression& a, const Expression& b, const Expression& f,
                                const CommutationTable& t);

/// normalize([P_i - A_i, P_j - A_j]) on a gauge background.
Expression gauge_curvature(const BackgroundSpec& bg, int i, int j);

struct MetricSymmetryReport {
  Expression residual;       // [X_i, Ẋ_j] - [X_j, Ẋ_i] - D[X_i, X_j]
  Expression antisymmetric;  // [X_i, Ẋ_j] - [X_j, Ẋ_i] = g_ij - g_ji
  Expression d_commutator;   // normal form of D[X_i, X_j]
};

/// With [X_i, X_j] = 0 declared d_commutator vanishes, so the residual is
/// g_ij - g_ji and is zero exactly when g is symmetric.
MetricSymmetryReport metric_symmetry(const BackgroundSpec& bg, int i, int j);

/// [X_i, [X_j, D²X_k]] through the metric table.
Expression levi_civita_nested(const BackgroundSpec& bg, int i, int j, int k);

/// [X, [Y, D²Z]] for coordinate atoms, reduced without the D²X rule:
/// [Y, D²Z] = Dg_YZ - [DY, DZ], [X, Dg_YZ] = [g_YZ, DX], then Jacobi.
Expression levi_civita_index_free(const BackgroundSpec& bg, const Atom& x, const Atom& y, const Atom& z);

/// ∇_i g_jk - ∇_k g_ij + ∇_j g_ik as named atoms.
Expression levi_civita_expected(int i, int j, int k, bool symmetric = true);

/// Cyclic sum [[b, c], a] + [[c, a], b] + [[a, b], c].
Expression bianchi_cyclic(const Expression& a, const Expression& b, const Expression& c,
                          const CommutationTable& t);
Expression bianchi_cyclic(int i, int j, int k, const CommutationTable& t);

struct LorentzReport {
  Expression bracket;              // [X_i, Ẍ_j] = F_ji
  Expression velocity_commutator;  // [Ẋ_i, Ẋ_j] = -[X_i, Ẍ_j]
  bool field_matches = false;      // velocity_commutator == F_ij given F antisymmetric
};

/// Ẍ_j = E_j + Σ_k F_jk Ẋ_k on a lorentz background; `with_field = false`
/// drops the F terms.
LorentzReport lorentz_force_consistency(const BackgroundSpec& bg, int i, int j, bool with_field = true);

}  // namespace docalc::geometry
