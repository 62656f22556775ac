#pragma once

#include "docalc/ncalg/table.hpp"

namespace docalc::geometry {

using ncalg::Atom;
using ncalg::CommutationTable;
using ncalg::Expression;
using ncalg::Family;

enum class BackgroundKind { Flat, Gauge, Metric, Lorentz };

struct GaugeOptions {
  bool abelian = false;  // add [A_i, A_j] = 0
};

struct MetricOptions {
  bool symmetric = true;              // identify g_ij with g_ji
  bool constant_metric = false;       // ∇_i g_jk = 0
  bool commuting_coordinates = true;  // [X_i, X_j] = 0
};

/// A dimension, a kind, and the commutation table the kind generates.
struct BackgroundSpec {
  unsigned dimension = 0;
  BackgroundKind kind = BackgroundKind::Flat;
  CommutationTable table;
  MetricOptions metric;  // meaningful for Metric only
};

// Generators. Indices are 1-based.
Atom coord(int i);
Atom momentum(int i);
Atom potential(int i);
Atom dpotential(int i, int j);  // ∂_i A_j
Atom velocity(int i);           // Ẋ_i = DX_i
Atom accel(int i);              // D²X_i
Atom efield(int i);
Atom field(int i, int j);       // F_ij
Atom metric(int i, int j, bool symmetric = true);
Atom nabla_metric(int i, int j, int k, bool symmetric = true);  // ∇_i g_jk
Atom dot_metric(int i, int j, bool symmetric = true);           // D g_ij

/// [X_i, X_j] = 0, [P_i, P_j] = 0, [X_i, P_j] = δ_ij.
BackgroundSpec flat_background(unsigned n);

/// Flat plus potentials: [X_i, A_j] = 0, [A_i, P_j] = ∂_j A_i.
BackgroundSpec gauge_background(unsigned n, GaugeOptions opts = {});

/// Coordinates, velocities and accelerations with [X_i, Ẋ_j] = g_ij,
/// [g_jk, Ẋ_i] = ∇_i g_jk, [X_i, D g_jk] = ∇_i g_jk and
/// [X_j, D²X_k] = D g_jk - F_jk, F_jk = [Ẋ_j, Ẋ_k].
BackgroundSpec metric_background(unsigned n, MetricOptions opts = {});

/// g = δ velocities with E_i and F_ij commuting with every X_k.
BackgroundSpec lorentz_background(unsigned n);

/// The abstract time derivative on the metric background:
/// X -> Ẋ -> D²X, g -> Dg, constants -> 0, extended by Leibniz.
Expression metric_dot(const Expression& e, bool symmetric = true);

/// Replace every metric-type atom by its index-sorted form.
Expression impose_metric_symmetry(const Expression& e);

/// Replace F_ij with i > j by -F_ji and drop F_ii.
Expression impose_field_antisymmetry(const Expression& e);

}  // namespace docalc::geometry
