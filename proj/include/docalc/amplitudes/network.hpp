#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "docalc/rational.hpp"

namespace docalc::amplitudes {

using Matrix = std::vector<std::vector<GaussRational>>;

/// Entry (a, b) of the product W_1 W_2 ... W_m: the sum over intermediate
/// state sequences of the products of transition amplitudes.
GaussRational chain_amplitude(const std::vector<Matrix>& weights, std::size_t a, std::size_t b);

struct EnumerationCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Colored network. Each vertex lists its incident edges in cyclic order;
/// an edge appears in exactly two slots (twice at one vertex for a loop)
/// or in one slot for a boundary edge.
class Network {
 public:
  using VertexWeight = std::function<GaussRational(std::size_t vertex, std::span<const unsigned> colors)>;

  Network(unsigned colors, std::vector<std::vector<std::size_t>> rotation);

  /// "colors N" then one line per vertex "v: e1 e2 e3" in cyclic order,
  /// optional "fix e = c" lines. '#' starts a comment.
  static Network parse(std::string_view text);

  unsigned colors() const { return colors_; }
  std::size_t vertex_count() const { return rotation_.size(); }
  std::size_t edge_count() const { return ends_.size(); }
  const std::vector<std::size_t>& incident(std::size_t v) const { return rotation_[v]; }
  /// Vertices at the two ends; a boundary edge has only the first.
  const std::vector<std::size_t>& ends(std::size_t e) const { return ends_[e]; }
  bool is_boundary(std::size_t e) const { return ends_[e].size() == 1; }

  void fix(std::size_t e, unsigned color);
  const std::optional<unsigned>& fixed(std::size_t e) const { return fixed_[e]; }
  std::size_t free_edge_count() const;

  void set_weight(VertexWeight w) { weight_ = std::move(w); }
  GaussRational weight(std::size_t v, std::span<const unsigned> colors) const;

  /// Same network with vertices renumbered by `vperm` and edges by `eperm`.
  Network relabeled(const std::vector<std::size_t>& vperm, const std::vector<std::size_t>& eperm) const;
  /// Two networks side by side.
  static Network disjoint_union(const Network& a, const Network& b);

 private:
  unsigned colors_;
  std::vector<std::vector<std::size_t>> rotation_;
  std::vector<std::vector<std::size_t>> ends_;
  std::vector<std::optional<unsigned>> fixed_;
  VertexWeight weight_;
};

/// Σ over colorings of the free edges of Π_v weight(v, colors around v).
GaussRational network_partition_function(const Network& n, std::uint64_t cap = 50'000'000);

/// Chain A -*- C -*- ... -*- B: boundary edges fixed to a and b, one
/// bivalent vertex per transition matrix.
Network chain_network(const std::vector<Matrix>& weights, std::size_t a, std::size_t b);

/// i·ε_abc for the colors in cyclic order: +i for an even permutation of
/// (0, 1, 2), -i for odd, 0 on a repeat.
GaussRational penrose_vertex_weight(std::span<const unsigned> colors);

struct NotCubic : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PenroseResult {
  GaussRational value;
  std::uint64_t proper_colorings = 0;  // independent backtracking count
  bool matches = false;
};

/// Z with Penrose vertex weights over 3 colors.
PenroseResult penrose_count(const Network& g);

/// Proper 3-edge-colorings by backtracking (no weights involved).
std::uint64_t count_proper_edge_colorings(const Network& g, unsigned colors = 3);

struct EulerCheck {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  std::size_t components = 0;
  bool planar = false;  // V - E + F = 2 per component
};

/// Trace the faces of the rotation system.
EulerCheck euler_check(const Network& g);

// Test graphs with planar rotation systems.
Network theta_graph();
Network k4_graph();
Network prism_graph();
Network cube_graph();
/// Two double-edge gadgets joined by a bridge.
Network bridged_graph();

}  // namespace docalc::amplitudes
