#include "docalc/amplitudes/network.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace docalc::amplitudes {
namespace {

void check_matrix_chain(const std::vector<Matrix>& weights) {
  if (weights.empty()) throw std::invalid_argument("chain needs at least one link");
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const auto& w = weights[k];
    if (w.empty()) throw std::invalid_argument("empty transition matrix");
    for (const auto& row : w) {
      if (row.size() != w[0].size()) throw std::invalid_argument("ragged transition matrix");
    }
    if (k > 0 && weights[k - 1][0].size() != w.size()) throw std::invalid_argument("chain dimension mismatch");
  }
}

// Rotation system from straight-line coordinates: sort each vertex's
// edges counterclockwise by angle.
Network from_drawing(const std::vector<std::pair<double, double>>& pos,
                     const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> rot(pos.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    rot[edges[e].first].push_back(e);
    rot[edges[e].second].push_back(e);
  }
  for (std::size_t v = 0; v < pos.size(); ++v) {
    auto angle = [&](std::size_t e) {
      std::size_t w = edges[e].first == v ? edges[e].second : edges[e].first;
      return std::atan2(pos[w].second - pos[v].second, pos[w].first - pos[v].first);
    };
    std::sort(rot[v].begin(), rot[v].end(), [&](std::size_t a, std::size_t b) { return angle(a) < angle(b); });
  }
  return Network(3, std::move(rot));
}

std::vector<std::pair<double, double>> ring(std::size_t count, double radius, double phase = 0) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t k = 0; k < count; ++k) {
    double a = phase + 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
    out.emplace_back(radius * std::cos(a), radius * std::sin(a));
  }
  return out;
}

}  // namespace

GaussRational chain_amplitude(const std::vector<Matrix>& weights, std::size_t a, std::size_t b) {
  check_matrix_chain(weights);
  if (a >= weights.front().size() || b >= weights.back()[0].size()) throw std::out_of_range("chain state index");
  // Row vector of amplitudes <a|C> after each link.
  std::vector<GaussRational> amp = weights.front()[a];
  for (std::size_t k = 1; k < weights.size(); ++k) {
    const auto& w = weights[k];
    std::vector<GaussRational> next(w[0].size(), GaussRational(0));
    for (std::size_t c = 0; c < amp.size(); ++c) {
      if (amp[c].is_zero()) continue;
      for (std::size_t d = 0; d < next.size(); ++d) next[d] += amp[c] * w[c][d];
    }
    amp = std::move(next);
  }
  return amp[b];
}

Network::Network(unsigned colors, std::vector<std::vector<std::size_t>> rotation)
    : colors_(colors), rotation_(std::move(rotation)) {
  if (colors_ == 0) throw std::invalid_argument("network needs at least one color");
  std::size_t edges = 0;
  for (const auto& r : rotation_) {
    for (std::size_t e : r) edges = std::max(edges, e + 1);
  }
  ends_.assign(edges, {});
  for (std::size_t v = 0; v < rotation_.size(); ++v) {
    for (std::size_t e : rotation_[v]) ends_[e].push_back(v);
  }
  for (std::size_t e = 0; e < edges; ++e) {
    if (ends_[e].empty()) throw std::invalid_argument("edge " + std::to_string(e) + " has no endpoint");
    if (ends_[e].size() > 2) throw std::invalid_argument("edge " + std::to_string(e) + " has more than two ends");
  }
  fixed_.assign(edges, std::nullopt);
}

Network Network::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  unsigned colors = 0;
  std::vector<std::vector<std::size_t>> rot;
  std::vector<std::pair<std::size_t, unsigned>> fixes;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("network line " + std::to_string(lineno) + ": " + why);
    };
    if (head == "colors") {
      if (!(ls >> colors) || colors == 0) fail("expected a positive color count");
    } else if (head == "fix") {
      std::size_t e = 0;
      char eq = 0;
      unsigned c = 0;
      if (!(ls >> e >> eq >> c) || eq != '=') fail("expected 'fix EDGE = COLOR'");
      fixes.emplace_back(e, c);
    } else if (head.back() == ':') {
      std::size_t v = 0;
      try {
        v = std::stoul(head.substr(0, head.size() - 1));
      } catch (const std::exception&) {
        fail("bad vertex label");
      }
      if (v != rot.size()) fail("vertices must be listed in order 0, 1, 2, ...");
      std::vector<std::size_t> edges;
      std::size_t e = 0;
      while (ls >> e) edges.push_back(e);
      if (!ls.eof()) fail("bad edge id");
      rot.push_back(std::move(edges));
    } else {
      fail("unrecognized line");
    }
  }
  if (colors == 0) throw std::invalid_argument("network text needs a 'colors' line");
  Network n(colors, std::move(rot));
  for (auto [e, c] : fixes) n.fix(e, c);
  return n;
}

void Network::fix(std::size_t e, unsigned color) {
  if (e >= edge_count()) throw std::out_of_range("fixed edge does not exist");
  if (color >= colors_) throw std::out_of_range("fixed color outside the color set");
  fixed_[e] = color;
}

std::size_t Network::free_edge_count() const {
  return static_cast<std::size_t>(std::count(fixed_.begin(), fixed_.end(), std::nullopt));
}

GaussRational Network::weight(std::size_t v, std::span<const unsigned> colors) const {
  return weight_ ? weight_(v, colors) : GaussRational(1);
}

Network Network::relabeled(const std::vector<std::size_t>& vperm, const std::vector<std::size_t>& eperm) const {
  if (vperm.size() != vertex_count() || eperm.size() != edge_count()) throw std::invalid_argument("bad relabeling");
  std::vector<std::vector<std::size_t>> rot(vertex_count());
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    for (std::size_t e : rotation_[v]) rot[vperm[v]].push_back(eperm[e]);
  }
  Network out(colors_, std::move(rot));
  for (std::size_t e = 0; e < edge_count(); ++e) {
    if (fixed_[e]) out.fix(eperm[e], *fixed_[e]);
  }
  std::vector<std::size_t> inverse(vertex_count());
  for (std::size_t v = 0; v < vertex_count(); ++v) inverse[vperm[v]] = v;
  if (weight_) {
    out.weight_ = [w = weight_, inverse](std::size_t v, std::span<const unsigned> c) { return w(inverse[v], c); };
  }
  return out;
}

Network Network::disjoint_union(const Network& a, const Network& b) {
  if (a.colors_ != b.colors_) throw std::invalid_argument("union needs equal color sets");
  auto rot = a.rotation_;
  for (const auto& r : b.rotation_) {
    std::vector<std::size_t> shifted;
    for (std::size_t e : r) shifted.push_back(e + a.edge_count());
    rot.push_back(std::move(shifted));
  }
  Network out(a.colors_, std::move(rot));
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    if (a.fixed_[e]) out.fix(e, *a.fixed_[e]);
  }
  for (std::size_t e = 0; e < b.edge_count(); ++e) {
    if (b.fixed_[e]) out.fix(e + a.edge_count(), *b.fixed_[e]);
  }
  if (a.weight_ || b.weight_) {
    const std::size_t split = a.vertex_count();
    out.weight_ = [wa = a.weight_, wb = b.weight_, split](std::size_t v, std::span<const unsigned> c) {
      if (v < split) return wa ? wa(v, c) : GaussRational(1);
      return wb ? wb(v - split, c) : GaussRational(1);
    };
  }
  return out;
}

GaussRational network_partition_function(const Network& n, std::uint64_t cap) {
  std::vector<std::size_t> free;
  std::vector<unsigned> color(n.edge_count(), 0);
  for (std::size_t e = 0; e < n.edge_count(); ++e) {
    if (n.fixed(e)) {
      color[e] = *n.fixed(e);
    } else {
      free.push_back(e);
    }
  }
  double total = std::pow(static_cast<double>(n.colors()), static_cast<double>(free.size()));
  if (total > static_cast<double>(cap)) {
    throw EnumerationCapExceeded("network has " + std::to_string(free.size()) + " free edges; enumeration cap exceeded");
  }
  GaussRational z(0);
  std::vector<unsigned> around;
  while (true) {
    GaussRational prod(1);
    for (std::size_t v = 0; v < n.vertex_count() && !prod.is_zero(); ++v) {
      around.clear();
      for (std::size_t e : n.incident(v)) around.push_back(color[e]);
      prod *= n.weight(v, around);
    }
    z += prod;
    // Odometer over the free edges.
    std::size_t k = 0;
    for (; k < free.size(); ++k) {
      if (++color[free[k]] < n.colors()) break;
      color[free[k]] = 0;
    }
    if (k == free.size()) break;
  }
  return z;
}

Network chain_network(const std::vector<Matrix>& weights, std::size_t a, std::size_t b) {
  check_matrix_chain(weights);
  const std::size_t m = weights.size();
  // Edge k joins vertex k-1 and vertex k; edges 0 and m are boundary.
  std::vector<std::vector<std::size_t>> rot(m);
  for (std::size_t v = 0; v < m; ++v) rot[v] = {v, v + 1};
  std::size_t colors = weights.front().size();
  for (const auto& w : weights) colors = std::max({colors, w.size(), w[0].size()});
  Network n(static_cast<unsigned>(colors), std::move(rot));
  n.fix(0, static_cast<unsigned>(a));
  n.fix(m, static_cast<unsigned>(b));
  n.set_weight([weights](std::size_t v, std::span<const unsigned> c) {
    const auto& w = weights[v];
    if (c[0] >= w.size() || c[1] >= w[0].size()) return GaussRational(0);
    return w[c[0]][c[1]];
  });
  return n;
}

GaussRational penrose_vertex_weight(std::span<const unsigned> c) {
  if (c.size() != 3) throw NotCubic("penrose weight needs three incident edges");
  if (c[0] == c[1] || c[1] == c[2] || c[0] == c[2] || c[0] > 2 || c[1] > 2 || c[2] > 2) return GaussRational(0);
  const bool even = (c[1] == (c[0] + 1) % 3);
  return even ? GaussRational::i() : -GaussRational::i();
}

PenroseResult penrose_count(const Network& g) {
  if (g.colors() != 3) throw std::invalid_argument("penrose evaluation uses three colors");
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.incident(v).size() != 3) throw NotCubic("vertex " + std::to_string(v) + " is not trivalent");
  }
  Network weighted = g;
  weighted.set_weight([](std::size_t, std::span<const unsigned> c) { return penrose_vertex_weight(c); });
  PenroseResult r;
  r.value = network_partition_function(weighted);
  r.proper_colorings = count_proper_edge_colorings(g, 3);
  r.matches = r.value == GaussRational(static_cast<std::int64_t>(r.proper_colorings));
  return r;
}

std::uint64_t count_proper_edge_colorings(const Network& g, unsigned colors) {
  const std::size_t m = g.edge_count();
  std::vector<int> color(m, -1);
  for (std::size_t e = 0; e < m; ++e) {
    if (g.fixed(e)) color[e] = static_cast<int>(*g.fixed(e));
  }
  auto clash_at = [&](std::size_t v) {
    const auto& inc = g.incident(v);
    for (std::size_t s = 0; s < inc.size(); ++s) {
      for (std::size_t t = s + 1; t < inc.size(); ++t) {
        if (color[inc[s]] >= 0 && color[inc[s]] == color[inc[t]]) return true;
      }
    }
    return false;
  };
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (clash_at(v)) return 0;
  }
  std::vector<std::size_t> order;
  for (std::size_t e = 0; e < m; ++e) {
    if (!g.fixed(e)) order.push_back(e);
  }
  std::uint64_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == order.size()) {
      ++count;
      return;
    }
    const std::size_t e = order[k];
    for (unsigned c = 0; c < colors; ++c) {
      color[e] = static_cast<int>(c);
      bool ok = true;
      for (std::size_t v : g.ends(e)) ok = ok && !clash_at(v);
      if (ok) go(k + 1);
    }
    color[e] = -1;
  };
  go(0);
  return count;
}

EulerCheck euler_check(const Network& g) {
  EulerCheck r;
  r.vertices = g.vertex_count();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!g.is_boundary(e)) ++r.edges;
  }
  // Darts are (vertex, slot). The dart leaving through slot s arrives at the
  // other slot holding the same edge; the face continues with the next slot
  // in the rotation there.
  std::vector<std::vector<std::size_t>> offset(g.vertex_count());
  std::size_t darts = 0;
  std::vector<std::pair<std::size_t, std::size_t>> dart_of;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t s = 0; s < g.incident(v).size(); ++s) {
      offset[v].push_back(darts++);
      dart_of.emplace_back(v, s);
    }
  }
  auto partner = [&](std::size_t v, std::size_t s) -> std::pair<std::size_t, std::size_t> {
    const std::size_t e = g.incident(v)[s];
    for (std::size_t w : g.ends(e)) {
      const auto& inc = g.incident(w);
      for (std::size_t t = 0; t < inc.size(); ++t) {
        if (inc[t] == e && !(w == v && t == s)) return {w, t};
      }
    }
    return {v, s};
  };
  std::vector<bool> seen(darts, false);
  for (std::size_t d = 0; d < darts; ++d) {
    auto [v0, s0] = dart_of[d];
    if (seen[d] || g.is_boundary(g.incident(v0)[s0])) continue;
    ++r.faces;
    std::size_t cur = d;
    while (!seen[cur]) {
      seen[cur] = true;
      auto [v, s] = dart_of[cur];
      auto [w, t] = partner(v, s);
      std::size_t deg = g.incident(w).size();
      std::size_t next = (t + 1) % deg;
      // Skip dangling edges: they do not bound faces.
      while (g.is_boundary(g.incident(w)[next]) && next != t) next = (next + 1) % deg;
      cur = offset[w][next];
    }
  }
  // Components by union-find over internal edges.
  std::vector<std::size_t> parent(g.vertex_count());
  for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = v;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!g.is_boundary(e)) parent[find(g.ends(e)[0])] = find(g.ends(e)[1]);
  }
  for (std::size_t v = 0; v < parent.size(); ++v) {
    if (find(v) == v) ++r.components;
  }
  r.planar = r.vertices + r.faces == r.edges + 2 * r.components;
  return r;
}

Network theta_graph() { return Network(3, {{0, 1, 2}, {2, 1, 0}}); }

Network k4_graph() {
  auto pos = ring(3, 2.0, std::numbers::pi / 2);
  pos.insert(pos.begin(), {0.0, 0.0});
  return from_drawing(pos, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}});
}

Network prism_graph() {
  auto pos = ring(3, 2.0);
  auto inner = ring(3, 1.0);
  pos.insert(pos.end(), inner.begin(), inner.end());
  return from_drawing(pos, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

Network cube_graph() {
  auto pos = ring(4, 2.0);
  auto inner = ring(4, 1.0);
  pos.insert(pos.end(), inner.begin(), inner.end());
  return from_drawing(pos, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4},
                            {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

Network bridged_graph() {
  // Left gadget: 0 (top) and 1 (bottom) joined by edges 0 and 1, both tied
  // to 2 by edges 2 and 3. The right gadget mirrors it on 3, 4, 5; edge 8
  // is the bridge between 2 and 5.
  return Network(3, {{0, 1, 2}, {3, 1, 0}, {8, 2, 3}, {6, 4, 5}, {5, 4, 7}, {6, 8, 7}});
}

}  // namespace docalc::amplitudes
