#pragma once

// Slow, obviously-correct reference implementations used only by tests.
// Deliberately independent of the library's search code: distances come
// from Floyd-Warshall on an adjacency matrix, path sets from exhaustive
// enumeration.

#include <limits>
#include <set>
#include <vector>

#include "respan/graph.hpp"

namespace testsupport {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Floyd-Warshall all-pairs matrix; entry [x][y] is +inf when unreachable.
/// skip_edge (edge id, -1 for none) removes one edge first.
inline std::vector<std::vector<double>> fw_apsp(const respan::Graph& g, int skip_edge = -1) {
  int n = g.vertex_count();
  std::vector<std::vector<double>> d(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), kInf));
  for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0.0;
  for (int id = 0; id < g.edge_count(); ++id) {
    if (id == skip_edge) continue;
    const respan::Graph::Edge& e = g.edge(id);
    auto& duv = d[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
    auto& dvu = d[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)];
    duv = std::min(duv, e.w);
    dvu = std::min(dvu, e.w);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] == kInf) continue;
      for (int j = 0; j < n; ++j) {
        double via = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                     d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        if (via < d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
          d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = via;
      }
    }
  return d;
}

/// Fragility of an edge straight from the definition, on matrices computed
/// here: max over reachable pairs of dist-without / dist-with. Returns
/// +inf for bridges.
inline double fw_fragility(const respan::Graph& g, int edge_id) {
  auto with = fw_apsp(g);
  auto without = fw_apsp(g, edge_id);
  double worst = 1.0;
  int n = g.vertex_count();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      double base = with[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if (base == kInf) continue;
      double rep = without[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if (rep == kInf) return kInf;
      worst = std::max(worst, rep / base);
    }
  return worst;
}

/// Minimum cycle weight by brute force: for every edge, its weight plus
/// the endpoint distance with the edge removed. +inf for forests.
inline double fw_girth(const respan::Graph& g) {
  double best = kInf;
  for (int id = 0; id < g.edge_count(); ++id) {
    auto d = fw_apsp(g, id);
    const respan::Graph::Edge& e = g.edge(id);
    double rep = d[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
    if (rep != kInf) best = std::min(best, rep + e.w);
  }
  return best;
}

/// Same with all weights treated as 1 (minimum cycle edge count).
inline double fw_girth_hops(const respan::Graph& g) {
  std::vector<respan::Graph::Edge> es = g.edges();
  for (auto& e : es) e.w = 1.0;
  return fw_girth(respan::Graph::build(g.vertex_count(), std::move(es)));
}

/// All shortest x->y paths avoiding one edge, as vertex sequences, found
/// by exhaustive descent through the shortest-path DAG. Exponential; for
/// small graphs only.
inline std::vector<std::vector<int>> all_shortest_paths(const respan::Graph& g, int x, int y,
                                                        int skip_edge) {
  auto from_x = fw_apsp(g, skip_edge);
  double total = from_x[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  std::vector<std::vector<int>> out;
  if (total == kInf) return out;
  std::vector<int> cur{x};
  auto descend = [&](auto&& self, int z) -> void {
    if (z == y) {
      out.push_back(cur);
      return;
    }
    for (const respan::Graph::Neighbor& nb : g.neighbors(z)) {
      if (nb.edge == skip_edge) continue;
      double dz = from_x[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)];
      double rest = from_x[static_cast<std::size_t>(nb.to)][static_cast<std::size_t>(y)];
      if (rest == kInf) continue;
      if (!respan::nearly_equal(dz + g.edge(nb.edge).w + rest, total)) continue;
      cur.push_back(nb.to);
      self(self, nb.to);
      cur.pop_back();
    }
  };
  descend(descend, x);
  return out;
}

/// Over all shortest replacement paths for an edge, the minimum number of
/// path edges that are not in `used` (indexed by edge id). -1 when the
/// edge is a bridge.
inline int min_new_edges_oracle(const respan::Graph& g, int edge_id,
                                const std::vector<char>& used) {
  const respan::Graph::Edge& e = g.edge(edge_id);
  auto paths = all_shortest_paths(g, e.u, e.v, edge_id);
  if (paths.empty()) return -1;
  int best = -1;
  for (const auto& p : paths) {
    int fresh = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      int id = g.edge_index(p[i], p[i + 1]);
      if (used.empty() || !used[static_cast<std::size_t>(id)]) ++fresh;
    }
    if (best < 0 || fresh < best) best = fresh;
  }
  return best;
}

/// True if the vertex sequence is a simple path in g between the given
/// endpoints, with the claimed total weight.
inline bool is_simple_path(const respan::Graph& g, const respan::Path& p, int from, int to,
                           double weight) {
  if (p.vertices.empty() || p.vertices.front() != from || p.vertices.back() != to) return false;
  std::set<int> seen;
  double total = 0.0;
  for (int v : p.vertices)
    if (!seen.insert(v).second) return false;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    int id = g.edge_index(p.vertices[i], p.vertices[i + 1]);
    if (id < 0) return false;
    total += g.edge(id).w;
  }
  return respan::nearly_equal(total, weight) && respan::nearly_equal(p.weight, weight);
}

}  // namespace testsupport
