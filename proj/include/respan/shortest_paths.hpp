#pragma once

#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "respan/graph.hpp"

namespace respan {

namespace detail {

/// Single-source distances, optionally ignoring one edge id (-1 = none).
/// BFS on unit-weight graphs, binary-heap Dijkstra otherwise. Both scan
/// adjacency lists in stored order, so results are deterministic.
inline std::vector<Distance> sssp_skip(const Graph& g, int src, int skip_edge) {
  std::vector<Distance> dist(static_cast<std::size_t>(g.vertex_count()),
                             Distance::unreachable());
  if (g.vertex_count() == 0) return dist;
  if (g.unit_weights()) {
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(g.vertex_count()));
    dist[static_cast<std::size_t>(src)] = Distance::of(0.0);
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      double dx = dist[static_cast<std::size_t>(x)].value();
      for (const Graph::Neighbor& nb : g.neighbors(x)) {
        if (nb.edge == skip_edge) continue;
        if (dist[static_cast<std::size_t>(nb.to)].is_unreachable()) {
          dist[static_cast<std::size_t>(nb.to)] = Distance::of(dx + 1.0);
          queue.push_back(nb.to);
        }
      }
    }
    return dist;
  }
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  std::vector<char> done(static_cast<std::size_t>(g.vertex_count()), 0);
  dist[static_cast<std::size_t>(src)] = Distance::of(0.0);
  heap.push({0.0, src});
  while (!heap.empty()) {
    auto [dx, x] = heap.top();
    heap.pop();
    if (done[static_cast<std::size_t>(x)]) continue;
    done[static_cast<std::size_t>(x)] = 1;
    for (const Graph::Neighbor& nb : g.neighbors(x)) {
      if (nb.edge == skip_edge) continue;
      double cand = dx + g.edge(nb.edge).w;
      Distance& cur = dist[static_cast<std::size_t>(nb.to)];
      if (cur.is_unreachable() || cand < cur.value()) {
        cur = Distance::of(cand);
        heap.push({cand, nb.to});
      }
    }
  }
  return dist;
}

/// Recovers a shortest path dst -> src by walking predecessors backward,
/// always taking the smallest-numbered valid predecessor. This makes the
/// returned path the unique one whose vertex sequence read from the dst
/// side is lexicographically minimal, independent of traversal order.
inline std::optional<Path> extract_path(const Graph& g, const std::vector<Distance>& dist,
                                        int src, int dst, int skip_edge) {
  if (dist[static_cast<std::size_t>(dst)].is_unreachable()) return std::nullopt;
  Path p;
  p.weight = dist[static_cast<std::size_t>(dst)].value();
  int cur = dst;
  p.vertices.push_back(cur);
  while (cur != src) {
    double dcur = dist[static_cast<std::size_t>(cur)].value();
    int best = -1;
    for (const Graph::Neighbor& nb : g.neighbors(cur)) {
      if (nb.edge == skip_edge) continue;
      const Distance& dp = dist[static_cast<std::size_t>(nb.to)];
      if (dp.is_unreachable()) continue;
      if (!nearly_equal(dp.value() + g.edge(nb.edge).w, dcur)) continue;
      if (best < 0 || nb.to < best) best = nb.to;
    }
    if (best < 0) return std::nullopt;  // inconsistent distance table
    cur = best;
    p.vertices.push_back(cur);
  }
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

}  // namespace detail

/// Single-source shortest-path distances from src.
inline std::vector<Distance> sssp(const Graph& g, int src) {
  if (src < 0 || src >= g.vertex_count())
    throw std::invalid_argument("sssp: source vertex out of range");
  return detail::sssp_skip(g, src, -1);
}

/// Shortest-path distance between two vertices.
inline Distance distance(const Graph& g, int x, int y) {
  return sssp(g, x)[static_cast<std::size_t>(y)];
}

struct ReplacementPath {
  Distance dist = Distance::unreachable();
  std::optional<Path> path;  // smallest-predecessor witness, if reachable
};

/// Shortest x-y distance in the graph with one edge removed, plus a
/// deterministic witness path.
inline ReplacementPath distance_avoiding_edge(const Graph& g, int x, int y, int edge_id) {
  if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count())
    throw std::invalid_argument("distance_avoiding_edge: vertex out of range");
  if (edge_id < 0 || edge_id >= g.edge_count())
    throw std::invalid_argument("distance_avoiding_edge: edge id out of range");
  ReplacementPath r;
  auto dist = detail::sssp_skip(g, x, edge_id);
  r.dist = dist[static_cast<std::size_t>(y)];
  if (r.dist.is_finite()) r.path = detail::extract_path(g, dist, x, y, edge_id);
  return r;
}

/// An edge together with a replacement path between its endpoints that
/// avoids the edge itself; path + edge form a cycle through the edge.
struct BackupCycle {
  Graph::Edge target;
  int target_edge = -1;  // edge id in the host graph
  Path path;             // runs target.u -> target.v, avoiding target
  int new_edges = 0;     // path edges outside the caller's used set (0 if none given)
};

/// Edge ids of the full cycle (path edges followed by the target edge).
inline std::vector<int> cycle_edge_ids(const Graph& g, const BackupCycle& c) {
  std::vector<int> ids;
  ids.reserve(static_cast<std::size_t>(c.path.edge_count()) + 1);
  for (int i = 0; i + 1 < static_cast<int>(c.path.vertices.size()); ++i) {
    int id = g.edge_index(c.path.vertices[static_cast<std::size_t>(i)],
                          c.path.vertices[static_cast<std::size_t>(i + 1)]);
    ids.push_back(id);
  }
  ids.push_back(c.target_edge);
  return ids;
}

/// Shortest cycle through the given edge: the edge plus a shortest
/// replacement path, ties broken by walking back from the high endpoint
/// through smallest predecessors. Empty when the edge is a bridge.
/// (For reuse-aware tie-breaking against an existing edge set, see
/// backup_cycle in the resilient module.)
inline std::optional<BackupCycle> short_cycle(const Graph& g, int edge_id) {
  if (edge_id < 0 || edge_id >= g.edge_count())
    throw std::invalid_argument("short_cycle: edge id out of range");
  const Graph::Edge& e = g.edge(edge_id);
  ReplacementPath r = distance_avoiding_edge(g, e.u, e.v, edge_id);
  if (r.dist.is_unreachable()) return std::nullopt;
  BackupCycle c;
  c.target = e;
  c.target_edge = edge_id;
  c.path = *r.path;
  c.new_edges = c.path.edge_count();
  return c;
}

/// All-pairs distances as n rows of sssp output.
inline std::vector<std::vector<Distance>> apsp(const Graph& g) {
  std::vector<std::vector<Distance>> d;
  d.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) d.push_back(sssp(g, v));
  return d;
}

}  // namespace respan
