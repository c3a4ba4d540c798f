#pragma once

#include <vector>

#include "respan/graph.hpp"
#include "respan/shortest_paths.hpp"

namespace respan {

namespace detail {

struct DfsFrame {
  int vertex;
  int parent_edge;
  std::size_t next;  // next adjacency index to scan
};

}  // namespace detail

/// Edge ids of all bridges (edges whose removal disconnects their
/// endpoints), in increasing id order. Iterative low-link DFS.
inline std::vector<int> bridges(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> order(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<int> out;
  int counter = 0;
  std::vector<detail::DfsFrame> stack;
  for (int root = 0; root < n; ++root) {
    if (order[static_cast<std::size_t>(root)] >= 0) continue;
    stack.push_back({root, -1, 0});
    order[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    while (!stack.empty()) {
      detail::DfsFrame& f = stack.back();
      const auto& adj = g.neighbors(f.vertex);
      if (f.next < adj.size()) {
        const Graph::Neighbor& nb = adj[f.next++];
        if (nb.edge == f.parent_edge) continue;
        if (order[static_cast<std::size_t>(nb.to)] < 0) {
          order[static_cast<std::size_t>(nb.to)] = low[static_cast<std::size_t>(nb.to)] = counter++;
          stack.push_back({nb.to, nb.edge, 0});
        } else {
          low[static_cast<std::size_t>(f.vertex)] =
              std::min(low[static_cast<std::size_t>(f.vertex)],
                       order[static_cast<std::size_t>(nb.to)]);
        }
      } else {
        int v = f.vertex;
        int pe = f.parent_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().vertex;
          low[static_cast<std::size_t>(p)] =
              std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
          if (low[static_cast<std::size_t>(v)] > order[static_cast<std::size_t>(p)])
            out.push_back(pe);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Partition of the vertices into 2-edge-connected components: vertices
/// connected after deleting all bridges. Components are numbered densely
/// in order of their smallest vertex.
struct ComponentPartition {
  std::vector<int> component;  // vertex -> component id
  int count = 0;

  std::vector<std::vector<int>> groups() const {
    std::vector<std::vector<int>> gs(static_cast<std::size_t>(count));
    for (int v = 0; v < static_cast<int>(component.size()); ++v)
      gs[static_cast<std::size_t>(component[static_cast<std::size_t>(v)])].push_back(v);
    return gs;
  }
};

inline ComponentPartition two_edge_connected_components(const Graph& g) {
  std::vector<char> is_bridge(static_cast<std::size_t>(g.edge_count()), 0);
  for (int id : bridges(g)) is_bridge[static_cast<std::size_t>(id)] = 1;
  ComponentPartition p;
  p.component.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> queue;
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (p.component[static_cast<std::size_t>(root)] >= 0) continue;
    int id = p.count++;
    p.component[static_cast<std::size_t>(root)] = id;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Graph::Neighbor& nb : g.neighbors(queue[head])) {
        if (is_bridge[static_cast<std::size_t>(nb.edge)]) continue;
        if (p.component[static_cast<std::size_t>(nb.to)] >= 0) continue;
        p.component[static_cast<std::size_t>(nb.to)] = id;
        queue.push_back(nb.to);
      }
    }
  }
  return p;
}

/// True when every vertex is reachable from vertex 0 (vacuously true for
/// the empty graph).
inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto d = sssp(g, 0);
  for (const Distance& x : d)
    if (x.is_unreachable()) return false;
  return true;
}

/// Minimum number of edges on any cycle, ignoring weights. Unreachable
/// when the graph is a forest. Per-root BFS: for each root, any non-tree
/// edge (x, y) closes a walk of hop length d(x) + d(y) + 1; the minimum
/// over all roots is exact because a root on a shortest cycle realizes it.
inline Distance girth_hops(const Graph& g) {
  int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent_edge(static_cast<std::size_t>(n));
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent_edge.begin(), parent_edge.end(), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      for (const Graph::Neighbor& nb : g.neighbors(x)) {
        if (dist[static_cast<std::size_t>(nb.to)] < 0) {
          dist[static_cast<std::size_t>(nb.to)] = dist[static_cast<std::size_t>(x)] + 1;
          parent_edge[static_cast<std::size_t>(nb.to)] = nb.edge;
          queue.push_back(nb.to);
        }
      }
    }
    for (int id = 0; id < g.edge_count(); ++id) {
      const Graph::Edge& e = g.edge(id);
      if (parent_edge[static_cast<std::size_t>(e.u)] == id ||
          parent_edge[static_cast<std::size_t>(e.v)] == id)
        continue;  // tree edge
      int du = dist[static_cast<std::size_t>(e.u)];
      int dv = dist[static_cast<std::size_t>(e.v)];
      if (du < 0 || dv < 0) continue;
      int cand = du + dv + 1;
      if (best < 0 || cand < best) best = cand;
    }
  }
  return best < 0 ? Distance::unreachable() : Distance::of(best);
}

/// Minimum total weight of any cycle: min over edges e = (u, v) of
/// w(e) + dist(u, v) avoiding e. Unreachable when the graph is a forest.
/// Equals girth_hops on unit-weight graphs.
inline Distance girth(const Graph& g) {
  if (g.unit_weights()) return girth_hops(g);
  Distance best = Distance::unreachable();
  for (int id = 0; id < g.edge_count(); ++id) {
    const Graph::Edge& e = g.edge(id);
    auto d = detail::sssp_skip(g, e.u, id);
    const Distance& rep = d[static_cast<std::size_t>(e.v)];
    if (rep.is_unreachable()) continue;
    Distance cand = Distance::of(rep.value() + e.w);
    if (cand < best) best = cand;
  }
  return best;
}

}  // namespace respan
