#pragma once

#include <cmath>
#include <vector>

#include "respan/fragility.hpp"
#include "respan/graph.hpp"
#include "respan/shortest_paths.hpp"

namespace respan {

/// A spanning subgraph with its stretch guarantee: for all pairs,
/// dist_S(x, y) <= alpha * dist_G(x, y) + beta.
struct Spanner {
  Graph subgraph;
  double alpha = 1.0;
  double beta = 0.0;
};

namespace detail {

/// Adjacency structure for a spanner under construction.
struct PartialGraph {
  explicit PartialGraph(int n) : adj(static_cast<std::size_t>(n)) {}

  void add(int u, int v, double w) {
    adj[static_cast<std::size_t>(u)].push_back({v, w});
    adj[static_cast<std::size_t>(v)].push_back({u, w});
  }

  /// Dijkstra from src that gives up once distances pass `cutoff`.
  /// Returns the distance to dst, or Unreachable if above cutoff.
  Distance bounded_distance(int src, int dst, double cutoff) const {
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    std::vector<double> dist(adj.size(), -1.0);
    dist[static_cast<std::size_t>(src)] = 0.0;
    heap.push({0.0, src});
    while (!heap.empty()) {
      auto [dx, x] = heap.top();
      heap.pop();
      if (dx > dist[static_cast<std::size_t>(x)]) continue;
      if (x == dst) return Distance::of(dx);
      for (const auto& [to, w] : adj[static_cast<std::size_t>(x)]) {
        double cand = dx + w;
        if (cand > cutoff + kDistEps) continue;
        double& cur = dist[static_cast<std::size_t>(to)];
        if (cur < 0.0 || cand < cur) {
          cur = cand;
          heap.push({cand, to});
        }
      }
    }
    return Distance::unreachable();
  }

  std::vector<std::vector<std::pair<int, double>>> adj;
};

/// Greedy stretch-t selection restricted to the given candidate edge ids,
/// scanned in order of increasing weight (ties by edge id, i.e. by
/// endpoint pair). Returns the selected ids, sorted.
inline std::vector<int> greedy_select(const Graph& g, const std::vector<int>& candidates,
                                      double t) {
  std::vector<int> order = candidates;
  std::stable_sort(order.begin(), order.end(), [&g](int a, int b) {
    double wa = g.edge(a).w, wb = g.edge(b).w;
    if (wa != wb) return wa < wb;
    return a < b;
  });
  PartialGraph partial(g.vertex_count());
  std::vector<int> picked;
  for (int id : order) {
    const Graph::Edge& e = g.edge(id);
    double budget = t * e.w;
    Distance cur = partial.bounded_distance(e.u, e.v, budget);
    if (cur.is_finite() && cur.value() <= budget + kDistEps) continue;
    partial.add(e.u, e.v, e.w);
    picked.push_back(id);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace detail

/// Classic greedy t-spanner: scan edges by increasing weight and keep an
/// edge only if the spanner built so far cannot already connect its
/// endpoints within t times its weight. Every cycle in the result uses
/// more than t + 1 edges.
inline Spanner greedy_spanner(const Graph& g, double t) {
  if (t < 3.0) throw std::invalid_argument("greedy_spanner: stretch must be at least 3");
  std::vector<int> all(static_cast<std::size_t>(g.edge_count()));
  for (int id = 0; id < g.edge_count(); ++id) all[static_cast<std::size_t>(id)] = id;
  return {g.subgraph(detail::greedy_select(g, all, t)), t, 0.0};
}

/// Additive 2-spanner for unit-weight graphs via degree clustering:
/// vertices with many unclustered neighbors become cluster centers and
/// contribute a full BFS tree plus star edges; edges incident to vertices
/// that stay unclustered are kept as-is. Expected size O(n^(3/2)).
inline Spanner additive2_spanner(const Graph& g) {
  if (!g.unit_weights())
    throw std::invalid_argument("additive2_spanner: requires unit edge weights");
  int n = g.vertex_count();
  int delta = std::max(1, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))));
  std::vector<char> clustered(static_cast<std::size_t>(n), 0);
  std::vector<char> keep(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<int> centers;

  // One pass suffices: the unclustered set only shrinks, so a vertex that
  // falls below the threshold at its turn stays below it.
  for (int v = 0; v < n; ++v) {
    int free_nbrs = 0;
    for (const Graph::Neighbor& nb : g.neighbors(v))
      if (!clustered[static_cast<std::size_t>(nb.to)]) ++free_nbrs;
    if (free_nbrs < delta) continue;
    centers.push_back(v);
    clustered[static_cast<std::size_t>(v)] = 1;
    for (const Graph::Neighbor& nb : g.neighbors(v)) {
      if (clustered[static_cast<std::size_t>(nb.to)]) continue;
      clustered[static_cast<std::size_t>(nb.to)] = 1;
      keep[static_cast<std::size_t>(nb.edge)] = 1;  // star edge into the cluster
    }
  }

  // Edges touching an unclustered vertex.
  for (int id = 0; id < g.edge_count(); ++id) {
    const Graph::Edge& e = g.edge(id);
    if (!clustered[static_cast<std::size_t>(e.u)] || !clustered[static_cast<std::size_t>(e.v)])
      keep[static_cast<std::size_t>(id)] = 1;
  }

  // Full BFS tree per center: gives exact distances from the center, which
  // turns any clustered vertex on a shortest path into a +2 shortcut.
  std::vector<int> queue;
  std::vector<char> seen(static_cast<std::size_t>(n));
  for (int c : centers) {
    std::fill(seen.begin(), seen.end(), 0);
    seen[static_cast<std::size_t>(c)] = 1;
    queue.assign(1, c);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Graph::Neighbor& nb : g.neighbors(queue[head])) {
        if (seen[static_cast<std::size_t>(nb.to)]) continue;
        seen[static_cast<std::size_t>(nb.to)] = 1;
        keep[static_cast<std::size_t>(nb.edge)] = 1;
        queue.push_back(nb.to);
      }
    }
  }

  std::vector<int> ids;
  for (int id = 0; id < g.edge_count(); ++id)
    if (keep[static_cast<std::size_t>(id)]) ids.push_back(id);
  return {g.subgraph(ids), 1.0, 2.0};
}

/// f-edge-fault-tolerant t-spanner by layered greedy: run the greedy
/// selection f + 1 times, each round on the edges not yet selected, and
/// take the union. A missing edge was rejected by every layer it survived
/// to, so it has f + 1 edge-disjoint stretch-t detours; any f failures
/// leave one intact.
inline Spanner fault_tolerant_spanner(const Graph& g, double t, int f = 1) {
  if (t < 3.0) throw std::invalid_argument("fault_tolerant_spanner: stretch must be at least 3");
  if (f < 0) throw std::invalid_argument("fault_tolerant_spanner: fault budget must be >= 0");
  std::vector<char> taken(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<int> selected;
  for (int layer = 0; layer <= f; ++layer) {
    std::vector<int> residual;
    for (int id = 0; id < g.edge_count(); ++id)
      if (!taken[static_cast<std::size_t>(id)]) residual.push_back(id);
    for (int id : detail::greedy_select(g, residual, t)) {
      taken[static_cast<std::size_t>(id)] = 1;
      selected.push_back(id);
    }
  }
  std::sort(selected.begin(), selected.end());
  return {g.subgraph(selected), t, 0.0};
}

/// Result of an all-pairs stretch check. On failure, (x, y) is the first
/// violating pair in scan order.
struct SpannerCheck {
  bool ok = true;
  int x = -1;
  int y = -1;
  Distance dist_s = Distance::unreachable();
  Distance dist_g = Distance::unreachable();
  double allowed = 0.0;  // alpha * dist_g + beta for the witness pair
};

/// Checks dist_S(x, y) <= alpha * dist_G(x, y) + beta for every pair.
inline SpannerCheck verify_spanner(const Graph& g, const Graph& s, double alpha, double beta) {
  if (!is_subgraph(g, s))
    throw std::invalid_argument("verify_spanner: candidate is not a subgraph of the host");
  SpannerCheck r;
  for (int x = 0; x < g.vertex_count() && r.ok; ++x) {
    auto dg = sssp(g, x);
    auto ds = sssp(s, x);
    for (int y = x + 1; y < g.vertex_count(); ++y) {
      const Distance& bg = dg[static_cast<std::size_t>(y)];
      if (bg.is_unreachable()) continue;
      const Distance& bs = ds[static_cast<std::size_t>(y)];
      double allowed = alpha * bg.value() + beta;
      if (bs.is_finite() && bs.value() <= allowed + kDistEps * std::max(1.0, allowed)) continue;
      r.ok = false;
      r.x = x;
      r.y = y;
      r.dist_s = bs;
      r.dist_g = bg;
      r.allowed = allowed;
      break;
    }
  }
  return r;
}

inline SpannerCheck verify_spanner(const Graph& g, const Spanner& s) {
  return verify_spanner(g, s.subgraph, s.alpha, s.beta);
}

/// Result of a fault-tolerance check; `faults` is the first failing fault
/// set in enumeration order.
struct FaultCheck {
  bool ok = true;
  std::vector<int> faults;  // edge ids in the host graph
  int x = -1;
  int y = -1;
  Distance dist_s = Distance::unreachable();
  Distance dist_g = Distance::unreachable();
};

namespace detail {

inline Graph drop_edges(const Graph& g, const std::vector<char>& dropped) {
  std::vector<int> keep;
  for (int id = 0; id < g.edge_count(); ++id)
    if (!dropped[static_cast<std::size_t>(id)]) keep.push_back(id);
  return g.subgraph(keep);
}

}  // namespace detail

/// Exhaustive check that s stays a t-spanner of g under every failure of
/// at most f edges: dist_{S\F}(x, y) <= t * dist_{G\F}(x, y) for all pairs
/// and all F with |F| <= f. Exponential in f; intended for small f.
inline FaultCheck verify_fault_tolerance(const Graph& g, const Graph& s, double t, int f = 1) {
  if (!is_subgraph(g, s))
    throw std::invalid_argument("verify_fault_tolerance: candidate is not a subgraph of the host");
  if (f < 0) throw std::invalid_argument("verify_fault_tolerance: fault budget must be >= 0");
  FaultCheck result;

  std::vector<int> fault(static_cast<std::size_t>(f), 0);
  auto check_set = [&](const std::vector<int>& fs) -> bool {
    std::vector<char> drop_g(static_cast<std::size_t>(g.edge_count()), 0);
    for (int id : fs) drop_g[static_cast<std::size_t>(id)] = 1;
    std::vector<char> drop_s(static_cast<std::size_t>(s.edge_count()), 0);
    for (int id : fs) {
      const Graph::Edge& e = g.edge(id);
      int sid = s.edge_index(e.u, e.v);
      if (sid >= 0) drop_s[static_cast<std::size_t>(sid)] = 1;
    }
    Graph gf = detail::drop_edges(g, drop_g);
    Graph sf = detail::drop_edges(s, drop_s);
    for (int x = 0; x < g.vertex_count(); ++x) {
      auto dg = sssp(gf, x);
      auto ds = sssp(sf, x);
      for (int y = x + 1; y < g.vertex_count(); ++y) {
        const Distance& bg = dg[static_cast<std::size_t>(y)];
        if (bg.is_unreachable()) continue;
        const Distance& bs = ds[static_cast<std::size_t>(y)];
        double allowed = t * bg.value();
        if (bs.is_finite() && bs.value() <= allowed + kDistEps * std::max(1.0, allowed)) continue;
        result.ok = false;
        result.faults = fs;
        result.x = x;
        result.y = y;
        result.dist_s = bs;
        result.dist_g = bg;
        return false;
      }
    }
    return true;
  };

  // Fault sets of size 0, 1, ..., f in lexicographic order.
  std::vector<int> fs;
  auto enumerate = [&](auto&& self, int next, int remaining) -> bool {
    if (!check_set(fs)) return false;
    if (remaining == 0) return true;
    for (int id = next; id < g.edge_count(); ++id) {
      fs.push_back(id);
      bool cont = self(self, id + 1, remaining - 1);
      fs.pop_back();
      if (!cont) return false;
    }
    return true;
  };
  enumerate(enumerate, 0, f);
  return result;
}

inline FaultCheck verify_fault_tolerance(const Graph& g, const Spanner& s, double t, int f = 1) {
  return verify_fault_tolerance(g, s.subgraph, t, f);
}

/// Worst ratio of an edge's fragility inside the spanner to its fragility
/// in the host, checked against the bound `t` (one-fault-tolerant
/// t-spanners never inflate fragility by more than t). Infinite/infinite
/// pairs count as ratio 1.
struct FragilityRatioCheck {
  bool ok = true;
  double max_ratio = 1.0;
  int worst_u = -1;
  int worst_v = -1;
  double bound = 0.0;
};

inline FragilityRatioCheck fault_tolerant_fragility_bound(const Graph& g, const Graph& s,
                                                          double t) {
  if (!is_subgraph(g, s))
    throw std::invalid_argument(
        "fault_tolerant_fragility_bound: candidate is not a subgraph of the host");
  FragilityRatioCheck r;
  r.bound = t;
  for (int sid = 0; sid < s.edge_count(); ++sid) {
    const Graph::Edge& e = s.edge(sid);
    Fragility in_s = edge_fragility(s, sid);
    Fragility in_g = edge_fragility(g, g.edge_index(e.u, e.v));
    double ratio;
    bool within;
    if (in_g.is_infinite()) {
      ratio = 1.0;  // bridge of the host is a bridge of any spanning subgraph
      within = true;
    } else if (in_s.is_infinite()) {
      ratio = std::numeric_limits<double>::infinity();
      within = false;
    } else {
      ratio = in_s.value() / in_g.value();
      double lhs = in_s.detour() * in_g.base();
      double rhs = t * in_g.detour() * in_s.base();
      within = lhs <= rhs + kDistEps * std::max(1.0, rhs);
    }
    if (ratio > r.max_ratio) {
      r.max_ratio = ratio;
      r.worst_u = e.u;
      r.worst_v = e.v;
    }
    if (!within) r.ok = false;
  }
  return r;
}

}  // namespace respan
