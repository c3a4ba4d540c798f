#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "respan/fragility.hpp"
#include "respan/graph.hpp"
#include "respan/spanner.hpp"

namespace respan {

inline Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("gen_cycle: need at least 3 vertices");
  std::vector<Graph::Edge> es;
  for (int v = 0; v < n; ++v) es.push_back({v, (v + 1) % n, 1.0});
  return Graph::build(n, std::move(es));
}

inline Graph gen_path(int n) {
  if (n < 1) throw std::invalid_argument("gen_path: need at least 1 vertex");
  std::vector<Graph::Edge> es;
  for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1, 1.0});
  return Graph::build(n, std::move(es));
}

inline Graph gen_complete(int n) {
  if (n < 1) throw std::invalid_argument("gen_complete: need at least 1 vertex");
  std::vector<Graph::Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back({u, v, 1.0});
  return Graph::build(n, std::move(es));
}

/// rows x cols grid; vertex (r, c) is r * cols + c.
inline Graph gen_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("gen_grid: dimensions must be positive");
  std::vector<Graph::Edge> es;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) es.push_back({v, v + 1, 1.0});
      if (r + 1 < rows) es.push_back({v, v + cols, 1.0});
    }
  return Graph::build(rows * cols, std::move(es));
}

/// Star with n vertices total: center 0, leaves 1..n-1.
inline Graph gen_star(int n) {
  if (n < 2) throw std::invalid_argument("gen_star: need at least 2 vertices");
  std::vector<Graph::Edge> es;
  for (int v = 1; v < n; ++v) es.push_back({0, v, 1.0});
  return Graph::build(n, std::move(es));
}

/// Connected random graph: a random spanning tree (each vertex attaches to
/// a uniformly chosen earlier one) plus m - n + 1 distinct random non-tree
/// edges. Optional uniform integer weights in [wmin, wmax]. Deterministic
/// for a fixed seed.
inline Graph gen_random(int n, int m, std::uint64_t seed, int wmin = 1, int wmax = 1) {
  if (n < 1) throw std::invalid_argument("gen_random: need at least 1 vertex");
  long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_edges)
    throw std::invalid_argument("gen_random: edge count must be in [n-1, n(n-1)/2]");
  if (wmin < 1 || wmax < wmin)
    throw std::invalid_argument("gen_random: weight range must satisfy 1 <= wmin <= wmax");
  std::mt19937_64 rng(seed);
  auto draw = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  std::vector<std::pair<int, int>> picked;
  std::vector<char> in_tree;
  for (int v = 1; v < n; ++v) {
    int p = draw(0, v - 1);
    picked.push_back({std::min(p, v), std::max(p, v)});
  }
  std::set<std::pair<int, int>> tree(picked.begin(), picked.end());
  std::vector<std::pair<int, int>> pool;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!tree.count({u, v})) pool.push_back({u, v});
  int extra = m - (n - 1);
  for (int i = 0; i < extra; ++i) {
    int j = draw(i, static_cast<int>(pool.size()) - 1);
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    picked.push_back(pool[static_cast<std::size_t>(i)]);
  }

  std::vector<Graph::Edge> es;
  es.reserve(picked.size());
  for (const auto& [u, v] : picked)
    es.push_back({u, v, wmin == wmax ? static_cast<double>(wmin)
                                     : static_cast<double>(draw(wmin, wmax))});
  return Graph::build(n, std::move(es));
}

namespace detail {

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// Complement of the intersection graph of k-element subsets of a
/// 3k-element ground set: vertices are the subsets in lexicographic order,
/// edges join disjoint subsets. Every edge lies in exactly one triangle
/// (the three blocks of a partition meeting in pairwise disjoint triples)
/// and every edge has fragility exactly 2.
inline Graph gen_intersection_complement(int k) {
  if (k < 1) throw std::invalid_argument("gen_intersection_complement: k must be positive");
  if (k > 5)
    throw std::invalid_argument(
        "gen_intersection_complement: k > 5 exceeds the supported size (edges grow as C(3k,k)*C(2k,k)/2)");
  int ground = 3 * k;
  std::vector<std::uint32_t> masks;
  std::vector<int> comb(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint32_t m = 0;
    for (int c : comb) m |= (1u << c);
    masks.push_back(m);
    int i = k - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == ground - k + i) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
  int n = static_cast<int>(masks.size());
  std::vector<Graph::Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((masks[static_cast<std::size_t>(u)] & masks[static_cast<std::size_t>(v)]) == 0)
        es.push_back({u, v, 1.0});
  return Graph::build(n, std::move(es));
}

/// For graphs in which every edge lies in exactly one triangle (such as
/// gen_intersection_complement output): delete the lexicographically
/// largest edge of every triangle. The survivor edges reach the deleted
/// one's endpoints through their shared triangle, giving a multiplicative
/// 2-spanner. Rejects graphs where some edge is not in exactly one
/// triangle.
inline Spanner triangle_deleted_spanner(const Graph& g) {
  std::set<std::pair<int, int>> removed;
  std::vector<char> mark(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int id = 0; id < g.edge_count(); ++id) {
    const Graph::Edge& e = g.edge(id);
    for (const Graph::Neighbor& nb : g.neighbors(e.u)) mark[static_cast<std::size_t>(nb.to)] = 1;
    int common = -1;
    int count = 0;
    for (const Graph::Neighbor& nb : g.neighbors(e.v)) {
      if (mark[static_cast<std::size_t>(nb.to)]) {
        ++count;
        common = nb.to;
      }
    }
    for (const Graph::Neighbor& nb : g.neighbors(e.u)) mark[static_cast<std::size_t>(nb.to)] = 0;
    if (count != 1)
      throw std::invalid_argument("triangle_deleted_spanner: edge (" + std::to_string(e.u) +
                                  "," + std::to_string(e.v) + ") lies in " +
                                  std::to_string(count) + " triangles, expected exactly 1");
    // lexicographically largest edge of the triangle {a < b < c} is (b, c)
    int a = std::min({e.u, e.v, common});
    int c = std::max({e.u, e.v, common});
    int b = e.u + e.v + common - a - c;
    removed.insert({b, c});
  }
  std::vector<int> keep;
  for (int id = 0; id < g.edge_count(); ++id) {
    const Graph::Edge& e = g.edge(id);
    if (!removed.count({e.u, e.v})) keep.push_back(id);
  }
  return {g.subgraph(keep), 2.0, 0.0};
}

/// A fault-tolerant spanner whose own fragility far exceeds the host's:
/// the returned subgraph is a 1-fault-tolerant t-spanner of the host, yet
/// contains an edge with host fragility exactly t and spanner fragility
/// t^2 / 2. Construction: a long path from u to v in t blocks; each block
/// has a parallel path of the same length (these give fault tolerance) and
/// a weight-1 shortcut that exists only in the host; plus the edge (u, v)
/// itself. Requires even t >= 4. Self-checks all claims and refuses to
/// emit an unverified instance.
struct FragilityGapGadget {
  Graph g;
  Spanner s;
  Graph::Edge weak_edge;  // the edge realizing the fragility gap
};

inline FragilityGapGadget gen_fragility_gap_gadget(int t) {
  if (t < 4 || t % 2 != 0)
    throw std::invalid_argument("gen_fragility_gap_gadget: t must be even and at least 4");
  int h = t / 2;          // block length
  int path_len = t * h;   // t^2 / 2
  std::vector<Graph::Edge> host;
  std::vector<Graph::Edge> span;
  for (int i = 0; i < path_len; ++i) {
    host.push_back({i, i + 1, 1.0});
    span.push_back({i, i + 1, 1.0});
  }
  int next = path_len + 1;
  for (int c = 0; c < t; ++c) {
    int a = c * h;
    int b = (c + 1) * h;
    host.push_back({a, b, 1.0});  // shortcut: host only
    int prev = a;
    for (int j = 1; j < h; ++j) {
      host.push_back({prev, next, 1.0});
      span.push_back({prev, next, 1.0});
      prev = next++;
    }
    host.push_back({prev, b, 1.0});
    span.push_back({prev, b, 1.0});
  }
  host.push_back({0, path_len, 1.0});
  span.push_back({0, path_len, 1.0});

  FragilityGapGadget out;
  out.g = Graph::build(next, std::move(host));
  out.s = {Graph::build(next, std::move(span)), static_cast<double>(t), 0.0};
  out.weak_edge = {0, path_len, 1.0};

  Fragility in_host = edge_fragility(out.g, 0, path_len);
  Fragility in_span = edge_fragility(out.s.subgraph, 0, path_len);
  bool ok = in_host == Fragility::ratio(static_cast<double>(t), 1.0) &&
            in_span.at_least(static_cast<double>(t) * t / 2.0) &&
            verify_spanner(out.g, out.s).ok &&
            verify_fault_tolerance(out.g, out.s.subgraph, static_cast<double>(t), 1).ok;
  if (!ok) throw std::logic_error("gen_fragility_gap_gadget: construction failed self-check");
  return out;
}

}  // namespace respan
