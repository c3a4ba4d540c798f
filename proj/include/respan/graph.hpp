#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace respan {

/// Comparison slack for distances derived from non-integral edge weights.
/// Graphs with integral weights stay exact: every distance is an integer
/// representable in a double, so the slack never flips a true comparison.
inline constexpr double kDistEps = 1e-9;

inline bool nearly_equal(double a, double b) {
  double scale = std::max({1.0, a < 0 ? -a : a, b < 0 ? -b : b});
  double diff = a - b;
  return (diff < 0 ? -diff : diff) <= kDistEps * scale;
}

/// A shortest-path distance: either a finite non-negative value or
/// Unreachable. Unreachable compares greater than every finite value.
class Distance {
 public:
  static Distance unreachable() { return Distance(0.0, false); }
  static Distance of(double v) { return Distance(v, true); }

  bool is_unreachable() const { return !reachable_; }
  bool is_finite() const { return reachable_; }

  double value() const {
    if (!reachable_) throw std::logic_error("Distance::value() on Unreachable");
    return value_;
  }

  /// Finite value, or +inf when unreachable. Handy for reports.
  double value_or_inf() const {
    return reachable_ ? value_ : std::numeric_limits<double>::infinity();
  }

  friend bool operator==(const Distance& a, const Distance& b) {
    if (a.reachable_ != b.reachable_) return false;
    return !a.reachable_ || a.value_ == b.value_;
  }
  friend bool operator!=(const Distance& a, const Distance& b) { return !(a == b); }
  friend bool operator<(const Distance& a, const Distance& b) {
    if (!a.reachable_) return false;
    if (!b.reachable_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const Distance& a, const Distance& b) { return b < a; }
  friend bool operator<=(const Distance& a, const Distance& b) { return !(b < a); }
  friend bool operator>=(const Distance& a, const Distance& b) { return !(a < b); }

 private:
  Distance(double v, bool reachable) : value_(v), reachable_(reachable) {}
  double value_;
  bool reachable_;
};

/// A simple path: ordered vertex sequence plus total weight. The edge
/// sequence is implied by consecutive vertices.
struct Path {
  std::vector<int> vertices;
  double weight = 0.0;

  int edge_count() const { return static_cast<int>(vertices.size()) - 1; }
  int source() const { return vertices.front(); }
  int target() const { return vertices.back(); }

  friend bool operator==(const Path& a, const Path& b) {
    return a.vertices == b.vertices && nearly_equal(a.weight, b.weight);
  }
};

/// Immutable undirected simple graph with strictly positive edge weights.
/// Vertex ids are integers in [0, n). Edges are normalized to u < v and
/// stored sorted by (u, v), so edge ids are deterministic.
class Graph {
 public:
  struct Edge {
    int u;
    int v;
    double w;

    friend bool operator==(const Edge& a, const Edge& b) {
      return a.u == b.u && a.v == b.v && a.w == b.w;
    }
  };

  struct Neighbor {
    int to;
    int edge;  // edge id
  };

  Graph() = default;

  /// Validates and constructs. Rejects self-loops, duplicate edges,
  /// non-positive weights and out-of-range endpoints, naming the
  /// offending item.
  static Graph build(int n, std::vector<Edge> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& e : edges) {
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u < 0 || e.v >= n)
        throw std::invalid_argument("vertex out of range in edge (" +
                                    std::to_string(e.u) + "," + std::to_string(e.v) + ")");
      if (e.u == e.v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
      if (!(e.w > 0.0))
        throw std::invalid_argument("non-positive weight on edge (" +
                                    std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges.size(); ++i) {
      if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
        throw std::invalid_argument("duplicate edge (" + std::to_string(edges[i].u) +
                                    "," + std::to_string(edges[i].v) + ")");
    }
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    for (int id = 0; id < static_cast<int>(g.edges_.size()); ++id) {
      const Edge& e = g.edges_[id];
      g.adj_[e.u].push_back({e.v, id});
      g.adj_[e.v].push_back({e.u, id});
    }
    g.unit_ = true;
    g.integral_ = true;
    for (const Edge& e : g.edges_) {
      if (e.w != 1.0) g.unit_ = false;
      if (e.w != static_cast<double>(static_cast<long long>(e.w))) g.integral_ = false;
    }
    return g;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
  const std::vector<Neighbor>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  /// Edge id for the unordered pair {u, v}, or -1 if absent.
  int edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    Edge probe{u, v, 1.0};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), probe,
                               [](const Edge& a, const Edge& b) {
                                 return a.u != b.u ? a.u < b.u : a.v < b.v;
                               });
    if (it == edges_.end() || it->u != u || it->v != v) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

  /// All weights equal to 1.
  bool unit_weights() const { return unit_; }
  /// All weights integral (distance arithmetic stays exact in doubles).
  bool integral_weights() const { return integral_; }

  /// Subgraph on the same vertex set keeping the given edge ids.
  Graph subgraph(const std::vector<int>& edge_ids) const {
    std::vector<Edge> kept;
    kept.reserve(edge_ids.size());
    for (int id : edge_ids) kept.push_back(edges_[static_cast<std::size_t>(id)]);
    return build(n_, std::move(kept));
  }

  /// Subgraph keeping every edge except the given id.
  Graph without_edge(int edge_id) const {
    std::vector<Edge> kept;
    kept.reserve(edges_.size() - 1);
    for (int id = 0; id < edge_count(); ++id)
      if (id != edge_id) kept.push_back(edges_[static_cast<std::size_t>(id)]);
    return build(n_, std::move(kept));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adj_;
  bool unit_ = true;
  bool integral_ = true;
};

/// True when every edge of `sub` appears in `host` with the same weight
/// and the vertex sets match.
inline bool is_subgraph(const Graph& host, const Graph& sub) {
  if (host.vertex_count() != sub.vertex_count()) return false;
  for (const Graph::Edge& e : sub.edges()) {
    int id = host.edge_index(e.u, e.v);
    if (id < 0 || host.edge(id).w != e.w) return false;
  }
  return true;
}

}  // namespace respan
