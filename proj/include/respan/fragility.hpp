#pragma once

#include <thread>
#include <vector>

#include "respan/connectivity.hpp"
#include "respan/graph.hpp"
#include "respan/shortest_paths.hpp"

namespace respan {

/// How much the removal of one edge can stretch distances: the worst ratio
/// dist-without-edge / dist-with-edge over all vertex pairs. Stored as a
/// detour/base ratio (or Infinite, for bridges) and compared by
/// cross-multiplication, which is exact for integral weights.
class Fragility {
 public:
  static Fragility infinite() { return Fragility(1.0, 0.0, true); }
  static Fragility ratio(double detour, double base) {
    if (!(base > 0.0)) throw std::invalid_argument("Fragility: base must be positive");
    if (!(detour > 0.0)) throw std::invalid_argument("Fragility: detour must be positive");
    return Fragility(detour, base, false);
  }
  static Fragility one() { return ratio(1.0, 1.0); }

  bool is_infinite() const { return infinite_; }
  double detour() const { return detour_; }
  double base() const { return base_; }

  /// The ratio as a double; +inf when infinite.
  double value() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : detour_ / base_;
  }

  /// Three-way comparison: -1, 0, +1. Infinite compares equal to infinite
  /// and greater than everything finite.
  static int compare(const Fragility& a, const Fragility& b) {
    if (a.infinite_ && b.infinite_) return 0;
    if (a.infinite_) return 1;
    if (b.infinite_) return -1;
    double lhs = a.detour_ * b.base_;
    double rhs = b.detour_ * a.base_;
    if (nearly_equal(lhs, rhs)) return 0;
    return lhs < rhs ? -1 : 1;
  }

  bool exceeds(double threshold) const {
    return compare(*this, ratio(threshold, 1.0)) > 0;
  }
  bool at_least(double threshold) const {
    return compare(*this, ratio(threshold, 1.0)) >= 0;
  }

  friend bool operator==(const Fragility& a, const Fragility& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Fragility& a, const Fragility& b) { return compare(a, b) != 0; }
  friend bool operator<(const Fragility& a, const Fragility& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Fragility& a, const Fragility& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Fragility& a, const Fragility& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Fragility& a, const Fragility& b) { return compare(a, b) >= 0; }

 private:
  Fragility(double detour, double base, bool inf)
      : detour_(detour), base_(base), infinite_(inf) {}
  double detour_;
  double base_;
  bool infinite_;
};

/// Fragility per edge, indexed by edge id of the graph it was computed on.
using FragilityMap = std::vector<Fragility>;

/// Fragility of one edge via the endpoint formula: the worst pair is the
/// edge's own endpoints, so a single replacement-distance query suffices.
/// Infinite exactly when the edge is a bridge.
inline Fragility edge_fragility(const Graph& g, int edge_id) {
  if (edge_id < 0 || edge_id >= g.edge_count())
    throw std::invalid_argument("edge_fragility: edge id out of range");
  const Graph::Edge& e = g.edge(edge_id);
  auto d = detail::sssp_skip(g, e.u, edge_id);
  const Distance& rep = d[static_cast<std::size_t>(e.v)];
  if (rep.is_unreachable()) return Fragility::infinite();
  // dist with the edge present is min(w(e), replacement distance)
  double base = std::min(e.w, rep.value());
  return Fragility::ratio(rep.value(), base);
}

inline Fragility edge_fragility(const Graph& g, int u, int v) {
  int id = g.edge_index(u, v);
  if (id < 0)
    throw std::invalid_argument("edge_fragility: no edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
  return edge_fragility(g, id);
}

/// Literal definition of fragility: maximum over all vertex pairs of the
/// distance ratio with the edge removed vs present. Quadratically slower
/// than edge_fragility; kept as an independent cross-check.
inline Fragility fragility_oracle(const Graph& g, int edge_id) {
  if (edge_id < 0 || edge_id >= g.edge_count())
    throw std::invalid_argument("fragility_oracle: edge id out of range");
  Graph without = g.without_edge(edge_id);
  Fragility worst = Fragility::one();
  for (int x = 0; x < g.vertex_count(); ++x) {
    auto dg = sssp(g, x);
    auto dw = sssp(without, x);
    for (int y = 0; y < g.vertex_count(); ++y) {
      if (y == x) continue;
      const Distance& base = dg[static_cast<std::size_t>(y)];
      if (base.is_unreachable()) continue;  // pair disconnected with or without the edge
      const Distance& rep = dw[static_cast<std::size_t>(y)];
      if (rep.is_unreachable()) return Fragility::infinite();
      Fragility cand = Fragility::ratio(rep.value(), base.value());
      if (cand > worst) worst = cand;
    }
  }
  return worst;
}

/// Fragility of every edge. `threads` > 1 splits the edge range across
/// worker threads; results are identical regardless of thread count since
/// edges are independent.
inline FragilityMap all_fragilities(const Graph& g, int threads = 1) {
  FragilityMap fm(static_cast<std::size_t>(g.edge_count()), Fragility::one());
  if (threads < 1) threads = 1;
  threads = std::min<int>(threads, std::max(1, g.edge_count()));
  if (threads == 1) {
    for (int id = 0; id < g.edge_count(); ++id)
      fm[static_cast<std::size_t>(id)] = edge_fragility(g, id);
    return fm;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    workers.emplace_back([&g, &fm, t, threads] {
      for (int id = t; id < g.edge_count(); id += threads)
        fm[static_cast<std::size_t>(id)] = edge_fragility(g, id);
    });
  }
  for (auto& w : workers) w.join();
  return fm;
}

/// Subgraph (same vertex set) of edges with fragility strictly above the
/// threshold. Bridges always qualify.
inline Graph high_fragility_subgraph(const Graph& g, double sigma, const FragilityMap& fm) {
  if (static_cast<int>(fm.size()) != g.edge_count())
    throw std::invalid_argument("high_fragility_subgraph: fragility map size mismatch");
  std::vector<int> keep;
  for (int id = 0; id < g.edge_count(); ++id)
    if (fm[static_cast<std::size_t>(id)].exceeds(sigma)) keep.push_back(id);
  return g.subgraph(keep);
}

inline Graph high_fragility_subgraph(const Graph& g, double sigma) {
  return high_fragility_subgraph(g, sigma, all_fragilities(g));
}

/// Structural sparsity witness for the high-fragility subgraph L: every
/// cycle of L must use more than sigma + 1 edges (short cycles would cap
/// the fragility of their own edges). Checked on hop counts, which keeps
/// the statement exact for weighted graphs as well.
inline bool check_girth_bound(const Graph& g, double sigma, const FragilityMap& fm) {
  Graph l = high_fragility_subgraph(g, sigma, fm);
  Distance gh = girth_hops(l);
  if (gh.is_unreachable()) return true;  // forest: no cycle at all
  return gh.value() > sigma + 1.0 + kDistEps;
}

inline bool check_girth_bound(const Graph& g, double sigma) {
  return check_girth_bound(g, sigma, all_fragilities(g));
}

}  // namespace respan
