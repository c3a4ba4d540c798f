#pragma once

#include <cmath>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "respan/fragility.hpp"
#include "respan/graph.hpp"
#include "respan/shortest_paths.hpp"
#include "respan/spanner.hpp"

namespace respan {

/// Shortest cycle through an edge with reuse-aware tie-breaking: among all
/// minimum-weight replacement paths for the edge, pick one using the fewest
/// edges outside `used` (ties broken toward the lexicographically minimal
/// path). Runs Dijkstra on composite labels (weight, new-edge count),
/// which lexicographic order keeps prefix-optimal. Empty when the edge is
/// a bridge. `used` is indexed by edge id of g; empty means nothing used.
inline std::optional<BackupCycle> backup_cycle(const Graph& g, int edge_id,
                                               const std::vector<char>& used) {
  if (edge_id < 0 || edge_id >= g.edge_count())
    throw std::invalid_argument("backup_cycle: edge id out of range");
  if (!used.empty() && static_cast<int>(used.size()) != g.edge_count())
    throw std::invalid_argument("backup_cycle: used set must be indexed by edge id");
  const Graph::Edge& target = g.edge(edge_id);
  auto edge_is_used = [&used](int id) {
    return !used.empty() && used[static_cast<std::size_t>(id)];
  };

  int n = g.vertex_count();
  constexpr double kUnset = -1.0;
  std::vector<double> dist(static_cast<std::size_t>(n), kUnset);
  std::vector<int> fresh(static_cast<std::size_t>(n), 0);  // new-edge count of the label
  // heap entries: (weight, new-edge count, vertex)
  using Item = std::tuple<double, int, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  dist[static_cast<std::size_t>(target.u)] = 0.0;
  heap.push({0.0, 0, target.u});
  while (!heap.empty()) {
    auto [dx, cx, x] = heap.top();
    heap.pop();
    if (dist[static_cast<std::size_t>(x)] != kUnset &&
        (dx > dist[static_cast<std::size_t>(x)] + kDistEps ||
         (nearly_equal(dx, dist[static_cast<std::size_t>(x)]) &&
          cx > fresh[static_cast<std::size_t>(x)])))
      continue;  // stale entry
    for (const Graph::Neighbor& nb : g.neighbors(x)) {
      if (nb.edge == edge_id) continue;
      double cand_d = dx + g.edge(nb.edge).w;
      int cand_c = cx + (edge_is_used(nb.edge) ? 0 : 1);
      double& cur_d = dist[static_cast<std::size_t>(nb.to)];
      int& cur_c = fresh[static_cast<std::size_t>(nb.to)];
      bool better = cur_d == kUnset || cand_d < cur_d - kDistEps * std::max(1.0, cur_d) ||
                    (nearly_equal(cand_d, cur_d) && cand_c < cur_c);
      if (!better) continue;
      cur_d = cand_d;
      cur_c = cand_c;
      heap.push({cand_d, cand_c, nb.to});
    }
  }
  if (dist[static_cast<std::size_t>(target.v)] == kUnset) return std::nullopt;

  // Backward extraction: from v, repeatedly take the smallest-numbered
  // neighbor whose label accounts for the current one in both components.
  BackupCycle c;
  c.target = target;
  c.target_edge = edge_id;
  Path p;
  p.weight = dist[static_cast<std::size_t>(target.v)];
  int cur = target.v;
  p.vertices.push_back(cur);
  while (cur != target.u) {
    int best = -1;
    for (const Graph::Neighbor& nb : g.neighbors(cur)) {
      if (nb.edge == edge_id) continue;
      if (dist[static_cast<std::size_t>(nb.to)] == kUnset) continue;
      double need_d = dist[static_cast<std::size_t>(nb.to)] + g.edge(nb.edge).w;
      int need_c = fresh[static_cast<std::size_t>(nb.to)] + (edge_is_used(nb.edge) ? 0 : 1);
      if (!nearly_equal(need_d, dist[static_cast<std::size_t>(cur)])) continue;
      if (need_c != fresh[static_cast<std::size_t>(cur)]) continue;
      if (best < 0 || nb.to < best) best = nb.to;
    }
    if (best < 0) throw std::logic_error("backup_cycle: inconsistent label table");
    cur = best;
    p.vertices.push_back(cur);
  }
  std::reverse(p.vertices.begin(), p.vertices.end());
  c.path = p;
  c.new_edges = fresh[static_cast<std::size_t>(target.v)];
  return c;
}

/// Reuse-aware variant of short_cycle: see backup_cycle.
inline std::optional<BackupCycle> short_cycle(const Graph& g, int edge_id,
                                              const std::vector<char>& used) {
  return backup_cycle(g, edge_id, used);
}

/// A base spanner augmented with backup cycles until no spanner edge is
/// more fragile inside the result than the threshold (or than it already
/// was in the host graph).
struct ResilientSpanner {
  Spanner base;
  Graph result;                        // base edges plus all added backup-path edges
  std::vector<Graph::Edge> added;      // edges of result not in the base
  double sigma = 0.0;
  std::vector<BackupCycle> cycles;     // in selection order
};

/// Augments a spanner into a sigma-resilient one: every base edge whose
/// fragility inside the base exceeds sigma gets a shortest backup cycle
/// from the host graph, with ties preferring edges already placed.
/// Fragile edges are repaired in order of decreasing base fragility
/// (bridges of the host are exempt: nothing can back them up, and their
/// host fragility is already infinite). Requires sigma >= 2 and
/// sigma >= alpha + beta of the base, otherwise the target is unreachable.
inline ResilientSpanner make_resilient(const Graph& g, const Spanner& s, double sigma,
                                       int threads = 1) {
  if (sigma < 2.0) throw std::invalid_argument("make_resilient: threshold must be at least 2");
  if (sigma < s.alpha + s.beta - kDistEps)
    throw std::invalid_argument(
        "make_resilient: threshold below the base stretch guarantee (needs sigma >= alpha + beta)");
  if (!is_subgraph(g, s.subgraph))
    throw std::invalid_argument("make_resilient: base spanner is not a subgraph of the host");

  const Graph& base = s.subgraph;
  FragilityMap frag_in_base = all_fragilities(base, threads);
  std::vector<char> host_bridge(static_cast<std::size_t>(g.edge_count()), 0);
  for (int id : bridges(g)) host_bridge[static_cast<std::size_t>(id)] = 1;

  struct Candidate {
    int host_id;
    Fragility frag;
  };
  std::vector<Candidate> work;
  for (int sid = 0; sid < base.edge_count(); ++sid) {
    if (!frag_in_base[static_cast<std::size_t>(sid)].exceeds(sigma)) continue;
    const Graph::Edge& e = base.edge(sid);
    int hid = g.edge_index(e.u, e.v);
    if (host_bridge[static_cast<std::size_t>(hid)]) continue;
    work.push_back({hid, frag_in_base[static_cast<std::size_t>(sid)]});
  }
  // Most fragile first; ties by edge id, i.e. by endpoint pair.
  std::sort(work.begin(), work.end(), [](const Candidate& a, const Candidate& b) {
    int c = Fragility::compare(a.frag, b.frag);
    if (c != 0) return c > 0;
    return a.host_id < b.host_id;
  });

  // Seed the reuse set with the base itself: a repair that can stay inside
  // the spanner (or inside earlier backup paths) costs no new edges.
  std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
  std::set<int> result_ids;
  for (int sid = 0; sid < base.edge_count(); ++sid) {
    const Graph::Edge& e = base.edge(sid);
    int hid = g.edge_index(e.u, e.v);
    used[static_cast<std::size_t>(hid)] = 1;
    result_ids.insert(hid);
  }

  ResilientSpanner out;
  out.base = s;
  out.sigma = sigma;
  for (const Candidate& cand : work) {
    std::optional<BackupCycle> bc = backup_cycle(g, cand.host_id, used);
    if (!bc) throw std::logic_error("make_resilient: non-bridge edge has no backup cycle");
    for (int id : cycle_edge_ids(g, *bc)) {
      used[static_cast<std::size_t>(id)] = 1;
      result_ids.insert(id);
    }
    out.cycles.push_back(std::move(*bc));
  }

  std::vector<int> ids(result_ids.begin(), result_ids.end());
  out.result = g.subgraph(ids);
  for (int id : ids) {
    const Graph::Edge& e = g.edge(id);
    if (base.edge_index(e.u, e.v) < 0) out.added.push_back(e);
  }
  return out;
}

struct ResilienceViolation {
  Graph::Edge edge;
  Fragility in_result;
  Fragility in_host;
};

struct ResilienceCheck {
  bool resilient = true;
  std::vector<ResilienceViolation> violations;
};

/// Checks that no edge of r is more fragile inside r than allowed:
/// frag_r(e) <= max(sigma, frag_g(e)) for every edge e of r. Edges that
/// are bridges of the host pass vacuously (their host fragility is
/// already infinite).
inline ResilienceCheck verify_resilient(const Graph& g, const Graph& r, double sigma,
                                        int threads = 1) {
  if (!is_subgraph(g, r))
    throw std::invalid_argument("verify_resilient: candidate is not a subgraph of the host");
  ResilienceCheck out;
  FragilityMap in_r = all_fragilities(r, threads);
  for (int rid = 0; rid < r.edge_count(); ++rid) {
    const Fragility& fr = in_r[static_cast<std::size_t>(rid)];
    if (!fr.exceeds(sigma)) continue;
    const Graph::Edge& e = r.edge(rid);
    Fragility fg = edge_fragility(g, g.edge_index(e.u, e.v));
    if (Fragility::compare(fr, fg) <= 0) continue;
    out.resilient = false;
    out.violations.push_back({e, fr, fg});
  }
  return out;
}

inline ResilienceCheck verify_resilient(const Graph& g, const ResilientSpanner& r,
                                        int threads = 1) {
  return verify_resilient(g, r.result, r.sigma, threads);
}

/// Spanner edges whose host fragility reaches sigma, bucketed by how far
/// it goes beyond that. Buckets are decided most-severe first: at least
/// log2(n) is "high" (bridges included), at least max(sigma, 6) is "mid",
/// the rest is "low". Calmer edges (fragility below sigma) are left out
/// entirely. Edge ids refer to the host.
struct FragilityPartition {
  std::vector<int> low;
  std::vector<int> mid;
  std::vector<int> high;
  double sigma = 0.0;
  double log_threshold = 0.0;  // log2 of the vertex count
};

inline FragilityPartition fragility_classes(const Graph& g, const Graph& s, double sigma,
                                            const FragilityMap& host_frag) {
  if (!is_subgraph(g, s))
    throw std::invalid_argument("fragility_classes: candidate is not a subgraph of the host");
  if (static_cast<int>(host_frag.size()) != g.edge_count())
    throw std::invalid_argument("fragility_classes: fragility map size mismatch");
  FragilityPartition p;
  p.sigma = sigma;
  p.log_threshold = std::log2(std::max(2.0, static_cast<double>(g.vertex_count())));
  double mid_floor = std::max(sigma, 6.0);
  for (int sid = 0; sid < s.edge_count(); ++sid) {
    const Graph::Edge& e = s.edge(sid);
    int hid = g.edge_index(e.u, e.v);
    const Fragility& f = host_frag[static_cast<std::size_t>(hid)];
    if (!f.at_least(sigma)) continue;
    if (f.at_least(p.log_threshold))
      p.high.push_back(hid);
    else if (f.at_least(mid_floor))
      p.mid.push_back(hid);
    else
      p.low.push_back(hid);
  }
  return p;
}

inline FragilityPartition fragility_classes(const Graph& g, const Graph& s, double sigma) {
  return fragility_classes(g, s, sigma, all_fragilities(g));
}

/// How each edge of a backup cycle relates to the cycles selected before
/// it: already present in an earlier cycle (Old), touching a vertex no
/// earlier cycle touched (New), or connecting two already-touched vertices
/// with an edge never used before (Cross).
enum class CycleEdgeClass { Old, New, Cross };

/// Per-cycle and union accounting over an ordered list of backup cycles.
/// Every cycle contributes at most two New edges per vertex it introduces,
/// so the union of New edges never exceeds twice the vertex count.
struct CycleUnionStats {
  struct PerCycle {
    int old_count = 0;
    int new_count = 0;
    int cross_count = 0;
    // one entry per cycle edge, path edges in order then the target edge
    std::vector<CycleEdgeClass> classes;
  };
  std::vector<PerCycle> per_cycle;
  int union_new = 0;    // distinct edges first seen as New
  int union_cross = 0;  // distinct edges first seen as Cross
  int union_edges = 0;  // distinct edges over all cycles
  int vertices_touched = 0;
};

inline CycleUnionStats cycle_union_stats(const std::vector<BackupCycle>& cycles) {
  CycleUnionStats stats;
  std::set<std::pair<int, int>> seen_edges;
  std::set<int> seen_vertices;
  auto norm = [](int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
  for (const BackupCycle& c : cycles) {
    CycleUnionStats::PerCycle pc;
    std::vector<std::pair<int, int>> cycle_edges;
    for (int i = 0; i + 1 < static_cast<int>(c.path.vertices.size()); ++i)
      cycle_edges.push_back(norm(c.path.vertices[static_cast<std::size_t>(i)],
                                 c.path.vertices[static_cast<std::size_t>(i + 1)]));
    cycle_edges.push_back(norm(c.target.u, c.target.v));
    for (const auto& e : cycle_edges) {
      CycleEdgeClass cls;
      if (seen_edges.count(e)) {
        cls = CycleEdgeClass::Old;
        ++pc.old_count;
      } else if (!seen_vertices.count(e.first) || !seen_vertices.count(e.second)) {
        cls = CycleEdgeClass::New;
        ++pc.new_count;
        ++stats.union_new;
      } else {
        cls = CycleEdgeClass::Cross;
        ++pc.cross_count;
        ++stats.union_cross;
      }
      pc.classes.push_back(cls);
    }
    // Commit the whole cycle only after classifying all its edges.
    for (const auto& e : cycle_edges) {
      seen_edges.insert(e);
      seen_vertices.insert(e.first);
      seen_vertices.insert(e.second);
    }
    stats.per_cycle.push_back(std::move(pc));
  }
  stats.union_edges = static_cast<int>(seen_edges.size());
  stats.vertices_touched = static_cast<int>(seen_vertices.size());
  return stats;
}

}  // namespace respan
