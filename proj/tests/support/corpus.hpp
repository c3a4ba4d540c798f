#pragma once

// Deterministic graph corpora shared across test suites.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "respan/connectivity.hpp"
#include "respan/generators.hpp"
#include "respan/graph.hpp"

namespace testsupport {

/// Random 2-edge-connected graph: a Hamiltonian cycle on a shuffled vertex
/// order plus distinct random chords up to m edges.
inline respan::Graph random_two_edge_connected(int n, int m, std::uint64_t seed, int wmin = 1,
                                               int wmax = 1) {
  if (n < 3 || m < n) throw std::invalid_argument("random_two_edge_connected: need n >= 3, m >= n");
  std::mt19937_64 rng(seed);
  auto draw = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(order[static_cast<std::size_t>(i)],
                                            order[static_cast<std::size_t>(draw(0, i))]);
  std::set<std::pair<int, int>> chosen;
  auto norm = [](int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
  for (int i = 0; i < n; ++i)
    chosen.insert(norm(order[static_cast<std::size_t>(i)],
                       order[static_cast<std::size_t>((i + 1) % n)]));
  std::vector<std::pair<int, int>> pool;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!chosen.count({u, v})) pool.push_back({u, v});
  int want = m - static_cast<int>(chosen.size());
  if (want > static_cast<int>(pool.size()))
    throw std::invalid_argument("random_two_edge_connected: m too large");
  for (int i = 0; i < want; ++i) {
    int j = draw(i, static_cast<int>(pool.size()) - 1);
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    chosen.insert(pool[static_cast<std::size_t>(i)]);
  }
  std::vector<respan::Graph::Edge> es;
  for (const auto& [u, v] : chosen)
    es.push_back({u, v, wmin == wmax ? static_cast<double>(wmin)
                                     : static_cast<double>(draw(wmin, wmax))});
  return respan::Graph::build(n, std::move(es));
}

/// Small connected graphs of assorted shapes and densities, deterministic.
/// Weighted variants use integer weights in [1, wmax].
inline std::vector<respan::Graph> small_connected_corpus(int count, int max_n,
                                                         std::uint64_t seed_base, int wmax = 1) {
  std::vector<respan::Graph> out;
  int i = 0;
  for (std::uint64_t seed = seed_base; static_cast<int>(out.size()) < count; ++seed, ++i) {
    int n = 4 + static_cast<int>(seed % static_cast<std::uint64_t>(max_n - 3));
    long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    // sweep sparse to dense
    long long m = (n - 1) + (static_cast<long long>(i) * 7 + 3) % (max_m - (n - 1) + 1);
    out.push_back(respan::gen_random(n, static_cast<int>(m), seed, 1, wmax));
  }
  return out;
}

/// Exhaustive-scale corpus: tiny graphs for path-enumeration oracles.
inline std::vector<respan::Graph> tiny_corpus(std::uint64_t seed_base, int wmax = 1) {
  std::vector<respan::Graph> out;
  out.push_back(respan::gen_cycle(5));
  out.push_back(respan::gen_complete(5));
  out.push_back(respan::gen_grid(3, 4));
  out.push_back(respan::gen_cycle(12));
  for (int i = 0; i < 40; ++i) {
    int n = 5 + i % 8;  // 5..12
    long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    long long m = (n - 1) + (i * 5 + 2) % (max_m - (n - 1) + 1);
    out.push_back(respan::gen_random(n, static_cast<int>(m), seed_base + static_cast<std::uint64_t>(i),
                                     1, wmax));
  }
  return out;
}

}  // namespace testsupport
