#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "epglab/graph.hpp"

namespace epglab {

/// Seeded random graphs with 1..max_n vertices and a per-graph edge density. Only raw engine
/// output is used, so the sequence is the same on every platform.
inline std::vector<Graph> random_graph_suite(std::uint64_t seed, int count, int max_n) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
    const std::uint64_t density = rng() % 1001;  // per mille
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 1000 < density) g.add_edge(u, v);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace epglab
