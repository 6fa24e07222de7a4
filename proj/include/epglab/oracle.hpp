#pragma once

// Brute-force reference computations. Nothing here calls into the solvers: each oracle reads the
// input through has_edge / mul only and keeps its own tables.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "epglab/error.hpp"
#include "epglab/finite_group.hpp"
#include "epglab/graph.hpp"

namespace epglab {

struct OracleResult {
  int value = 0;
  bool exhausted = false;
};

inline constexpr int kOracleLambdaLimit = 10;
inline constexpr int kOracleCoverLimit = 9;

namespace oracle_detail {

using Matrix = std::vector<std::vector<char>>;

inline Matrix adjacency_matrix(const Graph& g) {
  Matrix a(g.size(), std::vector<char>(g.size(), 0));
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) a[i][j] = i != j && g.has_edge(i, j);
  return a;
}

// Floyd-Warshall; a large sentinel marks unreachable pairs.
inline std::vector<std::vector<int>> distances(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d[i][j] = i == j ? 0 : a[i][j] ? 1 : inf;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline bool assign(int i, int span, const std::vector<std::vector<int>>& d, std::vector<int>& label) {
  const int n = static_cast<int>(label.size());
  if (i == n) return true;
  for (int l = 0; l <= span; ++l) {
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) {
      const int diff = l > label[j] ? l - label[j] : label[j] - l;
      if (d[i][j] == 1 && diff < 2) ok = false;
      if (d[i][j] == 2 && diff < 1) ok = false;
    }
    if (!ok) continue;
    label[i] = l;
    if (assign(i + 1, span, d, label)) return true;
  }
  return false;
}

inline int min_breaks(const Matrix& a, unsigned used, int last, std::map<std::pair<unsigned, int>, int>& memo) {
  const int n = static_cast<int>(a.size());
  if (used == (1u << n) - 1) return 0;
  const auto key = std::make_pair(used, last);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int best = n + 1;
  for (int v = 0; v < n; ++v) {
    if (used & (1u << v)) continue;
    const int cost = (last >= 0 && a[last][v]) ? 0 : 1;
    const int total = cost + min_breaks(a, used | (1u << v), v, memo);
    if (total < best) best = total;
  }
  memo[key] = best;
  return best;
}

}  // namespace oracle_detail

/// Smallest span s <= max_span that admits an L(2,1)-labeling, by plain depth-first assignment.
inline OracleResult lambda_bruteforce(const Graph& g, int max_span) {
  if (g.size() > kOracleLambdaLimit)
    throw LimitError("lambda oracle is limited to " + std::to_string(kOracleLambdaLimit) + " vertices");
  const auto d = oracle_detail::distances(oracle_detail::adjacency_matrix(g));
  std::vector<int> label(g.size(), 0);
  for (int s = 0; s <= max_span; ++s)
    if (oracle_detail::assign(0, s, d, label)) return {s, true};
  throw LimitError("no L(2,1)-labeling with span <= " + std::to_string(max_span));
}

/// Minimum number of paths covering g, over all vertex orderings (each order is cut into paths
/// wherever consecutive vertices are non-adjacent).
inline OracleResult path_cover_bruteforce(const Graph& g) {
  if (g.size() > kOracleCoverLimit)
    throw LimitError("path cover oracle is limited to " + std::to_string(kOracleCoverLimit) + " vertices");
  if (g.size() == 0) return {0, true};
  std::map<std::pair<unsigned, int>, int> memo;
  return {oracle_detail::min_breaks(oracle_detail::adjacency_matrix(g), 0u, -1, memo), true};
}

/// x ~ y in the enhanced power graph, by testing every z.
inline bool epg_bruteforce_adjacency(const FiniteGroup& G, Element x, Element y) {
  if (x == y) return false;
  for (Element z = 0; z < G.order(); ++z) {
    bool has_x = false, has_y = false;
    Element p = 0;
    do {
      has_x |= p == x;
      has_y |= p == y;
      p = G.mul(p, z);
    } while (p != 0);
    if (has_x && has_y) return true;
  }
  return false;
}

}  // namespace epglab
