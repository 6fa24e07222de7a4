#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "epglab/error.hpp"
#include "epglab/graph.hpp"
#include "epglab/labeling.hpp"

namespace epglab {

/// Subset DPs keep one 32-bit endpoint mask per subset.
inline constexpr int kExactSubsetLimit = 24;

enum class SearchMode { Exact, Heuristic };
enum class CoverMode { Exact, Upper };
enum class PathStatus { Found, Absent, Unknown };

inline const char* to_string(PathStatus s) {
  switch (s) {
    case PathStatus::Found: return "Found";
    case PathStatus::Absent: return "Absent";
    case PathStatus::Unknown: return "Unknown";
  }
  return "?";
}

struct Endpoints {
  std::optional<int> start;
  std::optional<int> end;
};

struct HamiltonianResult {
  PathStatus status = PathStatus::Unknown;
  std::vector<int> path;
};

namespace detail {

inline std::vector<std::uint32_t> small_adjacency(const Graph& g) {
  std::vector<std::uint32_t> adj(g.size());
  for (int v = 0; v < g.size(); ++v) adj[v] = static_cast<std::uint32_t>(g.row_mask(v));
  return adj;
}

inline void check_endpoints(const Graph& g, const Endpoints& ep) {
  for (auto v : {ep.start, ep.end})
    if (v && (*v < 0 || *v >= g.size())) throw InputError("endpoint " + std::to_string(*v) + " is not a vertex");
}

inline HamiltonianResult hamiltonian_exact(const Graph& g, const Endpoints& ep) {
  const int n = g.size();
  if (n > kExactSubsetLimit)
    throw LimitError("exact Hamiltonian search is limited to " + std::to_string(kExactSubsetLimit) + " vertices");
  HamiltonianResult res;
  if (n == 0) {
    res.status = ep.start || ep.end ? PathStatus::Absent : PathStatus::Found;
    return res;
  }
  if (n > 1 && ep.start && ep.end && *ep.start == *ep.end) {
    res.status = PathStatus::Absent;
    return res;
  }
  const auto adj = small_adjacency(g);
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  // reach[m]: vertices u such that some path covers exactly m, starts legally and ends at u.
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  for (int v = 0; v < n; ++v)
    if (!ep.start || *ep.start == v) reach[1u << v] = 1u << v;
  for (std::uint32_t m = 1; m <= full; ++m) {
    if (!(m & (m - 1))) continue;
    std::uint32_t r = 0;
    for (std::uint32_t b = m; b; b &= b - 1) {
      const int u = std::countr_zero(b);
      if (reach[m ^ (1u << u)] & adj[u]) r |= 1u << u;
    }
    reach[m] = r;
  }
  std::uint32_t ends = reach[full];
  if (ep.end) ends &= 1u << *ep.end;
  if (!ends) {
    res.status = PathStatus::Absent;
    return res;
  }
  int cur = std::countr_zero(ends);
  std::uint32_t m = full;
  std::vector<int> rev{cur};
  while (m & (m - 1)) {
    const std::uint32_t prev = m ^ (1u << cur);
    cur = std::countr_zero(reach[prev] & adj[cur]);
    rev.push_back(cur);
    m = prev;
  }
  res.path.assign(rev.rbegin(), rev.rend());
  res.status = PathStatus::Found;
  return res;
}

// Greedy extension by fewest-unvisited-neighbours, with Posa rotations when stuck.
inline std::optional<std::vector<int>> posa_from(const Graph& g, int start, std::optional<int> reserved) {
  const int n = g.size();
  std::vector<char> in(n, 0);
  std::vector<int> path{start};
  in[start] = 1;
  if (reserved) in[*reserved] = 1;
  const int target = reserved ? n - 1 : n;
  auto free_degree = [&](int v) {
    int d = 0;
    for (int w : g.neighbors(v)) d += !in[w];
    return d;
  };
  auto extend = [&] {
    const int end = path.back();
    int best = -1, best_deg = n + 1;
    for (int w : g.neighbors(end))
      if (!in[w]) {
        const int d = free_degree(w);
        if (d < best_deg) best = w, best_deg = d;
      }
    if (best < 0) return false;
    path.push_back(best);
    in[best] = 1;
    return true;
  };
  long long budget = 20LL * n * n + 100;
  while (static_cast<int>(path.size()) < target && budget-- > 0) {
    if (extend()) continue;
    // Rotate: path[0..i] + reverse(path[i+1..]) when path[i] ~ end. Prefer a rotation whose new
    // end can be extended; otherwise take the first one to keep moving.
    const int len = static_cast<int>(path.size());
    int chosen = -1;
    for (int i = len - 3; i >= 0; --i) {
      if (!g.has_edge(path[i], path.back())) continue;
      if (chosen < 0) chosen = i;
      if (free_degree(path[i + 1]) > 0) {
        chosen = i;
        break;
      }
    }
    if (chosen < 0) return std::nullopt;
    std::reverse(path.begin() + chosen + 1, path.end());
  }
  if (static_cast<int>(path.size()) < target) return std::nullopt;
  if (reserved) {
    // Need the end adjacent to the reserved endpoint; rotate once if that helps.
    if (!g.has_edge(path.back(), *reserved)) {
      const int len = static_cast<int>(path.size());
      bool fixed = false;
      for (int i = 0; i + 1 < len && !fixed; ++i) {
        if (g.has_edge(path[i], path.back()) && g.has_edge(path[i + 1], *reserved)) {
          std::reverse(path.begin() + i + 1, path.end());
          fixed = true;
        }
      }
      if (!fixed) return std::nullopt;
    }
    path.push_back(*reserved);
  }
  return path;
}

inline HamiltonianResult hamiltonian_heuristic(const Graph& g, const Endpoints& ep) {
  const int n = g.size();
  HamiltonianResult res;
  if (n <= 1 || (ep.start && ep.end && *ep.start == *ep.end)) return hamiltonian_exact(g, ep);
  std::optional<std::vector<int>> found;
  if (ep.start) {
    found = posa_from(g, *ep.start, ep.end);
  } else if (ep.end) {
    found = posa_from(g, *ep.end, std::nullopt);
    if (found) std::reverse(found->begin(), found->end());
  } else {
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
    for (int s : order)
      if ((found = posa_from(g, s, std::nullopt))) break;
  }
  if (found && verify_path(g, *found) && static_cast<int>(found->size()) == n) {
    res.status = PathStatus::Found;
    res.path = std::move(*found);
    return res;
  }
  if (n <= kExactSubsetLimit) return hamiltonian_exact(g, ep);
  return res;  // Unknown
}

}  // namespace detail

/// Hamiltonian path with optional fixed endpoints. Exact mode proves absence; heuristic mode may
/// return Unknown for graphs beyond the exact limit.
inline HamiltonianResult hamiltonian_path(const Graph& g, SearchMode mode = SearchMode::Exact,
                                          const Endpoints& ep = {}) {
  detail::check_endpoints(g, ep);
  return mode == SearchMode::Exact ? detail::hamiltonian_exact(g, ep) : detail::hamiltonian_heuristic(g, ep);
}

namespace detail {

// g[m] = c(g[m]); tight[m] = vertices u that end some path of an optimal covering of m.
// Any vertex of m ends a covering with at most g[m] + 1 paths, which keeps the table this small.
inline PathCovering path_cover_exact(const Graph& g) {
  const int n = g.size();
  if (n > kExactSubsetLimit)
    throw LimitError("exact path cover is limited to " + std::to_string(kExactSubsetLimit) + " vertices");
  PathCovering out;
  if (n == 0) return out;
  const auto adj = small_adjacency(g);
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint8_t> best(std::size_t{1} << n, 0);
  std::vector<std::uint32_t> tight(std::size_t{1} << n, 0);
  for (std::uint32_t m = 1; m <= full; ++m) {
    int lo = 255;
    std::uint32_t arg = 0;
    for (std::uint32_t b = m; b; b &= b - 1) {
      const int u = std::countr_zero(b);
      const std::uint32_t rest = m ^ (1u << u);
      const int f = best[rest] + ((adj[u] & tight[rest]) ? 0 : 1);
      if (f < lo) lo = f, arg = 0;
      if (f == lo) arg |= 1u << u;
    }
    best[m] = static_cast<std::uint8_t>(lo);
    tight[m] = arg;
  }
  std::uint32_t m = full;
  int u = std::countr_zero(tight[full]);
  std::vector<int> current;
  while (true) {
    current.push_back(u);
    const std::uint32_t rest = m ^ (1u << u);
    if (!rest) break;
    if (const std::uint32_t link = adj[u] & tight[rest]; link) {
      u = std::countr_zero(link);
    } else {
      out.paths.emplace_back(current.rbegin(), current.rend());
      current.clear();
      u = std::countr_zero(tight[rest]);
    }
    m = rest;
  }
  out.paths.emplace_back(current.rbegin(), current.rend());
  std::reverse(out.paths.begin(), out.paths.end());
  return out;
}

inline PathCovering path_cover_greedy(const Graph& g) {
  const int n = g.size();
  std::vector<char> in(n, 0);
  auto free_degree = [&](int v) {
    int d = 0;
    for (int w : g.neighbors(v)) d += !in[w];
    return d;
  };
  auto step = [&](int from) {
    int best = -1, best_deg = n + 1;
    for (int w : g.neighbors(from))
      if (!in[w]) {
        const int d = free_degree(w);
        if (d < best_deg) best = w, best_deg = d;
      }
    return best;
  };
  PathCovering out;
  for (int left = n; left > 0;) {
    int s = -1, s_deg = n + 1;
    for (int v = 0; v < n; ++v)
      if (!in[v] && free_degree(v) < s_deg) s = v, s_deg = free_degree(v);
    std::vector<int> path{s};
    in[s] = 1;
    for (int w; (w = step(path.back())) >= 0;) path.push_back(w), in[w] = 1;
    std::reverse(path.begin(), path.end());
    for (int w; (w = step(path.back())) >= 0;) path.push_back(w), in[w] = 1;
    left -= static_cast<int>(path.size());
    out.paths.push_back(std::move(path));
  }
  return out;
}

}  // namespace detail

inline PathCovering path_cover_min(const Graph& g, CoverMode mode = CoverMode::Exact) {
  PathCovering c = mode == CoverMode::Exact ? detail::path_cover_exact(g) : detail::path_cover_greedy(g);
  if (!verify_path_covering(g, c)) throw VerificationError("path cover construction produced an invalid covering");
  return c;
}

/// Labels the vertices path by path: consecutive labels inside a path, one skipped label between
/// paths. For a covering of the complement this is an L(2,1)-labeling of g with span n + r - 2.
inline Labeling labeling_from_complement_cover(int n, const PathCovering& cover) {
  Labeling f;
  f.labels.assign(n, -1);
  int next = 0;
  for (const auto& p : cover.paths) {
    for (int v : p) f.labels[v] = next++;
    ++next;
  }
  return f;
}

/// lambda from an exact minimum covering of the complement. With c >= 2 the value is n + c - 2.
/// With c = 1 only lambda <= n - 1 follows in general; the value is exact when every pair of
/// vertices is within distance two (all labels distinct), otherwise bounds are returned.
inline LambdaCertificate lambda_via_path_cover(const Graph& g) {
  const int n = g.size();
  LambdaCertificate cert;
  PathCovering cover = path_cover_min(complement(g), CoverMode::Exact);
  const int c = cover.size();
  Labeling f = labeling_from_complement_cover(n, cover);
  if (!verify_labeling(g, f)) throw VerificationError("labeling derived from the complement cover is invalid");
  cert.cover = std::move(cover);
  cert.labeling = f;
  if (n == 0) {
    cert.method = Method::PathCover;
    return cert;
  }
  cert.notes.push_back("c(complement) = " + std::to_string(c));
  if (c >= 2) {
    cert.method = Method::PathCover;
    cert.value = cert.lower = cert.upper = n + c - 2;
    return cert;
  }
  bool within_two = true;
  const auto dist = all_pairs_distances(g);
  for (int u = 0; u < n && within_two; ++u)
    for (int v = u + 1; v < n && within_two; ++v) within_two = dist[u][v] == 1 || dist[u][v] == 2;
  if (within_two) {
    cert.method = Method::PathCover;
    cert.value = cert.lower = cert.upper = n - 1;
    cert.notes.push_back("all pairs within distance 2, so lambda >= n - 1");
    return cert;
  }
  cert.method = Method::BoundsOnly;
  cert.lower = lambda_lower_bound_graph(g);
  cert.upper = cert.value = n - 1;
  cert.notes.push_back("c = 1 gives only lambda <= n - 1 when some pair is at distance >= 3");
  return cert;
}

}  // namespace epglab
