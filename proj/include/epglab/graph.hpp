#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "epglab/error.hpp"

namespace epglab {

inline constexpr int kMaxGraphVertices = 512;

/// Simple undirected graph with adjacency kept as packed bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(checked_size(n)), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

  int size() const { return n_; }

  bool has_edge(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  /// Self-loops are ignored.
  void add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    if (u == v) return;
    set(u, v);
    set(v, u);
  }
  void remove_edge(int u, int v) {
    clear(u, v);
    clear(v, u);
  }

  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  /// Neighborhood as a 64-bit mask; only for graphs with at most 64 vertices.
  std::uint64_t row_mask(int v) const { return words_ ? bits_[static_cast<std::size_t>(v) * words_] : 0; }

  int degree(int v) const {
    int d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    const auto r = row(v);
    for (int w = 0; w < words_; ++w)
      for (std::uint64_t b = r[w]; b; b &= b - 1) out.push_back(w * 64 + std::countr_zero(b));
    return out;
  }

  long long edge_count() const {
    long long total = 0;
    for (auto w : bits_) total += std::popcount(w);
    return total / 2;
  }

  /// Edges (i, j) with i < j, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names) { names_ = std::move(names); }
  std::string name(int v) const {
    return v < static_cast<int>(names_.size()) ? names_[v] : std::to_string(v);
  }

  /// For induced subgraphs: the parent vertex of each vertex.
  const std::vector<int>& origin() const { return origin_; }
  void set_origin(std::vector<int> o) { origin_ = std::move(o); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> names_;
  std::vector<int> origin_;

  static int checked_size(int n) {
    if (n < 0) throw InputError("negative vertex count");
    if (n > kMaxGraphVertices)
      throw LimitError("graphs are limited to " + std::to_string(kMaxGraphVertices) + " vertices");
    return n;
  }
  void set(int u, int v) { bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63); }
  void clear(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  }
};

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph complement(const Graph& g) {
  Graph c(g.size());
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  c.set_names(g.names());
  c.set_origin(g.origin());
  return c;
}

/// Subgraph induced by `vertices` (in the given order); origin() maps back to `g`.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<char> seen(g.size(), 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.size()) throw InputError("vertex " + std::to_string(v) + " out of range");
    if (seen[v]++) throw InputError("vertex " + std::to_string(v) + " listed twice");
  }
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.has_edge(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  std::vector<std::string> names;
  for (int v : vertices) names.push_back(g.name(v));
  h.set_names(std::move(names));
  h.set_origin(vertices);
  return h;
}

/// Vertices adjacent to every other vertex.
inline std::vector<int> dominating_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v)
    if (g.degree(v) == g.size() - 1) out.push_back(v);
  return out;
}

/// All-pairs BFS distances (-1 when disconnected). Computed eagerly; callers cache the result.
inline std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const int n = g.size();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    q.push(s);
    dist[s][s] = 0;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : g.neighbors(u))
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][u] + 1;
          q.push(w);
        }
    }
  }
  return dist;
}

/// Unordered pairs (u < v) at distance exactly two.
inline std::vector<std::pair<int, int>> distance_two_pairs(const Graph& g) {
  const auto dist = all_pairs_distances(g);
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (dist[u][v] == 2) out.emplace_back(u, v);
  return out;
}

inline bool is_connected(const Graph& g) {
  if (g.size() <= 1) return true;
  std::vector<char> seen(g.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.size();
}

// ---------------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------------

namespace detail {
inline std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace detail

inline std::string to_dot(const Graph& g, const std::string& title = "G") {
  std::ostringstream os;
  os << "graph \"" << detail::json_escape(title) << "\" {\n";
  for (int v = 0; v < g.size(); ++v)
    os << "  " << v << " [label=\"" << detail::json_escape(g.name(v)) << "\"];\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace epglab
