#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "epglab/error.hpp"
#include "epglab/graph.hpp"

namespace epglab {

// Separation required at distance one and two. Only L(2,1) is supported.
inline constexpr int kSeparationAdjacent = 2;
inline constexpr int kSeparationDistanceTwo = 1;

struct Labeling {
  std::vector<int> labels;  // indexed by vertex

  int span() const { return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()); }
  void normalize() {
    if (labels.empty()) return;
    const int lo = *std::min_element(labels.begin(), labels.end());
    for (auto& l : labels) l -= lo;
  }
};

struct PathCovering {
  std::vector<std::vector<int>> paths;
  int size() const { return static_cast<int>(paths.size()); }
};

enum class Method { Exact, Oracle, PathCover, Theorem, BoundsOnly };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::Exact: return "Exact";
    case Method::Oracle: return "Oracle";
    case Method::PathCover: return "PathCover";
    case Method::Theorem: return "Theorem";
    case Method::BoundsOnly: return "BoundsOnly";
  }
  return "?";
}

/// A certified lambda value, or certified bounds when method == BoundsOnly.
struct LambdaCertificate {
  int value = 0;  // meaningful unless method == BoundsOnly
  Method method = Method::BoundsOnly;
  int lower = 0;
  int upper = 0;
  std::optional<Labeling> labeling;
  std::optional<PathCovering> cover;  // a covering of the complement graph
  std::vector<std::string> notes;

  bool is_exact() const { return method != Method::BoundsOnly; }
};

/// True iff f is an L(2,1)-labeling of g. Throws InputError when f is not total on V(g).
inline bool verify_labeling(const Graph& g, const Labeling& f) {
  const int n = g.size();
  if (static_cast<int>(f.labels.size()) != n)
    throw InputError("labeling covers " + std::to_string(f.labels.size()) + " of " + std::to_string(n) +
                     " vertices");
  for (int u = 0; u < n; ++u) {
    if (f.labels[u] < 0) return false;
    for (int v = u + 1; v < n; ++v) {
      const int diff = std::abs(f.labels[u] - f.labels[v]);
      if (g.has_edge(u, v)) {
        if (diff < kSeparationAdjacent) return false;
        continue;
      }
      bool common = false;
      const auto ru = g.row(u), rv = g.row(v);
      for (std::size_t w = 0; w < ru.size() && !common; ++w) common = (ru[w] & rv[w]) != 0;
      if (common && diff < kSeparationDistanceTwo) return false;
    }
  }
  return true;
}

/// Every vertex in exactly one path and consecutive path vertices adjacent in g.
inline bool verify_path_covering(const Graph& g, const PathCovering& c) {
  std::vector<int> hits(g.size(), 0);
  for (const auto& p : c.paths) {
    if (p.empty()) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < 0 || p[i] >= g.size() || hits[p[i]]++) return false;
      if (i && !g.has_edge(p[i - 1], p[i])) return false;
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

/// A path in g visiting vertices in order, each at most once.
inline bool verify_path(const Graph& g, const std::vector<int>& path) {
  std::vector<char> seen(g.size(), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] < 0 || path[i] >= g.size() || seen[path[i]]) return false;
    seen[path[i]] = 1;
    if (i && !g.has_edge(path[i - 1], path[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Bounds
// ---------------------------------------------------------------------------

/// Greedy clique, highest degree first.
inline std::vector<int> greedy_clique(const Graph& g) {
  std::vector<int> order(g.size());
  for (int v = 0; v < g.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> clique;
  for (int v : order)
    if (std::all_of(clique.begin(), clique.end(), [&](int u) { return g.has_edge(u, v); }))
      clique.push_back(v);
  return clique;
}

/// max(2(w-1), Delta+1) with w a greedy clique size; both are standard lower bounds.
inline int lambda_lower_bound_graph(const Graph& g) {
  if (g.size() == 0) return 0;
  const int w = static_cast<int>(greedy_clique(g).size());
  int delta = 0;
  for (int v = 0; v < g.size(); ++v) delta = std::max(delta, g.degree(v));
  return std::max(2 * (w - 1), delta > 0 ? delta + 1 : 0);
}

/// First-fit labeling in decreasing-degree order. Always valid; gives an upper bound.
inline Labeling greedy_labeling(const Graph& g) {
  const int n = g.size();
  const auto dist = all_pairs_distances(g);
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  Labeling f;
  f.labels.assign(n, -1);
  for (int v : order) {
    for (int l = 0;; ++l) {
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        if (f.labels[u] < 0 || u == v) continue;
        if (dist[u][v] == 1) ok = std::abs(f.labels[u] - l) >= kSeparationAdjacent;
        else if (dist[u][v] == 2) ok = f.labels[u] != l;
      }
      if (ok) {
        f.labels[v] = l;
        break;
      }
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Exact solver
// ---------------------------------------------------------------------------

struct SolverOptions {
  double time_budget_seconds = 60.0;
  int dense_table_limit = 20;  // full state table for diameter-<=2 graphs up to this size
};

namespace detail {

struct BudgetExceeded {};

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds))) {}
  void tick() {
    if ((++count_ & 0xFFF) == 0 && std::chrono::steady_clock::now() > end_) throw BudgetExceeded{};
  }

 private:
  std::chrono::steady_clock::time_point end_;
  std::uint64_t count_ = 0;
};

// Labels are assigned in sweeps: label slot t receives a set S_t of unassigned vertices that are
// pairwise at distance >= 3 and not adjacent to anything in S_{t-1}. The state after a slot is
// (assigned set, S_t); the value of a state is the least number of further slots needed.
class LabelSweepSolver {
 public:
  LabelSweepSolver(const Graph& g, Deadline& deadline) : n_(g.size()), deadline_(deadline) {
    full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    adj_.resize(n_);
    near_.resize(n_);
    for (int v = 0; v < n_; ++v) adj_[v] = g.row_mask(v);
    for (int v = 0; v < n_; ++v) {
      std::uint64_t m = adj_[v];
      for (std::uint64_t b = adj_[v]; b; b &= b - 1) m |= adj_[std::countr_zero(b)];
      near_[v] = m & ~(std::uint64_t{1} << v);
    }
    diameter_two_ = true;
    for (int v = 0; v < n_; ++v)
      if ((near_[v] | (std::uint64_t{1} << v)) != full_) diameter_two_ = false;
  }

  bool diameter_two() const { return diameter_two_; }

  /// Returns the optimal labeling (labels are slot indices).
  Labeling solve_sparse() {
    if (n_ == 0) return {};
    const int slots = value(0, 0);
    Labeling f;
    f.labels.assign(n_, -1);
    std::uint64_t mask = 0, prev = 0;
    for (int t = 0; t < slots; ++t) {
      const int want = slots - t;
      bool moved = false;
      for_each_choice(mask, prev, [&](std::uint64_t s) {
        if (moved) return;
        const std::uint64_t next = mask | s;
        const int rest = next == full_ ? 0 : value(next, s);
        if (1 + rest == want) {
          for (std::uint64_t b = s; b; b &= b - 1) f.labels[std::countr_zero(b)] = t;
          mask = next;
          prev = s;
          moved = true;
        }
      });
      if (!moved) {  // the gap slot
        prev = 0;
      }
    }
    return f;
  }

  /// Full table over (assigned set, last vertex); needs diameter <= 2 so each slot holds <= 1 vertex.
  Labeling solve_dense() {
    if (n_ == 0) return {};
    const int stride = n_ + 1;
    const int none = n_;
    const std::size_t states = (std::size_t{1} << n_) * stride;
    std::vector<std::uint8_t> f(states, 0);
    auto at = [&](std::uint64_t mask, int prev) -> std::uint8_t& { return f[mask * stride + prev]; };
    for (std::uint64_t mask = full_; mask-- > 0;) {
      deadline_.tick();
      const std::uint64_t free = full_ & ~mask;
      int best_none = 255;
      for (std::uint64_t b = free; b; b &= b - 1) {
        const int v = std::countr_zero(b);
        const std::uint64_t next = mask | (std::uint64_t{1} << v);
        const int rest = next == full_ ? 0 : at(next, v);
        best_none = std::min(best_none, 1 + rest);
      }
      at(mask, none) = static_cast<std::uint8_t>(best_none);
      for (std::uint64_t pb = mask; pb; pb &= pb - 1) {
        const int prev = std::countr_zero(pb);
        int best = 1 + best_none;  // gap slot
        for (std::uint64_t b = free & ~adj_[prev]; b; b &= b - 1) {
          const int v = std::countr_zero(b);
          const std::uint64_t next = mask | (std::uint64_t{1} << v);
          const int rest = next == full_ ? 0 : at(next, v);
          best = std::min(best, 1 + rest);
        }
        at(mask, prev) = static_cast<std::uint8_t>(best);
      }
    }
    Labeling out;
    out.labels.assign(n_, -1);
    std::uint64_t mask = 0;
    int prev = none;
    int t = 0;
    while (mask != full_) {
      const int want = at(mask, prev);
      const std::uint64_t allowed = prev == none ? full_ & ~mask : full_ & ~mask & ~adj_[prev];
      bool moved = false;
      for (std::uint64_t b = allowed; b && !moved; b &= b - 1) {
        const int v = std::countr_zero(b);
        const std::uint64_t next = mask | (std::uint64_t{1} << v);
        const int rest = next == full_ ? 0 : at(next, v);
        if (1 + rest == want) {
          out.labels[v] = t;
          mask = next;
          prev = v;
          moved = true;
        }
      }
      if (!moved) prev = none;
      ++t;
    }
    return out;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ull ^ k.second);
    }
  };

  int n_;
  Deadline& deadline_;
  std::uint64_t full_ = 0;
  std::vector<std::uint64_t> adj_, near_;
  bool diameter_two_ = false;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, int, KeyHash> memo_;

  // Calls fn on every admissible non-empty S, in a fixed order.
  template <class Fn>
  void for_each_choice(std::uint64_t mask, std::uint64_t prev, Fn&& fn) {
    std::uint64_t blocked = 0;
    for (std::uint64_t b = prev; b; b &= b - 1) blocked |= adj_[std::countr_zero(b)];
    const std::uint64_t cand = full_ & ~mask & ~blocked;
    enumerate(cand, 0, fn);
  }

  template <class Fn>
  void enumerate(std::uint64_t cand, std::uint64_t chosen, Fn& fn) {
    if (!cand) {
      if (chosen) fn(chosen);
      return;
    }
    deadline_.tick();
    const int v = std::countr_zero(cand);
    const std::uint64_t bit = std::uint64_t{1} << v;
    enumerate(cand & ~bit & ~near_[v], chosen | bit, fn);
    enumerate(cand & ~bit, chosen, fn);
  }

  int value(std::uint64_t mask, std::uint64_t prev) {
    const auto key = std::make_pair(mask, prev);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int best = std::numeric_limits<int>::max();
    for_each_choice(mask, prev, [&](std::uint64_t s) {
      const std::uint64_t next = mask | s;
      best = std::min(best, 1 + (next == full_ ? 0 : value(next, s)));
    });
    if (prev) best = std::min(best, 1 + value(mask, 0));
    memo_.emplace(key, best);
    return best;
  }
};

}  // namespace detail

/// Exact lambda number. Returns a BoundsOnly certificate (with a valid greedy labeling) when
/// the time budget runs out or the graph is too large for the search; never a wrong exact value.
inline LambdaCertificate lambda_exact(const Graph& g, const SolverOptions& opt = {}) {
  LambdaCertificate cert;
  const int n = g.size();
  cert.lower = lambda_lower_bound_graph(g);
  Labeling greedy = greedy_labeling(g);
  cert.upper = greedy.span();
  cert.notes.push_back("lower bound max(2(w-1), Delta+1) = " + std::to_string(cert.lower));
  auto bounds_only = [&](const std::string& why) {
    cert.method = Method::BoundsOnly;
    cert.value = cert.upper;
    cert.labeling = greedy;
    cert.notes.push_back(why);
    return cert;
  };
  if (n > 64) return bounds_only("exact search supports at most 64 vertices");
  detail::Deadline deadline(opt.time_budget_seconds);
  try {
    detail::LabelSweepSolver solver(g, deadline);
    Labeling f = (solver.diameter_two() && n <= opt.dense_table_limit) ? solver.solve_dense()
                                                                       : solver.solve_sparse();
    f.normalize();
    if (!verify_labeling(g, f)) throw VerificationError("exact solver produced an invalid labeling");
    cert.method = Method::Exact;
    cert.value = f.span();
    cert.lower = cert.upper = cert.value;
    cert.labeling = std::move(f);
    return cert;
  } catch (const detail::BudgetExceeded&) {
    return bounds_only("time budget exhausted");
  }
}

}  // namespace epglab
