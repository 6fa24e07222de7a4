#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "epglab/epg.hpp"
#include "epglab/error.hpp"
#include "epglab/finite_group.hpp"
#include "epglab/graph.hpp"
#include "epglab/group_structure.hpp"
#include "epglab/labeling.hpp"
#include "epglab/number_theory.hpp"
#include "epglab/path_cover.hpp"

namespace epglab {

inline constexpr long long kMultipartiteNodeLimit = 2'000'000;

// ---------------------------------------------------------------------------
// Bounds from the maximal cyclic subgroups
// ---------------------------------------------------------------------------

/// lambda(EPG(G)) >= |G|.
inline int lambda_lower_bound(const FiniteGroup& g) { return g.order(); }

enum class CoverCase { Case11, Case12, Case2 };

inline const char* to_string(CoverCase c) {
  switch (c) {
    case CoverCase::Case11: return "m1 = m2";
    case CoverCase::Case12: return "m1 > m2, m1 <= sum";
    case CoverCase::Case2: return "m1 > sum";
  }
  return "?";
}

inline CoverCase cover_case(const MaximalCyclicFamily& fam) {
  const int rest = std::accumulate(fam.m.begin() + 1, fam.m.end(), 0);
  if (fam.m[0] > rest) return CoverCase::Case2;
  return fam.m[0] == fam.m[1] ? CoverCase::Case11 : CoverCase::Case12;
}

/// 2n - |G_M| - 1 when m_1 <= m_2 + ... + m_r, else 2(n - m_1 - 1).
inline int lambda_upper_bound_maximal(const FiniteGroup& g, const MaximalCyclicFamily& fam) {
  if (fam.size() < 2) throw NotApplicableError("the maximal-cyclic upper bound needs a non-cyclic group");
  const int n = g.order();
  if (cover_case(fam) == CoverCase::Case2) return 2 * (n - fam.m[0] - 1);
  return 2 * n - static_cast<int>(fam.gen_union.size()) - 1;
}

inline int lambda_upper_bound_maximal(const FiniteGroup& g) {
  return lambda_upper_bound_maximal(g, maximal_cyclic_subgroups(g));
}

// ---------------------------------------------------------------------------
// Multipartite paths
// ---------------------------------------------------------------------------

namespace detail {

// Path through the union of `classes` such that consecutive vertices lie in different classes.
// Depth-first over class choices, largest remaining class first (never the previous class), ties
// by class index; elements inside a class are used in the given order.
class MultipartitePath {
 public:
  MultipartitePath(const std::vector<std::vector<Element>>& classes, std::optional<Element> start,
                   std::optional<Element> end, long long node_limit)
      : classes_(classes), node_limit_(node_limit) {
    const int c = static_cast<int>(classes.size());
    cursor_.assign(c, 0);
    remaining_.assign(c, 0);
    for (int i = 0; i < c; ++i)
      for (Element x : classes[i]) {
        if ((start && x == *start) || (end && x == *end)) continue;
        ++remaining_[i];
      }
    start_class_ = start ? class_of(*start) : -1;
    end_class_ = end ? class_of(*end) : -1;
    start_ = start;
    end_ = end;
    valid_ = (!start || start_class_ >= 0) && (!end || end_class_ >= 0) && !(start && end && *start == *end);
  }

  std::optional<std::vector<Element>> run() {
    if (!valid_) return std::nullopt;
    std::vector<int> seq;
    if (!dfs(start_class_, seq)) return std::nullopt;
    std::vector<Element> out;
    if (start_) out.push_back(*start_);
    std::vector<std::size_t> pos(classes_.size(), 0);
    for (int c : seq) {
      while (is_reserved(classes_[c][pos[c]])) ++pos[c];
      out.push_back(classes_[c][pos[c]++]);
    }
    if (end_) out.push_back(*end_);
    return out;
  }

 private:
  const std::vector<std::vector<Element>>& classes_;
  long long node_limit_;
  long long nodes_ = 0;
  std::vector<std::size_t> cursor_;
  std::vector<int> remaining_;
  std::optional<Element> start_, end_;
  int start_class_ = -1, end_class_ = -1;
  bool valid_ = true;

  int class_of(Element x) const {
    for (std::size_t i = 0; i < classes_.size(); ++i)
      if (std::find(classes_[i].begin(), classes_[i].end(), x) != classes_[i].end()) return static_cast<int>(i);
    return -1;
  }
  bool is_reserved(Element x) const { return (start_ && x == *start_) || (end_ && x == *end_); }

  // Necessary condition for arranging the remaining multiset between `prev` and the end class.
  bool feasible(int prev) const {
    int total = 0, best = -1;
    for (std::size_t i = 0; i < remaining_.size(); ++i) {
      total += remaining_[i];
      if (best < 0 || remaining_[i] > remaining_[best]) best = static_cast<int>(i);
    }
    if (total == 0) return end_class_ < 0 || end_class_ != prev || prev < 0;
    const int m = remaining_[best];
    int slack = total - m + 1;
    for (std::size_t i = 0; i < remaining_.size(); ++i) {
      if (remaining_[i] != m) continue;
      const int s = total - m + 1 - (static_cast<int>(i) == prev) - (static_cast<int>(i) == end_class_);
      slack = std::min(slack, s);
    }
    return m <= slack;
  }

  bool dfs(int prev, std::vector<int>& seq) {
    if (++nodes_ > node_limit_) return false;
    int total = 0;
    for (int r : remaining_) total += r;
    if (total == 0) return end_class_ < 0 || prev < 0 || end_class_ != prev;
    std::vector<int> order;
    for (std::size_t i = 0; i < remaining_.size(); ++i)
      if (remaining_[i] > 0 && static_cast<int>(i) != prev) order.push_back(static_cast<int>(i));
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return remaining_[a] > remaining_[b]; });
    for (int c : order) {
      --remaining_[c];
      seq.push_back(c);
      if (feasible(c) && dfs(c, seq)) return true;
      seq.pop_back();
      ++remaining_[c];
    }
    return false;
  }
};

}  // namespace detail

inline std::optional<std::vector<Element>> multipartite_path(const std::vector<std::vector<Element>>& classes,
                                                             std::optional<Element> start = std::nullopt,
                                                             std::optional<Element> end = std::nullopt,
                                                             long long node_limit = kMultipartiteNodeLimit) {
  return detail::MultipartitePath(classes, start, end, node_limit).run();
}

/// Vertices a != b non-adjacent in the enhanced power graph, i.e. adjacent in its complement.
inline bool complement_adjacent(const Graph& epg, Element a, Element b) { return a != b && !epg.has_edge(a, b); }

/// Hamiltonian path of the complement of EPG(G) induced on the elements of order d.
inline std::vector<Element> build_tau_d_path(const FiniteGroup& g, int d) {
  const CyclicClassPartition cls = cyclic_classes(g);
  if (cls.C(d) < 2)
    throw NotApplicableError("tau_" + std::to_string(d) + " has " + std::to_string(cls.C(d)) +
                             " cyclic class(es); a path needs at least 2");
  auto path = multipartite_path(cls.classes_of_order(d));
  if (!path) throw VerificationError("no multipartite path through tau_" + std::to_string(d));
  const Graph epg = enhanced_power_graph(g);
  for (std::size_t i = 1; i < path->size(); ++i)
    if (!complement_adjacent(epg, (*path)[i - 1], (*path)[i]))
      throw VerificationError("tau_d path step " + g.label((*path)[i - 1]) + " -> " + g.label((*path)[i]) +
                              " is not an edge of the complement");
  return *path;
}

// ---------------------------------------------------------------------------
// Order chains
// ---------------------------------------------------------------------------

struct OrderChain {
  std::vector<int> D;      // non-dominating element orders, ascending
  std::vector<int> chain;  // consecutive entries related by divisibility
  int insertions = 0;
  bool used_fallback = false;
};

inline bool divisibility_related(int a, int b) { return b % a == 0 || a % b == 0; }

namespace detail {

inline bool chain_dfs(const std::vector<int>& D, std::vector<char>& used, std::vector<int>& out) {
  if (out.size() == D.size()) return true;
  for (std::size_t i = 0; i < D.size(); ++i) {
    if (used[i] || (!out.empty() && !divisibility_related(out.back(), D[i]))) continue;
    used[i] = 1;
    out.push_back(D[i]);
    if (chain_dfs(D, used, out)) return true;
    out.pop_back();
    used[i] = 0;
  }
  return false;
}

// Scan the sorted orders; at the first adjacent pair unrelated by divisibility move their lcm
// (which lies further right) to sit between them, then continue past it.
inline OrderChain order_chain_from(std::vector<int> D) {
  std::sort(D.begin(), D.end());
  D.erase(std::unique(D.begin(), D.end()), D.end());
  OrderChain oc;
  oc.D = D;
  std::vector<int> L = D;
  const int limit = static_cast<int>(D.size() * D.size()) + 1;
  bool ok = true;
  for (std::size_t i = 0; i + 1 < L.size();) {
    if (divisibility_related(L[i], L[i + 1])) {
      ++i;
      continue;
    }
    const int l = std::lcm(L[i], L[i + 1]);
    auto it = std::find(L.begin() + static_cast<long>(i) + 2, L.end(), l);
    if (it == L.end() || ++oc.insertions > limit) {
      ok = false;
      break;
    }
    L.erase(it);
    L.insert(L.begin() + static_cast<long>(i) + 1, l);
    ++i;
  }
  if (ok) {
    oc.chain = std::move(L);
    return oc;
  }
  std::vector<char> used(D.size(), 0);
  std::vector<int> out;
  if (!chain_dfs(D, used, out)) throw VerificationError("no divisibility chain through the orders");
  oc.chain = std::move(out);
  oc.used_fallback = true;
  return oc;
}

}  // namespace detail

/// Divisibility chain through the orders of the non-dominating elements of a Form1 group.
inline OrderChain order_chain(const FiniteGroup& g, const StructureReport& report) {
  if (report.form != NilpotentForm::Form1) throw NotApplicableError("order_chain needs a Form1 group");
  std::set<int> D;
  for (Element x = 0; x < g.order(); ++x)
    if (report.components.proj_gprime[x] != 0) D.insert(g.elt_order(x));
  return detail::order_chain_from({D.begin(), D.end()});
}

inline OrderChain order_chain(const FiniteGroup& g) { return order_chain(g, classify_structure(g)); }

// ---------------------------------------------------------------------------
// Hamiltonian path on the non-dominating vertices
// ---------------------------------------------------------------------------

struct ConstructionPlan {
  std::vector<Element> dom;
  std::vector<Element> s_prime;        // nontrivial G' coordinate
  std::vector<Element> s_doubleprime;  // the rest of the non-dominating vertices
  std::string case_tag;
  std::vector<std::string> notes;
};

namespace detail {

struct Context {
  const FiniteGroup& g;
  const StructureReport& report;
  const CyclicClassPartition cls;
  const Graph epg;

  Context(const FiniteGroup& group, const StructureReport& r)
      : g(group), report(r), cls(cyclic_classes(group)), epg(enhanced_power_graph(group)) {}

  bool adj(Element a, Element b) const { return complement_adjacent(epg, a, b); }
};

// Chains multipartite blocks. With `divisibility` set, a link with beta_i | beta_{i+1} fixes the next
// start first and picks an end of block i non-adjacent (in EPG) to it; otherwise the end of block
// i is free and the next start is the first partner in index order. `last_end_ok`, when given,
// filters the end of the last block.
inline std::optional<std::vector<Element>> chain_blocks(const Context& ctx,
                                                        const std::vector<std::vector<std::vector<Element>>>& blocks,
                                                        const std::vector<int>& orders, bool divisibility,
                                                        const std::function<bool(Element)>& last_end_ok,
                                                        const std::function<bool(Element, Element)>& partner) {
  std::vector<Element> out;
  std::optional<Element> start;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& classes = blocks[i];
    std::vector<Element> members;
    for (const auto& c : classes) members.insert(members.end(), c.begin(), c.end());
    std::sort(members.begin(), members.end());
    const bool last = i + 1 == blocks.size();
    std::optional<std::vector<Element>> path;
    std::optional<Element> next_start;
    auto try_end = [&](Element e) {
      if (start && e == *start && members.size() > 1) return false;
      path = members.size() == 1 ? std::optional<std::vector<Element>>(members)
                                 : multipartite_path(classes, start, e);
      return path.has_value();
    };
    if (last) {
      if (last_end_ok) {
        for (Element e : members)
          if (last_end_ok(e) && try_end(e)) break;
      } else {
        path = multipartite_path(classes, start, std::nullopt);
      }
    } else if (divisibility && orders[i + 1] % orders[i] == 0) {
      std::vector<Element> next_members;
      for (const auto& c : blocks[i + 1]) next_members.insert(next_members.end(), c.begin(), c.end());
      std::sort(next_members.begin(), next_members.end());
      for (Element s : next_members) {
        for (Element e : members)
          if (ctx.adj(e, s) && try_end(e)) break;
        if (path) {
          next_start = s;
          break;
        }
      }
    } else {
      path = multipartite_path(classes, start, std::nullopt);
      std::vector<Element> next_members;
      for (const auto& c : blocks[i + 1]) next_members.insert(next_members.end(), c.begin(), c.end());
      std::sort(next_members.begin(), next_members.end());
      if (path) {
        for (Element s : next_members)
          if (partner(path->back(), s)) {
            next_start = s;
            break;
          }
      }
      // The free end may have no partner; retry with explicit ends.
      if (path && !next_start) {
        path.reset();
        for (Element e : members) {
          for (Element s : next_members)
            if (partner(e, s) && try_end(e)) {
              next_start = s;
              break;
            }
          if (next_start) break;
        }
      }
    }
    if (!path || (!last && !next_start)) return std::nullopt;
    out.insert(out.end(), path->begin(), path->end());
    start = next_start;
  }
  return out;
}

inline std::vector<std::vector<std::vector<Element>>> blocks_for(const Context& ctx, const std::vector<int>& orders) {
  std::vector<std::vector<std::vector<Element>>> blocks;
  for (int d : orders) blocks.push_back(ctx.cls.classes_of_order(d));
  return blocks;
}

// Sequence of P coordinates for one round of the maximal-class constructions. Returns the
// positions of xy and x^2 y for the swap fix-up.
struct MaximalClassRound {
  std::vector<Element> seq;
  std::size_t pos_xy = 0, pos_x2y = 0;
};

inline MaximalClassRound maximal_class_round(const Context& ctx, NilpotentForm form, int k) {
  const FiniteGroup& g = ctx.g;
  const auto& two = ctx.report.components.two;
  Element x = -1;
  for (Element a : two)
    if (g.elt_order(a) == (1 << k)) {
      x = a;
      break;
    }
  const Subgroup hx = cyclic_subgroup(g, x);
  Element y = -1;
  for (Element a : two)
    if (!hx.contains(a) && (form == NilpotentForm::Form3 || g.elt_order(a) == 2)) {
      y = a;
      break;
    }
  if (x < 0 || y < 0) throw VerificationError("could not locate the generators x, y of the 2-Sylow subgroup");
  auto X = [&](int i) { return g.pow(x, ((i % (1 << k)) + (1 << k)) % (1 << k)); };
  auto XY = [&](int i) { return g.mul(X(i), y); };
  MaximalClassRound r;
  const int top = 1 << k;
  if (form == NilpotentForm::Form4) {
    for (int i = 1; i < top; ++i) {
      r.seq.push_back(XY(i));
      r.seq.push_back(X(i));
    }
    r.seq.push_back(y);
  } else if (form == NilpotentForm::Form3) {
    const int half = top / 2;
    for (int i = 1; i < half; ++i) {
      r.seq.push_back(XY(i));
      r.seq.push_back(X(i));
    }
    r.seq.push_back(XY(half));
    for (int i = half + 1; i < top; ++i) {
      r.seq.push_back(X(i));
      r.seq.push_back(XY(i));
    }
    r.seq.push_back(y);
  } else {  // Form5
    for (int i = 1; i < top; i += 2) {
      r.seq.push_back(XY(i));
      r.seq.push_back(X(i));
    }
    r.seq.push_back(y);
    for (int j = 1; j < top / 2; ++j) {
      r.seq.push_back(XY(2 * j));
      r.seq.push_back(X(2 * j));
    }
  }
  const Element xy = XY(1), x2y = XY(2);
  r.pos_xy = static_cast<std::size_t>(std::find(r.seq.begin(), r.seq.end(), xy) - r.seq.begin());
  r.pos_x2y = static_cast<std::size_t>(std::find(r.seq.begin(), r.seq.end(), x2y) - r.seq.begin());
  return r;
}

// P coordinates for one round when P is not of maximal class: levels of order 2^k down to 2,
// each a round-robin over its cyclic classes, with the class order chosen so that every junction
// is an edge of the complement.
inline std::optional<std::vector<Element>> non_maximal_round(const Context& ctx, int k,
                                                             std::optional<Element> prev_end) {
  const FiniteGroup& g = ctx.g;
  const auto& proj_two = ctx.report.components.proj_two;
  std::vector<Element> seq;
  std::optional<Element> round_start;
  for (int j = k; j >= 1; --j) {
    std::vector<std::vector<Element>> level;
    for (const auto& c : ctx.cls.classes)
      if (g.elt_order(c.front()) == (1 << j) && proj_two[c.front()] == c.front()) level.push_back(c);
    if (level.size() < 2) return std::nullopt;
    const std::optional<Element> before = seq.empty() ? prev_end : std::optional<Element>(seq.back());
    std::size_t first = 0;
    while (first < level.size() && before && !ctx.adj(*before, level[first].front())) ++first;
    if (first == level.size()) return std::nullopt;
    std::vector<std::vector<Element>> ordered{level[first]};
    for (std::size_t i = 0; i < level.size(); ++i)
      if (i != first) ordered.push_back(level[i]);
    if (j == 1 && k > 1) {
      // The last involution must also lead back into the next round's first vertex.
      const Element head = seq.front();
      std::size_t last = ordered.size();
      for (std::size_t i = ordered.size(); i-- > 1;)
        if (ctx.adj(ordered[i].front(), head)) {
          last = i;
          break;
        }
      if (last == ordered.size()) return std::nullopt;
      std::rotate(ordered.begin() + static_cast<long>(last), ordered.begin() + static_cast<long>(last) + 1,
                  ordered.end());
    }
    const std::size_t size = ordered.front().size();
    for (std::size_t q = 0; q < size; ++q)
      for (const auto& c : ordered) seq.push_back(c[q]);
    if (!round_start) round_start = seq.front();
  }
  return seq;
}

inline bool valid_path(const Context& ctx, const std::vector<Element>& p) {
  for (std::size_t i = 1; i < p.size(); ++i)
    if (!ctx.adj(p[i - 1], p[i])) return false;
  return true;
}

// H'' over S'' = {(e, b, z)}: one round of P coordinates per element z of Z_n.
inline std::optional<std::vector<Element>> build_hpp(const Context& ctx, std::optional<Element> h_end,
                                                     std::vector<std::string>& notes) {
  const FiniteGroup& g = ctx.g;
  const auto& c = ctx.report.components;
  const int k = c.two_exponent_log;
  const NilpotentForm form = ctx.report.form;
  auto assemble = [&](const std::vector<std::vector<Element>>& rounds) {
    std::vector<Element> out;
    for (std::size_t r = 0; r < rounds.size(); ++r)
      for (Element b : rounds[r]) out.push_back(g.mul(b, c.zn[r]));
    return out;
  };
  if (form == NilpotentForm::Form2) {
    auto round = non_maximal_round(ctx, k, h_end);
    if (!round) return std::nullopt;
    auto path = assemble(std::vector<std::vector<Element>>(c.zn.size(), *round));
    if (!valid_path(ctx, path) || (h_end && !ctx.adj(*h_end, path.front()))) return std::nullopt;
    return path;
  }
  const MaximalClassRound base = maximal_class_round(ctx, form, k);
  std::vector<std::vector<Element>> rounds(c.zn.size(), base.seq);
  auto path = assemble(rounds);
  const bool swappable = (form == NilpotentForm::Form3 && k == 2) || (form == NilpotentForm::Form4 && k == 1);
  if (h_end && !ctx.adj(*h_end, path.front()) && swappable) {
    std::swap(rounds[0][base.pos_xy], rounds[0][base.pos_x2y]);
    notes.push_back("interchanged xy and x^2y in the first round");
    path = assemble(rounds);
    if (!valid_path(ctx, path)) {
      for (auto& r : rounds) r = rounds[0];
      notes.push_back("interchanged xy and x^2y in every round");
      path = assemble(rounds);
    }
  }
  if (!valid_path(ctx, path) || (h_end && !ctx.adj(*h_end, path.front()))) return std::nullopt;
  return path;
}

inline std::vector<Element> sorted_union(const std::vector<std::vector<std::vector<Element>>>& blocks) {
  std::vector<Element> out;
  for (const auto& b : blocks)
    for (const auto& c : b) out.insert(out.end(), c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Hamiltonian path of the complement of EPG(G) induced on G \ Dom, assembled block by block
/// and verified edge by edge before it is returned.
inline std::vector<Element> build_nondominating_hamiltonian_path(const FiniteGroup& g, const StructureReport& report,
                                                                 ConstructionPlan* plan_out = nullptr) {
  const bool nilpotent_form = report.is_nilpotent && report.form != NilpotentForm::Cyclic &&
                              report.form != NilpotentForm::NotNilpotent;
  const bool simple = report.is_simple && !report.is_cyclic;
  if (!nilpotent_form && !simple)
    throw NotApplicableError("the constructive path needs a non-cyclic nilpotent or non-cyclic simple group");
  detail::Context ctx(g, report);
  ConstructionPlan plan;
  std::vector<Element> path;
  auto partner = [&](Element a, Element b) { return ctx.adj(a, b); };

  if (simple) {
    plan.case_tag = "simple";
    plan.dom = dominating_vertices(ctx.epg);
    if (plan.dom != std::vector<Element>{0}) throw VerificationError("a non-cyclic simple group should have Dom = {e}");
    std::vector<int> orders(ctx.cls.pi.begin(), ctx.cls.pi.end());
    auto non_cyclic = [&](Element a, Element b) { return !generates_cyclic(g, a, b); };
    auto p = detail::chain_blocks(ctx, detail::blocks_for(ctx, orders), orders, false, {}, non_cyclic);
    if (!p) throw VerificationError("tau_d blocks could not be chained");
    path = std::move(*p);
    plan.s_prime = detail::sorted_union(detail::blocks_for(ctx, orders));
  } else {
    plan.dom = dominating_vertices_formula(g, report);
    const auto& c = report.components;
    std::set<int> D;
    for (Element x = 0; x < g.order(); ++x) {
      if (c.proj_gprime[x] != 0) {
        plan.s_prime.push_back(x);
        D.insert(g.elt_order(x));
      } else if (!std::binary_search(plan.dom.begin(), plan.dom.end(), x)) {
        plan.s_doubleprime.push_back(x);
      }
    }
    plan.case_tag = to_string(report.form);
    std::optional<OrderChain> chain;
    if (!D.empty()) {
      chain = detail::order_chain_from({D.begin(), D.end()});
      if (chain->used_fallback) plan.notes.push_back("order chain from divisibility search");
      if (report.form != NilpotentForm::Form1) {
        // Prefer a chain ending at an order with full 2-part, so the last vertex has o(y') = 2^k.
        const int full = 1 << c.two_exponent_log;
        auto full_two = [&](int d) { return prime_part(d, 2) == full; };
        if (!full_two(chain->chain.back()) && full_two(chain->chain.front()))
          std::reverse(chain->chain.begin(), chain->chain.end());
      }
    }
    if (report.form == NilpotentForm::Form1) {
      auto p = detail::chain_blocks(ctx, detail::blocks_for(ctx, chain->chain), chain->chain, true, {}, partner);
      if (!p) throw VerificationError("tau_beta blocks could not be chained along the order chain");
      path = std::move(*p);
    } else {
      std::optional<std::vector<Element>> hpp;
      if (chain) {
        auto end_ok = [&](Element e) {
          hpp = detail::build_hpp(ctx, e, plan.notes);
          return hpp.has_value();
        };
        auto p = detail::chain_blocks(ctx, detail::blocks_for(ctx, chain->chain), chain->chain, true, end_ok, partner);
        if (!p || !hpp) throw VerificationError("the S' path could not be joined to the S'' path");
        path = std::move(*p);
      } else {
        hpp = detail::build_hpp(ctx, std::nullopt, plan.notes);
        if (!hpp) throw VerificationError("the S'' path failed verification");
      }
      path.insert(path.end(), hpp->begin(), hpp->end());
    }
  }

  // Independent check: a Hamiltonian path of the complement on exactly G \ Dom.
  std::vector<Element> expected;
  for (Element x = 0; x < g.order(); ++x)
    if (!std::binary_search(plan.dom.begin(), plan.dom.end(), x)) expected.push_back(x);
  std::vector<Element> sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != expected) throw VerificationError("constructed path does not cover G \\ Dom exactly once");
  for (std::size_t i = 1; i < path.size(); ++i)
    if (!ctx.adj(path[i - 1], path[i]))
      throw VerificationError("constructed path step " + g.label(path[i - 1]) + " -> " + g.label(path[i]) +
                              " is an edge of EPG");
  if (plan_out) *plan_out = std::move(plan);
  return path;
}

// ---------------------------------------------------------------------------
// Path cover of the complement from the maximal cyclic subgroups
// ---------------------------------------------------------------------------

struct CoverConstruction {
  PathCovering cover;
  CoverCase which = CoverCase::Case11;
  int bound = 0;  // n - |G_M| + 1, or n - 2 m_1
};

/// Runs the construction for an explicit case; exposed so every branch can be exercised.
inline CoverConstruction build_path_cover_case(const FiniteGroup& g, const MaximalCyclicFamily& fam, CoverCase which) {
  if (fam.size() < 2) throw NotApplicableError("the cover construction needs a non-cyclic group");
  const int n = g.order();
  const Graph epg = enhanced_power_graph(g);
  CoverConstruction out;
  out.which = which;
  std::vector<Element> path;
  std::vector<char> used(n, 0);
  const int r = fam.size();
  if (which == CoverCase::Case11) {
    for (int i = 0; i < fam.m[0]; ++i)
      for (int j = 0; j < r; ++j)
        if (i < fam.m[j]) path.push_back(fam.gen_sets[j][i]);
    out.bound = n - static_cast<int>(fam.gen_union.size()) + 1;
  } else if (which == CoverCase::Case12) {
    const int need = fam.m[0] - fam.m[1];
    std::vector<Element> a(fam.gen_sets[0].begin(), fam.gen_sets[0].begin() + need), b;
    std::vector<std::vector<Element>> rest(fam.gen_sets.begin(), fam.gen_sets.end());
    rest[0].erase(rest[0].begin(), rest[0].begin() + need);
    for (int j = r - 1; j >= 1 && static_cast<int>(b.size()) < need; --j)
      while (!rest[j].empty() && static_cast<int>(b.size()) < need) {
        b.push_back(rest[j].front());
        rest[j].erase(rest[j].begin());
      }
    if (static_cast<int>(b.size()) < need) throw VerificationError("not enough generators outside M_1 for A_2");
    for (int i = 0; i < need; ++i) {
      path.push_back(a[i]);
      path.push_back(b[i]);
    }
    std::vector<std::vector<Element>> classes;
    for (auto& c : rest)
      if (!c.empty()) classes.push_back(c);
    auto tail = multipartite_path(classes, rest[0].front(), std::nullopt);
    if (!tail) throw VerificationError("no multipartite path through A_3 starting in M_1");
    path.insert(path.end(), tail->begin(), tail->end());
    out.bound = n - static_cast<int>(fam.gen_union.size()) + 1;
  } else {
    const int m1 = fam.m[0];
    std::vector<Element> ys;
    for (Element v = 0; v < n && static_cast<int>(ys.size()) < m1 + 1; ++v)
      if (!fam.subgroups[0].contains(v)) ys.push_back(v);
    if (static_cast<int>(ys.size()) < m1 + 1) throw VerificationError("too few elements outside M_1");
    for (int i = 0; i < m1; ++i) {
      path.push_back(ys[i]);
      path.push_back(fam.gen_sets[0][i]);
    }
    path.push_back(ys[m1]);
    out.bound = n - 2 * m1;
  }
  for (Element v : path) used[v] = 1;
  out.cover.paths.push_back(path);
  for (Element v = 0; v < n; ++v)
    if (!used[v]) out.cover.paths.push_back({v});
  if (!verify_path_covering(complement(epg), out.cover))
    throw VerificationError(std::string("cover construction (") + to_string(which) + ") is not a path covering");
  return out;
}

inline CoverConstruction build_path_cover_construction(const FiniteGroup& g) {
  const MaximalCyclicFamily fam = maximal_cyclic_subgroups(g);
  if (fam.size() < 2) throw NotApplicableError("the cover construction needs a non-cyclic group");
  return build_path_cover_case(g, fam, cover_case(fam));
}

// ---------------------------------------------------------------------------
// Closed form
// ---------------------------------------------------------------------------

/// Closed-form lambda with a verified witness, or nullopt when no closed form applies. A failed
/// construction downgrades the result to BoundsOnly; it never yields an unverified value.
inline std::optional<LambdaCertificate> lambda_closed_form(const FiniteGroup& g, const StructureReport& report) {
  const int n = g.order();
  LambdaCertificate cert;
  cert.method = Method::Theorem;
  const Graph epg = enhanced_power_graph(g);
  auto finish = [&](PathCovering cover, const std::string& note) {
    const Graph comp = complement(epg);
    if (!verify_path_covering(comp, cover)) throw VerificationError("closed-form covering is invalid");
    Labeling f = labeling_from_complement_cover(n, cover);
    if (!verify_labeling(epg, f)) throw VerificationError("closed-form labeling is invalid");
    cert.value = cert.lower = cert.upper = f.span();
    cert.labeling = std::move(f);
    cert.cover = std::move(cover);
    cert.notes.push_back(note);
    return cert;
  };
  if (report.is_cyclic) {
    PathCovering cover;
    for (Element v = 0; v < n; ++v) cover.paths.push_back({v});
    cert.notes.push_back("EPG of a cyclic group is complete");
    return finish(std::move(cover), "lambda = 2n - 2");
  }
  const bool nilpotent_form = report.is_nilpotent && report.form != NilpotentForm::NotNilpotent;
  if (!nilpotent_form && !report.is_simple) return std::nullopt;
  try {
    ConstructionPlan plan;
    std::vector<Element> path = build_nondominating_hamiltonian_path(g, report, &plan);
    for (Element d : plan.dom)
      if (epg.degree(d) != n - 1) throw VerificationError("vertex " + g.label(d) + " is not dominating");
    PathCovering cover;
    for (Element d : plan.dom) cover.paths.push_back({d});
    cover.paths.push_back(std::move(path));
    cert.notes = plan.notes;
    if (report.is_simple) {
      cert.notes.push_back("non-cyclic simple group: Hamiltonian path on G \\ {e}");
    } else {
      cert.notes.push_back(std::string("nilpotent ") + to_string(report.form) + ": lambda = |G| + |Dom| - 1");
      for (const auto& note : report.notes) cert.notes.push_back(note);
    }
    // Dom vertices are isolated in the complement and the rest needs at least one path, so this
    // covering is minimum and lambda = n + c - 2 exactly.
    return finish(std::move(cover), "complement covered by |Dom| singletons and one path: c = " +
                                        std::to_string(plan.dom.size() + 1));
  } catch (const VerificationError& e) {
    LambdaCertificate b;
    b.method = Method::BoundsOnly;
    b.lower = lambda_lower_bound(g);
    b.upper = b.value = lambda_upper_bound_maximal(g);
    b.notes.push_back(std::string("construction failed: ") + e.what());
    return b;
  }
}

inline std::optional<LambdaCertificate> lambda_closed_form(const FiniteGroup& g) {
  return lambda_closed_form(g, classify_structure(g));
}

}  // namespace epglab
