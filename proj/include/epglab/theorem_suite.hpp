#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "epglab/epg.hpp"
#include "epglab/finite_group.hpp"
#include "epglab/group_spec.hpp"
#include "epglab/group_structure.hpp"
#include "epglab/labeling.hpp"
#include "epglab/number_theory.hpp"
#include "epglab/path_cover.hpp"
#include "epglab/random_graphs.hpp"
#include "epglab/theorems.hpp"

namespace epglab {

// ---------------------------------------------------------------------------
// Corpus
// ---------------------------------------------------------------------------

struct CorpusOptions {
  int max_order = 16;
  int family_max_order = 64;  // D, Q and SD 2-groups up to this order are added
};

/// Spec strings of the constructor-reachable groups: Z, D, Q, SD, A4, S4 and their direct
/// products of total order <= max_order, plus the D/Q/SD 2-group families.
inline std::vector<std::string> corpus_specs(const CorpusOptions& opt = {}) {
  struct Atom {
    std::string spec;
    int order;
  };
  std::vector<Atom> atoms;
  for (int n = 1; n <= opt.max_order; ++n) atoms.push_back({"Z" + std::to_string(n), n});
  for (int m = 4; m <= opt.max_order; m += 2) atoms.push_back({"D" + std::to_string(m), m});
  for (int m = 8; m <= opt.max_order; m += 4) atoms.push_back({"Q" + std::to_string(m), m});
  for (int m = 16; m <= opt.max_order; m *= 2) atoms.push_back({"SD" + std::to_string(m), m});
  if (opt.max_order >= 12) atoms.push_back({"Perm[(1 2 3);(1 2)(3 4)]", 12});
  if (opt.max_order >= 24) atoms.push_back({"Perm[(1 2 3 4);(1 2)]", 24});

  std::vector<std::string> out;
  for (const auto& a : atoms) out.push_back(a.spec);
  // Products of two or more non-trivial atoms, factors in atom order (no permutations repeated).
  std::vector<std::size_t> idx;
  auto extend = [&](auto&& self, std::size_t from, int order) -> void {
    if (idx.size() >= 2) {
      std::string s;
      for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? " x " : "") + atoms[idx[i]].spec;
      out.push_back(s);
    }
    for (std::size_t i = from; i < atoms.size(); ++i) {
      if (atoms[i].order < 2 || static_cast<long long>(order) * atoms[i].order > opt.max_order) continue;
      idx.push_back(i);
      self(self, i, order * atoms[i].order);
      idx.pop_back();
    }
  };
  extend(extend, 0, 1);
  for (int m = 4; m <= opt.family_max_order; m *= 2) {
    for (const std::string& s : {"D" + std::to_string(m), "Q" + std::to_string(m), "SD" + std::to_string(m)}) {
      if ((s[0] == 'Q' && m < 8) || (s[0] == 'S' && m < 16)) continue;
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
  }
  return out;
}

inline std::vector<FiniteGroup> build_corpus(const CorpusOptions& opt = {}) {
  std::vector<FiniteGroup> out;
  for (const auto& s : corpus_specs(opt)) out.push_back(build_group(s));
  return out;
}

// ---------------------------------------------------------------------------
// Report
// ---------------------------------------------------------------------------

struct TheoremCheck {
  std::string check;
  std::string group;
  bool pass = false;
  std::string witness;  // supporting data on pass, counterexample on failure
};

struct TheoremReport {
  std::uint64_t seed = 0;
  std::vector<TheoremCheck> checks;
  std::vector<std::string> notes;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.pass; });
  }
  int failures() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const TheoremCheck& c) { return !c.pass; }));
  }
};

enum class SuiteSelection { All, PClass, Maximal, Dominating, Georges };

struct SuiteOptions {
  SuiteSelection selection = SuiteSelection::All;
  std::uint64_t seed = 0;
  int random_samples = 200;
  int random_max_n = 9;
  int exact_limit = 16;       // lambda_exact on EPGs up to this order
  int path_cover_limit = 20;  // exact complement cover up to this order
  double time_budget_seconds = 60.0;
};

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

inline std::string class_table(const CyclicClassPartition& cls) {
  std::ostringstream os;
  bool first = true;
  for (auto [d, c] : cls.count) {
    if (d == 1) continue;
    os << (first ? "" : " ") << "C" << d << "=" << c;
    first = false;
  }
  return os.str();
}

class GroupChecks {
 public:
  GroupChecks(const FiniteGroup& g, const SuiteOptions& opt, TheoremReport& rep)
      : g_(g), opt_(opt), rep_(rep), n_(g.order()), report_(classify_structure(g)), cls_(cyclic_classes(g)),
        fam_(maximal_cyclic_subgroups(g)), epg_(enhanced_power_graph(g)) {}

  void run() {
    const bool all = opt_.selection == SuiteSelection::All;
    if (all) {
      lagrange();
      class_count_sum();
      complete_iff_cyclic();
      power_subgraph();
      simple_cd2();
      cd3();
    }
    if (all || opt_.selection == SuiteSelection::Maximal) {
      maximal_count();
      prime_maximal_intersection();
      if (!report_.is_cyclic) {
        corollary_2n_4();
        bound_sandwich();
        construction_cover();
      }
    }
    if (all || opt_.selection == SuiteSelection::Dominating) dominating_formula();
    if (all || opt_.selection == SuiteSelection::PClass) {
      pgroup_class_congruence();
      pgroup_class_corollary();
    }
    if (all) {
      lower_bound_equality();
      closed_form();
    }
  }

 private:
  const FiniteGroup& g_;
  const SuiteOptions& opt_;
  TheoremReport& rep_;
  int n_;
  StructureReport report_;
  CyclicClassPartition cls_;
  MaximalCyclicFamily fam_;
  Graph epg_;
  std::optional<LambdaCertificate> exact_;
  bool exact_tried_ = false;

  void add(const std::string& check, bool pass, const std::string& witness) {
    rep_.checks.push_back({check, g_.name(), pass, witness});
  }

  const LambdaCertificate* exact() {
    if (!exact_tried_) {
      exact_tried_ = true;
      if (n_ <= opt_.exact_limit) {
        SolverOptions so;
        so.time_budget_seconds = opt_.time_budget_seconds;
        auto c = lambda_exact(epg_, so);
        if (c.is_exact()) exact_ = std::move(c);
      }
    }
    return exact_ ? &*exact_ : nullptr;
  }

  void lagrange() {
    for (Element x = 0; x < n_; ++x)
      if (n_ % g_.elt_order(x)) {
        add("lagrange", false, "o(" + g_.label(x) + ") = " + std::to_string(g_.elt_order(x)) + " does not divide " +
                                   std::to_string(n_));
        return;
      }
    add("lagrange", true, "all element orders divide " + std::to_string(n_));
  }

  void class_count_sum() {
    long long total = 0;
    for (auto [d, c] : cls_.count) total += static_cast<long long>(c) * euler_phi(d);
    const bool ok = total == n_ && n_ % cls_.exponent == 0;
    add("class-count-sum", ok, "sum C_d phi(d) = " + std::to_string(total) + ", exponent " + std::to_string(cls_.exponent));
  }

  void maximal_count() {
    add("maximal-count", fam_.size() != 2, "|M(G)| = " + std::to_string(fam_.size()));
  }

  void prime_maximal_intersection() {
    for (int i = 0; i < fam_.size(); ++i) {
      if (!is_prime(fam_.subgroups[i].order())) continue;
      for (int j = 0; j < fam_.size(); ++j) {
        if (i == j) continue;
        for (Element x : fam_.subgroups[i].members)
          if (x != 0 && fam_.subgroups[j].contains(x)) {
            add("prime-maximal-intersection", false, "element " + g_.label(x) + " lies in two maximal cyclic subgroups");
            return;
          }
      }
    }
    add("prime-maximal-intersection", true, "prime-order maximal cyclic subgroups meet others only in e");
  }

  void complete_iff_cyclic() {
    const bool complete = epg_.edge_count() == static_cast<long long>(n_) * (n_ - 1) / 2;
    add("epg-complete-iff-cyclic", complete == report_.is_cyclic,
        std::string("complete = ") + (complete ? "yes" : "no") + ", cyclic = " + (report_.is_cyclic ? "yes" : "no"));
  }

  void power_subgraph() {
    const Graph pg = power_graph(g_);
    for (auto [u, v] : pg.edges())
      if (!epg_.has_edge(u, v)) {
        add("power-subgraph", false, "power-graph edge " + g_.label(u) + " - " + g_.label(v) + " missing from EPG");
        return;
      }
    add("power-subgraph", true,
        std::to_string(pg.edge_count()) + " of " + std::to_string(epg_.edge_count()) + " EPG edges are power-graph edges");
  }

  void dominating_formula() {
    if (!report_.is_nilpotent || report_.is_cyclic) return;
    const auto formula = dominating_vertices_formula(g_, report_);
    const auto direct = dominating_vertices(epg_);
    add("dominating-formula", formula == direct,
        std::string(to_string(report_.form)) + ": formula |Dom| = " + std::to_string(formula.size()) +
            ", direct |Dom| = " + std::to_string(direct.size()));
  }

  int p_group_exponent_log() const {
    int k = 0;
    for (int o : g_.elt_orders()) k = std::max(k, valuation(o, report_.p));
    return k;
  }

  void pgroup_class_congruence() {
    if (!report_.is_p_group || report_.is_cyclic) return;
    const int p = report_.p;
    if (p == 2 && report_.is_maximal_class) return;
    const int k = p_group_exponent_log();
    const int cp = cls_.C(p);
    bool ok = (cp - 1 - p) % (p * p) == 0;
    std::string w = "C" + std::to_string(p) + " = " + std::to_string(cp) + " = 1 + " + std::to_string(p) + " mod " +
                    std::to_string(p * p);
    long long q = p;
    for (int i = 2; i <= k; ++i) {
      q *= p;
      const int c = cls_.C(static_cast<int>(q));
      ok = ok && c % p == 0;
      w += ", C" + std::to_string(q) + " = " + std::to_string(c);
    }
    if (!ok) w = "violated: " + class_table(cls_);
    add("pgroup-class-congruence", ok, w);
  }

  void pgroup_class_corollary() {
    if (!report_.is_p_group) return;
    const int p = report_.p;
    const int k = p_group_exponent_log();
    bool some_one = false;
    long long q = 1;
    for (int i = 1; i <= k; ++i) {
      q *= p;
      some_one = some_one || cls_.C(static_cast<int>(q)) == 1;
    }
    const bool listed = report_.is_cyclic || (p == 2 && report_.is_maximal_class);
    // D4 = Z2 x Z2 is listed with C2 = 3 and no other order, so it has no C = 1 at all.
    const bool klein = p == 2 && k == 1 && !report_.is_cyclic;
    bool ok = klein ? !some_one : some_one == listed;
    std::string w = class_table(cls_);
    if (p == 2 && report_.is_maximal_class && !report_.is_cyclic) {
      const NilpotentForm f = classify_two_group(g_);
      std::vector<int> expect(k + 1, 1);  // expect[j] = C_{2^j}
      if (f == NilpotentForm::Form4) expect[1] = 1 + (1 << k);
      if (f == NilpotentForm::Form3) expect[2] = 1 + (1 << (k - 1));
      if (f == NilpotentForm::Form5) {
        expect[1] = 1 + (1 << (k - 1));
        expect[2] = 1 + (1 << (k - 2));
      }
      for (int j = 1; j <= k; ++j) ok = ok && cls_.C(1 << j) == expect[j];
      w = std::string(f == NilpotentForm::Form3 ? "Q" : f == NilpotentForm::Form4 ? "D" : "SD") + " table, k = " +
          std::to_string(k) + ": " + w;
    }
    add("pgroup-class-corollary", ok, w);
  }

  void simple_cd2() {
    if (!report_.is_simple || report_.is_cyclic) return;
    for (int d : cls_.pi)
      if (cls_.C(d) < 2) {
        add("simple-cd2", false, "C" + std::to_string(d) + " = " + std::to_string(cls_.C(d)));
        return;
      }
    add("simple-cd2", true, class_table(cls_));
  }

  void cd3() {
    if (!report_.is_nilpotent || report_.is_cyclic || report_.components.gprime.size() <= 1) return;
    std::set<int> seen;
    for (Element x = 0; x < n_; ++x) {
      if (report_.components.proj_gprime[x] == 0) continue;
      const int d = g_.elt_order(x);
      if (!seen.insert(d).second) continue;
      if (cls_.C(d) < 3) {
        add("cd3", false, "C" + std::to_string(d) + " = " + std::to_string(cls_.C(d)) + " for " + g_.label(x));
        return;
      }
    }
    std::vector<int> ds(seen.begin(), seen.end());
    add("cd3", true, "C_d >= 3 for d in {" + join_ints(ds) + "}");
  }

  void corollary_2n_4() {
    const int ub = lambda_upper_bound_maximal(g_, fam_);
    bool ok = ub <= 2 * n_ - 4;
    std::string w = "upper bound " + std::to_string(ub) + " <= 2n-4 = " + std::to_string(2 * n_ - 4);
    if (const auto* ex = exact()) {
      const bool klein = n_ == 4 && !report_.is_cyclic;
      ok = ok && ((ex->value == 2 * n_ - 4) == klein);
      w += ", lambda = " + std::to_string(ex->value);
    }
    add("corollary-2n-4", ok, w);
  }

  void bound_sandwich() {
    const auto* ex = exact();
    if (!ex) return;
    const int lo = lambda_lower_bound(g_), hi = lambda_upper_bound_maximal(g_, fam_);
    add("bound-sandwich", lo <= ex->value && ex->value <= hi,
        std::to_string(lo) + " <= " + std::to_string(ex->value) + " <= " + std::to_string(hi));
  }

  void construction_cover() {
    try {
      const CoverConstruction c = build_path_cover_construction(g_);
      add("construction-cover", c.cover.size() == c.bound,
          std::string(to_string(c.which)) + ": cover size " + std::to_string(c.cover.size()) + ", bound " +
              std::to_string(c.bound));
    } catch (const Error& e) {
      add("construction-cover", false, e.what());
    }
  }

  void lower_bound_equality() {
    if (n_ - 1 > kExactSubsetLimit || n_ < 2) return;
    const auto* ex = exact();
    if (!ex) return;
    std::vector<int> rest;
    for (int v = 1; v < n_; ++v) rest.push_back(v);
    const Graph h = complement(induced_subgraph(epg_, rest));
    const bool ham = hamiltonian_path(h).status == PathStatus::Found;
    add("lower-bound-equality", (ex->value == n_) == ham,
        "lambda = " + std::to_string(ex->value) + ", Hamiltonian path on complement of EPG - e: " + (ham ? "yes" : "no"));
  }

  void closed_form() {
    std::optional<LambdaCertificate> cf;
    try {
      cf = lambda_closed_form(g_, report_);
    } catch (const Error& e) {
      add("closed-form", false, e.what());
      return;
    }
    if (!cf) return;
    if (!cf->is_exact()) {
      add("closed-form", false, cf->notes.empty() ? "downgraded to bounds" : cf->notes.back());
      return;
    }
    std::string w = "theorem " + std::to_string(cf->value);
    bool ok = true;
    if (const auto* ex = exact()) {
      ok = ok && ex->value == cf->value;
      w += ", exact " + std::to_string(ex->value);
    }
    if (n_ <= opt_.path_cover_limit) {
      const auto pc = lambda_via_path_cover(epg_);
      ok = ok && pc.is_exact() && pc.value == cf->value;
      w += ", n + c - 2 = " + std::to_string(pc.value);
    }
    add("closed-form", ok, w);
  }
};

inline void georges_checks(const SuiteOptions& opt, TheoremReport& rep) {
  const auto graphs = random_graph_suite(opt.seed, opt.random_samples, opt.random_max_n);
  int mismatches = 0;
  std::string first;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const int n = g.size();
    SolverOptions so;
    so.time_budget_seconds = opt.time_budget_seconds;
    const auto lam = lambda_exact(g, so);
    const int c = path_cover_min(complement(g)).size();
    // lambda = n + c - 2 when c >= 2; when c = 1 only lambda <= n - 1.
    const bool ok = lam.is_exact() && (c >= 2 ? lam.value == n + c - 2 : lam.value <= n - 1);
    if (!ok && mismatches++ == 0)
      first = "graph #" + std::to_string(i) + " (n = " + std::to_string(n) + "): lambda " + std::to_string(lam.value) +
              ", c = " + std::to_string(c);
  }
  rep.checks.push_back({"lambda-georges", "random graphs (seed " + std::to_string(opt.seed) + ")", mismatches == 0,
                        mismatches == 0 ? std::to_string(graphs.size()) + " graphs agree" : first});
}

}  // namespace detail

/// Runs every applicable check on each group; failures are recorded with a counterexample.
inline TheoremReport verify_theorem_suite(const std::vector<FiniteGroup>& corpus, const SuiteOptions& opt = {}) {
  TheoremReport rep;
  rep.seed = opt.seed;
  std::vector<std::string> case2;
  int strict_power = 0;
  for (const auto& g : corpus) {
    detail::GroupChecks(g, opt, rep).run();
    if (opt.selection != SuiteSelection::All) continue;
    const MaximalCyclicFamily fam = maximal_cyclic_subgroups(g);
    if (fam.size() >= 2 && cover_case(fam) == CoverCase::Case2) case2.push_back(g.name());
    if (power_graph(g).edge_count() < enhanced_power_graph(g).edge_count()) ++strict_power;
  }
  if (opt.selection == SuiteSelection::All || opt.selection == SuiteSelection::Georges)
    detail::georges_checks(opt, rep);
  if (opt.selection == SuiteSelection::All) {
    rep.notes.push_back("power graph is a subgraph of EPG on every group; EPG is not a subgraph of the power graph on " +
                        std::to_string(strict_power) + " of " + std::to_string(corpus.size()) + " groups");
    if (case2.empty()) {
      rep.notes.push_back("no corpus group has m1 > m2 + ... + mr; that cover construction is exercised directly in tests");
    } else {
      std::string s;
      for (const auto& c : case2) s += (s.empty() ? "" : ", ") + c;
      rep.notes.push_back("m1 > m2 + ... + mr in: " + s);
    }
  }
  return rep;
}

}  // namespace epglab
