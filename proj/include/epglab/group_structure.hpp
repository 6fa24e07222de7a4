#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "epglab/error.hpp"
#include "epglab/finite_group.hpp"
#include "epglab/number_theory.hpp"

namespace epglab {

/// A subgroup of a parent group, as a sorted list of parent element indices.
struct Subgroup {
  std::vector<Element> members;     // sorted, contains 0
  bool is_cyclic = false;
  std::vector<Element> generators;  // generators of the subgroup when cyclic, sorted

  int order() const { return static_cast<int>(members.size()); }
  bool contains(Element x) const { return std::binary_search(members.begin(), members.end(), x); }
  bool is_trivial() const { return members.size() == 1; }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
};

/// Closure of `gens` under multiplication (finite, so this is the generated subgroup).
inline Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> members{0};
  in[0] = 1;
  std::vector<Element> uniq;
  for (Element x : gens)
    if (x != 0 && std::find(uniq.begin(), uniq.end(), x) == uniq.end()) uniq.push_back(x);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Element s : uniq) {
      const Element y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  Subgroup h;
  h.members = std::move(members);
  for (Element x : h.members)
    if (g.elt_order(x) == h.order()) h.generators.push_back(x);
  h.is_cyclic = !h.generators.empty();
  return h;
}

/// <x> with its phi(o(x)) generators.
inline Subgroup cyclic_subgroup(const FiniteGroup& g, Element x) {
  Subgroup h;
  const int o = g.elt_order(x);
  Element p = 0;
  for (int k = 0; k < o; ++k) {
    h.members.push_back(p);
    if (std::gcd(k, o) == 1) h.generators.push_back(p);
    p = g.mul(p, x);
  }
  std::sort(h.members.begin(), h.members.end());
  std::sort(h.generators.begin(), h.generators.end());
  h.is_cyclic = true;
  return h;
}

/// Whether the subgroup generated by x and y is cyclic.
inline bool generates_cyclic(const FiniteGroup& g, Element x, Element y) {
  return generated_subgroup(g, {x, y}).is_cyclic;
}

/// Re-indexes a subgroup as a standalone group (member i of `h` becomes element i).
inline FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, std::string name = {}) {
  const int m = h.order();
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < m; ++i) local[h.members[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = g.label(h.members[i]);
    for (int j = 0; j < m; ++j) {
      const int c = local[g.mul(h.members[i], h.members[j])];
      if (c < 0) throw InputError("subgroup is not closed under multiplication");
      table[static_cast<std::size_t>(i) * m + j] = c;
    }
  }
  return FiniteGroup::from_table(m, std::move(table), std::move(labels), std::move(name));
}

// ---------------------------------------------------------------------------
// Cyclic classes
// ---------------------------------------------------------------------------

/// The partition of G by x ~ y iff <x> = <y>.
struct CyclicClassPartition {
  std::vector<std::vector<Element>> classes;  // ordered by smallest member
  std::vector<int> class_of;                  // element -> class index
  std::vector<int> class_order;               // class -> common element order
  std::set<int> pi;                           // orders of non-identity elements
  std::map<int, int> count;                   // d -> C_d
  std::map<int, std::vector<Element>> tau;    // d -> elements of order d
  long long exponent = 1;

  int C(int d) const {
    auto it = count.find(d);
    return it == count.end() ? 0 : it->second;
  }
  /// Classes of order-d elements, in class order.
  std::vector<std::vector<Element>> classes_of_order(int d) const {
    std::vector<std::vector<Element>> out;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (class_order[c] == d) out.push_back(classes[c]);
    return out;
  }
};

inline CyclicClassPartition cyclic_classes(const FiniteGroup& g) {
  CyclicClassPartition p;
  const int n = g.order();
  p.class_of.assign(n, -1);
  for (Element x = 0; x < n; ++x) {
    if (p.class_of[x] >= 0) continue;
    const Subgroup h = cyclic_subgroup(g, x);
    const int idx = static_cast<int>(p.classes.size());
    for (Element y : h.generators) p.class_of[y] = idx;
    p.classes.push_back(h.generators);
    p.class_order.push_back(g.elt_order(x));
  }
  for (Element x = 0; x < n; ++x) {
    const int d = g.elt_order(x);
    p.exponent = std::lcm(p.exponent, static_cast<long long>(d));
    if (x == 0) continue;
    p.pi.insert(d);
    p.tau[d].push_back(x);
  }
  for (std::size_t c = 0; c < p.classes.size(); ++c)
    if (p.class_order[c] > 1) ++p.count[p.class_order[c]];
  p.count[1] = 1;
  return p;
}

// ---------------------------------------------------------------------------
// Maximal cyclic subgroups
// ---------------------------------------------------------------------------

struct MaximalCyclicFamily {
  std::vector<Subgroup> subgroups;             // sorted by m descending, ties by smallest generator
  std::vector<int> m;                          // m_i = phi(|M_i|)
  std::vector<std::vector<Element>> gen_sets;  // G_{M_i}
  std::vector<Element> gen_union;              // G_M, sorted

  int size() const { return static_cast<int>(subgroups.size()); }
};

inline MaximalCyclicFamily maximal_cyclic_subgroups(const FiniteGroup& g) {
  const CyclicClassPartition cls = cyclic_classes(g);
  // One cyclic subgroup per class; <x> is maximal iff no strictly larger cyclic subgroup contains x.
  std::vector<Subgroup> cyclics;
  for (const auto& c : cls.classes) cyclics.push_back(cyclic_subgroup(g, c.front()));
  MaximalCyclicFamily fam;
  for (std::size_t i = 0; i < cyclics.size(); ++i) {
    bool maximal = true;
    const Element rep = cyclics[i].generators.front();
    for (std::size_t j = 0; j < cyclics.size() && maximal; ++j)
      if (cyclics[j].order() > cyclics[i].order() && cyclics[j].contains(rep)) maximal = false;
    if (maximal) fam.subgroups.push_back(cyclics[i]);
  }
  std::stable_sort(fam.subgroups.begin(), fam.subgroups.end(), [](const Subgroup& a, const Subgroup& b) {
    const auto ma = a.generators.size(), mb = b.generators.size();
    if (ma != mb) return ma > mb;
    return a.generators.front() < b.generators.front();
  });
  for (const auto& s : fam.subgroups) {
    fam.m.push_back(static_cast<int>(s.generators.size()));
    fam.gen_sets.push_back(s.generators);
    fam.gen_union.insert(fam.gen_union.end(), s.generators.begin(), s.generators.end());
  }
  std::sort(fam.gen_union.begin(), fam.gen_union.end());
  return fam;
}

// ---------------------------------------------------------------------------
// Lower central series
// ---------------------------------------------------------------------------

struct LowerCentralSeries {
  std::vector<Subgroup> terms;  // terms[0] = G, terms[i] = G^{(i+1)}, strictly descending

  /// G^{(i)} with a 1-based index (G^{(1)} = G); terms past the end repeat the last one.
  const Subgroup& term(int i) const {
    const int idx = std::clamp(i - 1, 0, static_cast<int>(terms.size()) - 1);
    return terms[idx];
  }
  bool reaches_trivial() const { return terms.back().is_trivial(); }
};

inline LowerCentralSeries lower_central_series(const FiniteGroup& g) {
  LowerCentralSeries lcs;
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  lcs.terms.push_back(generated_subgroup(g, all));
  while (true) {
    const Subgroup& cur = lcs.terms.back();
    std::vector<char> seen(g.order(), 0);
    std::vector<Element> comms;
    for (Element a : cur.members)
      for (Element x = 0; x < g.order(); ++x) {
        const Element c = g.commutator(a, x);
        if (!seen[c]) {
          seen[c] = 1;
          comms.push_back(c);
        }
      }
    Subgroup next = generated_subgroup(g, comms);
    if (next == cur) break;
    lcs.terms.push_back(std::move(next));
  }
  return lcs;
}

/// For a p-group of order p^n (n >= 2): G^{(n-1)} != {e} and G^{(n)} = {e}.
inline bool is_maximal_class(const FiniteGroup& g, const LowerCentralSeries& lcs) {
  const auto f = factorize(g.order());
  if (f.size() != 1 || f.front().second < 2) return false;
  const int n = f.front().second;
  return !lcs.term(n - 1).is_trivial() && lcs.term(n).is_trivial() && lcs.reaches_trivial() &&
         static_cast<int>(lcs.terms.size()) >= n - 1;
}

// ---------------------------------------------------------------------------
// Conjugacy and simplicity
// ---------------------------------------------------------------------------

inline std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> done(g.order(), 0);
  std::vector<std::vector<Element>> out;
  for (Element x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<Element> cls;
    for (Element h = 0; h < g.order(); ++h) {
      const Element y = g.conjugate(x, h);
      if (!done[y]) {
        done[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

/// Simple iff the normal closure of every non-identity conjugacy class is all of G.
/// Every non-trivial normal subgroup contains such a closure, so this covers the full search.
inline bool is_simple(const FiniteGroup& g) {
  if (g.order() == 1) return false;
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.front() == 0) continue;
    if (generated_subgroup(g, cls).order() != g.order()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Nilpotent structure
// ---------------------------------------------------------------------------

enum class NilpotentForm { Cyclic, Form1, Form2, Form3, Form4, Form5, NotNilpotent };

inline const char* to_string(NilpotentForm f) {
  switch (f) {
    case NilpotentForm::Cyclic: return "Cyclic";
    case NilpotentForm::Form1: return "Form1";
    case NilpotentForm::Form2: return "Form2";
    case NilpotentForm::Form3: return "Form3";
    case NilpotentForm::Form4: return "Form4";
    case NilpotentForm::Form5: return "Form5";
    case NilpotentForm::NotNilpotent: return "NotNilpotent";
  }
  return "?";
}

struct SylowSubgroup {
  int prime = 0;
  Subgroup group;
};

/// Coordinates of G = G' x P x Z_n for a nilpotent group, realized inside G.
struct NilpotentComponents {
  std::vector<Element> gprime;  // odd-order part with no cyclic Sylow (sorted)
  std::vector<Element> two;     // the 2-Sylow when it is non-cyclic, else {e}
  std::vector<Element> zn;      // product of the remaining (cyclic) Sylows
  std::vector<Element> proj_gprime, proj_two, proj_zn;  // element -> its coordinate
  int zn_order = 1;
  int two_exponent_log = 0;     // k with exp(P) = 2^k

  /// Element with the given coordinates.
  Element compose(const FiniteGroup& g, Element a, Element b, Element c) const {
    return g.mul(g.mul(a, b), c);
  }
};

struct StructureReport {
  bool is_nilpotent = false;
  std::vector<SylowSubgroup> sylow;  // ascending primes; only when nilpotent
  NilpotentForm form = NilpotentForm::NotNilpotent;
  NilpotentComponents components;    // only when nilpotent
  bool is_simple = false;
  bool is_cyclic = false;
  bool is_abelian = false;
  bool is_p_group = false;
  int p = 0;                         // the prime when is_p_group
  bool is_maximal_class = false;     // p-groups only
  std::vector<std::string> notes;
};

namespace detail {

// The part of x whose order is built from the primes in `block`: x^u with u = 1 mod o_B,
// u = 0 mod o/o_B, where o_B is the block part of o(x).
inline Element block_part(const FiniteGroup& g, Element x, const std::vector<int>& block) {
  const long long o = g.elt_order(x);
  long long ob = 1;
  for (int p : block) ob *= prime_part(o, p);
  const long long rest = o / ob;
  const long long u = (rest % o) * mod_inverse(rest % std::max(ob, 1LL), ob) % o;
  return g.pow(x, ob == 1 ? 0 : u);
}

}  // namespace detail

/// Classifies a 2-group that is non-cyclic as one of the forms 2..5. Also used on the Sylow
/// 2-subgroup of a nilpotent group.
inline NilpotentForm classify_two_group(const FiniteGroup& p) {
  const LowerCentralSeries lcs = lower_central_series(p);
  if (!is_maximal_class(p, lcs)) return NilpotentForm::Form2;
  if (p.order() == 4) return NilpotentForm::Form4;  // Z2 x Z2, the dihedral group with k = 1
  const int k = valuation(p.order(), 2) - 1;
  const CyclicClassPartition cls = cyclic_classes(p);
  if (cls.C(2) == 1) return NilpotentForm::Form3;
  if (cls.C(2) == 1 + (1 << k)) return NilpotentForm::Form4;
  return NilpotentForm::Form5;
}

/// Nilpotency by Sylow normality, the nilpotent-form decomposition, and simplicity.
inline StructureReport classify_structure(const FiniteGroup& g) {
  StructureReport r;
  const int n = g.order();
  r.is_abelian = g.is_abelian();
  r.is_cyclic = std::any_of(g.elt_orders().begin(), g.elt_orders().end(), [n](int o) { return o == n; });
  const auto f = factorize(n);
  r.is_p_group = f.size() == 1;
  if (r.is_p_group) r.p = f.front().first;
  if (r.is_p_group) r.is_maximal_class = is_maximal_class(g, lower_central_series(g));
  r.is_simple = is_simple(g);

  // A Sylow p-subgroup is normal iff it is the unique one iff the p-elements number exactly p^a.
  bool nilpotent = true;
  std::vector<SylowSubgroup> sylow;
  for (auto [p, a] : f) {
    long long pa = 1;
    for (int i = 0; i < a; ++i) pa *= p;
    std::vector<Element> pelts;
    for (Element x = 0; x < n; ++x)
      if (prime_part(g.elt_order(x), p) == g.elt_order(x)) pelts.push_back(x);
    if (static_cast<long long>(pelts.size()) != pa) {
      nilpotent = false;
      break;
    }
    SylowSubgroup s;
    s.prime = p;
    s.group = generated_subgroup(g, pelts);
    if (s.group.order() != pa) {
      nilpotent = false;
      break;
    }
    sylow.push_back(std::move(s));
  }
  r.is_nilpotent = nilpotent;
  if (!nilpotent) {
    r.form = NilpotentForm::NotNilpotent;
    return r;
  }
  r.sylow = std::move(sylow);

  std::vector<int> gprime_primes, zn_primes;
  bool two_noncyclic = false;
  for (const auto& s : r.sylow) {
    if (s.prime == 2 && !s.group.is_cyclic) {
      two_noncyclic = true;
    } else if (s.prime != 2 && !s.group.is_cyclic) {
      gprime_primes.push_back(s.prime);
    } else {
      zn_primes.push_back(s.prime);
    }
  }
  auto& c = r.components;
  c.proj_gprime.resize(n);
  c.proj_two.resize(n);
  c.proj_zn.resize(n);
  const std::vector<int> two_block = two_noncyclic ? std::vector<int>{2} : std::vector<int>{};
  for (Element x = 0; x < n; ++x) {
    c.proj_gprime[x] = detail::block_part(g, x, gprime_primes);
    c.proj_two[x] = detail::block_part(g, x, two_block);
    c.proj_zn[x] = detail::block_part(g, x, zn_primes);
    if (c.proj_gprime[x] == x) c.gprime.push_back(x);
    if (c.proj_two[x] == x) c.two.push_back(x);
    if (c.proj_zn[x] == x) c.zn.push_back(x);
  }
  c.zn_order = static_cast<int>(c.zn.size());

  if (gprime_primes.empty() && !two_noncyclic) {
    r.form = NilpotentForm::Cyclic;
    return r;
  }
  if (!two_noncyclic) {
    r.form = NilpotentForm::Form1;
    if (c.zn_order == 1) r.notes.push_back("Form1 with n = 1 (G = G')");
    return r;
  }
  const FiniteGroup pg = subgroup_as_group(g, generated_subgroup(g, c.two), "P");
  r.form = classify_two_group(pg);
  int k = 0;
  for (int o : pg.elt_orders()) k = std::max(k, valuation(o, 2));
  c.two_exponent_log = k;
  if (c.gprime.size() == 1) r.notes.push_back("trivial G' component");
  return r;
}

/// z with o(z) = lcm(o(x), o(y)), assembled prime by prime from the Sylow coordinates
/// (take x's coordinate where its prime power is at least y's).
inline Element lcm_element(const FiniteGroup& g, const StructureReport& report, Element x, Element y) {
  if (!report.is_nilpotent) throw NotApplicableError("lcm_element requires a nilpotent group");
  Element z = 0;
  for (const auto& s : report.sylow) {
    const Element xp = detail::block_part(g, x, {s.prime});
    const Element yp = detail::block_part(g, y, {s.prime});
    z = g.mul(z, g.elt_order(xp) >= g.elt_order(yp) ? xp : yp);
  }
  return z;
}

}  // namespace epglab
