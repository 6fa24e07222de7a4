#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "epglab/error.hpp"
#include "epglab/group_spec.hpp"

namespace epglab {

/// Index of a group element; the identity is always 0.
using Element = int;

/// Multiplication tables of this size and below get the full triple-loop associativity check.
inline constexpr int kFullAssociativityCheckLimit = 512;

/// A finite group given by its Cayley table. Immutable once built; every constructor path
/// validates the group axioms and renumbers so that the identity is element 0.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(trivial()) {}

  /// Validates `table` (row-major, `n*n` entries) and renumbers the identity to 0.
  /// Throws InputError naming the first failing axiom and a witness.
  static FiniteGroup from_table(int n, std::vector<int> table, std::vector<std::string> labels = {},
                                std::string name = {}) {
    if (n < 1) throw InputError("group table must have at least one element");
    if (table.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
      throw InputError("group table has " + std::to_string(table.size()) + " entries, expected " +
                       std::to_string(n) + "^2");
    for (std::size_t i = 0; i < table.size(); ++i)
      if (table[i] < 0 || table[i] >= n)
        throw InputError("table entry at row " + std::to_string(i / n) + ", column " +
                         std::to_string(i % n) + " is out of range [0," + std::to_string(n) + ")");
    if (labels.empty()) {
      labels.resize(n);
      for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    }
    if (static_cast<int>(labels.size()) != n) throw InputError("label count does not match order");

    auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };

    // Latin square.
    std::vector<int> seen(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int c = at(a, b);
        if (seen[c] == a)
          throw InputError("not a Latin square: row " + std::to_string(a) + " repeats entry " +
                           std::to_string(c));
        seen[c] = a;
      }
    }
    std::fill(seen.begin(), seen.end(), -1);
    for (int b = 0; b < n; ++b) {
      for (int a = 0; a < n; ++a) {
        const int c = at(a, b);
        if (seen[c] == b)
          throw InputError("not a Latin square: column " + std::to_string(b) + " repeats entry " +
                           std::to_string(c));
        seen[c] = b;
      }
    }

    // Identity.
    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
      bool ok = true;
      for (int j = 0; j < n && ok; ++j) ok = at(e, j) == j && at(j, e) == j;
      if (ok) identity = e;
    }
    if (identity < 0) throw InputError("group axiom failed: no two-sided identity element");

    // Renumber so that the identity sits at index 0.
    if (identity != 0) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[0], perm[identity]);
      std::vector<int> renumbered(table.size());
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          renumbered[static_cast<std::size_t>(perm[a]) * n + perm[b]] = perm[at(a, b)];
      table = std::move(renumbered);
      std::swap(labels[0], labels[identity]);
    }

    FiniteGroup g;
    g.n_ = n;
    g.mul_ = std::move(table);
    g.labels_ = std::move(labels);
    g.name_ = std::move(name);
    g.check_inverses();
    g.check_associativity();
    g.compute_orders();
    return g;
  }

  int order() const { return n_; }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  int elt_order(Element a) const { return ord_[a]; }

  Element pow(Element a, long long k) const {
    const int o = ord_[a];
    k %= o;
    if (k < 0) k += o;
    Element result = 0, base = a;
    while (k > 0) {
      if (k & 1) result = mul(result, base);
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }

  /// h^{-1} k^{-1} h k
  Element commutator(Element h, Element k) const { return mul(mul(inv(h), inv(k)), mul(h, k)); }
  Element conjugate(Element x, Element g) const { return mul(mul(inv(g), x), g); }

  std::span<const int> row(Element a) const {
    return {mul_.data() + static_cast<std::size_t>(a) * n_, static_cast<std::size_t>(n_)};
  }
  const std::vector<int>& elt_orders() const { return ord_; }
  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool is_abelian() const {
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

 private:
  int n_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> ord_;
  std::vector<std::string> labels_;
  std::string name_;

  static FiniteGroup trivial() {
    FiniteGroup g(0);
    g.n_ = 1;
    g.mul_ = {0};
    g.inv_ = {0};
    g.ord_ = {1};
    g.labels_ = {"e"};
    g.name_ = "Z1";
    return g;
  }
  explicit FiniteGroup(int) {}

  void check_inverses() {
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        if (mul(a, b) == 0) {
          if (mul(b, a) != 0)
            throw InputError("group axiom failed: " + std::to_string(a) + "*" + std::to_string(b) +
                             " = e but " + std::to_string(b) + "*" + std::to_string(a) + " != e");
          inv_[a] = b;
          break;
        }
      }
      if (inv_[a] < 0) throw InputError("group axiom failed: element " + std::to_string(a) +
                                        " has no inverse");
    }
  }

  [[noreturn]] static void associativity_failure(int a, int b, int c) {
    throw InputError("group axiom failed: associativity violated for triple (" + std::to_string(a) +
                     ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
  }

  void check_associativity() const {
    if (n_ <= kFullAssociativityCheckLimit) {
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
          const int ab = mul(a, b);
          for (int c = 0; c < n_; ++c)
            if (mul(ab, c) != mul(a, mul(b, c))) associativity_failure(a, b, c);
        }
      return;
    }
    // Light's test: it suffices that every element of a generating set associates in the middle.
    for (int g : greedy_generators()) {
      for (int a = 0; a < n_; ++a) {
        const int ag = mul(a, g);
        for (int c = 0; c < n_; ++c)
          if (mul(ag, c) != mul(a, mul(g, c))) associativity_failure(a, g, c);
      }
    }
  }

  // Closure under right multiplication; valid for the Latin-square tables checked above.
  std::vector<int> greedy_generators() const {
    std::vector<char> in(n_, 0);
    std::vector<int> members{0}, gens;
    in[0] = 1;
    for (int cand = 1; cand < n_; ++cand) {
      if (in[cand]) continue;
      gens.push_back(cand);
      for (std::size_t i = 0; i < members.size(); ++i)
        for (int g : gens) {
          const int x = mul(members[i], g);
          if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
          }
        }
    }
    return gens;
  }

  void compute_orders() {
    ord_.assign(n_, 0);
    for (int a = 0; a < n_; ++a) {
      int k = 1;
      for (int x = a; x != 0; x = mul(x, a)) ++k;
      ord_[a] = k;
    }
  }
};

// ---------------------------------------------------------------------------
// Cayley-table files
// ---------------------------------------------------------------------------

/// Reads the Cayley-table format: first the order n, then n rows of n indices. `#` starts a
/// comment that runs to the end of the line.
inline FiniteGroup read_cayley_table(std::istream& in, std::string name = {}) {
  std::ostringstream cleaned;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    cleaned << line << '\n';
  }
  std::istringstream tokens(cleaned.str());
  long n = 0;
  if (!(tokens >> n) || n < 1) throw InputError("Cayley table: first token must be the order n >= 1");
  if (n > 5040) throw LimitError("Cayley table: order " + std::to_string(n) + " exceeds 5040");
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (long i = 0; i < n * n; ++i) {
    long v;
    if (!(tokens >> v))
      throw InputError("Cayley table: expected " + std::to_string(n * n) + " entries, got " +
                       std::to_string(i));
    table.push_back(static_cast<int>(v));
  }
  std::string extra;
  if (tokens >> extra) throw InputError("Cayley table: trailing token '" + extra + "'");
  return FiniteGroup::from_table(static_cast<int>(n), std::move(table), {}, std::move(name));
}

inline FiniteGroup read_cayley_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open Cayley table file '" + path + "'");
  return read_cayley_table(in, "@" + path);
}

inline void write_cayley_table(const FiniteGroup& g, std::ostream& out) {
  out << "# " << (g.name().empty() ? "group" : g.name()) << "\n" << g.order() << "\n";
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << "\n";
  }
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

struct BuildOptions {
  int max_order = 5040;  // closure and product cap
};

namespace detail {

inline std::string power_label(const char* gen, int k) {
  if (k == 0) return "";
  if (k == 1) return gen;
  return std::string(gen) + "^" + std::to_string(k);
}

// Groups of the form { r^i s^j : 0 <= i < n, j in {0,1} } with index i + n*j.
// s r = r^twist s, s^2 = r^square.
inline FiniteGroup metacyclic(int n, int twist, int square, const char* r, const char* s,
                              std::string name) {
  const int order = 2 * n;
  auto mod = [n](long v) { return static_cast<int>(((v % n) + n) % n); };
  // s^j r^k = r^{twist^j k} s^j
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a) {
    const int i = a % n, j = a / n;
    for (int b = 0; b < order; ++b) {
      const int k = b % n, l = b / n;
      long exp = i + static_cast<long>(j ? twist : 1) * k;
      int sj = j + l;
      if (sj == 2) {
        exp += square;
        sj = 0;
      }
      table[static_cast<std::size_t>(a) * order + b] = mod(exp) + n * sj;
    }
  }
  std::vector<std::string> labels(order);
  for (int a = 0; a < order; ++a) {
    std::string l = power_label(r, a % n) + power_label(s, a / n);
    labels[a] = l.empty() ? "e" : l;
  }
  return FiniteGroup::from_table(order, std::move(table), std::move(labels), std::move(name));
}

using Permutation = std::vector<int>;

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

inline std::string cycle_notation(const Permutation& p) {
  std::vector<char> done(p.size(), 0);
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    for (std::size_t j = i; !done[j]; j = p[j]) {
      done[j] = 1;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace detail

inline FiniteGroup cyclic_group(int n) {
  if (n < 1) throw InputError("cyclic order must be >= 1");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) labels[a] = std::to_string(a);
  return FiniteGroup::from_table(n, std::move(table), std::move(labels), "Z" + std::to_string(n));
}

/// Dihedral group of order m = 2n: <x, y | x^n = y^2 = e, xy = yx^{-1}>.
inline FiniteGroup dihedral_group(int m) {
  if (m < 4 || m % 2) throw InputError("dihedral order must be even and >= 4");
  return detail::metacyclic(m / 2, -1, 0, "x", "y", "D" + std::to_string(m));
}

/// Dicyclic group of order m = 4n: <a, b | a^{2n} = e, a^n = b^2, ab = ba^{-1}>.
inline FiniteGroup dicyclic_group(int m) {
  if (m < 8 || m % 4) throw InputError("dicyclic order must be a multiple of 4, >= 8");
  return detail::metacyclic(m / 2, -1, m / 4, "a", "b", "Q" + std::to_string(m));
}

/// Semidihedral group of order m = 2^{k+1}: <x, y | x^{2^k} = y^2 = e, y^{-1}xy = x^{-1+2^{k-1}}>.
inline FiniteGroup semidihedral_group(int m) {
  if (m < 16 || (m & (m - 1))) throw InputError("semidihedral order must be 2^(k+1), k >= 3");
  const int n = m / 2;
  return detail::metacyclic(n, n / 2 - 1, 0, "x", "y", "SD" + std::to_string(m));
}

/// Internal direct product; the first factor is the most significant coordinate.
inline FiniteGroup direct_product(const std::vector<FiniteGroup>& factors, const BuildOptions& opt = {}) {
  if (factors.empty()) throw InputError("direct product needs at least one factor");
  long long order = 1;
  for (const auto& f : factors) {
    order *= f.order();
    if (order > opt.max_order)
      throw LimitError("direct product order exceeds the configured maximum " +
                       std::to_string(opt.max_order));
  }
  const int n = static_cast<int>(order);
  const std::size_t k = factors.size();
  std::vector<int> stride(k);
  int s = 1;
  for (std::size_t i = k; i-- > 0;) {
    stride[i] = s;
    s *= factors[i].order();
  }
  auto coord = [&](int a, std::size_t i) { return (a / stride[i]) % factors[i].order(); };
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = 0;
      for (std::size_t i = 0; i < k; ++i) c += factors[i].mul(coord(a, i), coord(b, i)) * stride[i];
      table[static_cast<std::size_t>(a) * n + b] = c;
    }
  std::vector<std::string> labels(n);
  std::string name;
  for (std::size_t i = 0; i < k; ++i) name += (i ? " x " : "") + factors[i].name();
  for (int a = 0; a < n; ++a) {
    std::string l = "(";
    for (std::size_t i = 0; i < k; ++i) l += (i ? "," : "") + factors[i].label(coord(a, i));
    labels[a] = l + ")";
  }
  return FiniteGroup::from_table(n, std::move(table), std::move(labels), std::move(name));
}

/// Closure of the generating permutations under composition ("apply left factor first").
inline FiniteGroup permutation_group(const std::vector<Cycles>& generators, const BuildOptions& opt = {}) {
  using detail::Permutation;
  int degree = 1;
  for (const auto& g : generators)
    for (const auto& c : g)
      for (int p : c) degree = std::max(degree, p);
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    // A product of cycles, applied left to right.
    Permutation perm(degree);
    std::iota(perm.begin(), perm.end(), 0);
    for (const auto& cycle : g) {
      Permutation step(degree);
      std::iota(step.begin(), step.end(), 0);
      std::vector<char> used(degree, 0);
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int from = cycle[i] - 1;
        if (used[from]) throw InputError("cycle repeats point " + std::to_string(cycle[i]));
        used[from] = 1;
        step[from] = cycle[(i + 1) % cycle.size()] - 1;
      }
      for (auto& v : perm) v = step[v];
    }
    gens.push_back(std::move(perm));
  }
  auto compose = [degree](const Permutation& p, const Permutation& q) {
    Permutation r(degree);
    for (int i = 0; i < degree; ++i) r[i] = q[p[i]];
    return r;
  };
  std::vector<Permutation> elems;
  std::unordered_map<Permutation, int, detail::PermutationHash> index;
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  elems.push_back(id);
  index.emplace(id, 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Permutation next = compose(elems[i], g);
      if (index.count(next)) continue;
      if (static_cast<int>(elems.size()) >= opt.max_order)
        throw LimitError("permutation closure exceeds the configured maximum order " +
                         std::to_string(opt.max_order));
      index.emplace(next, static_cast<int>(elems.size()));
      elems.push_back(std::move(next));
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) labels[a] = detail::cycle_notation(elems[a]);
  GroupSpec spec{PermSpec{generators}};
  return FiniteGroup::from_table(n, std::move(table), std::move(labels), to_string(spec));
}

inline FiniteGroup build_group(const GroupSpec& spec, const BuildOptions& opt = {}) {
  struct Builder {
    const BuildOptions& opt;
    FiniteGroup operator()(const CyclicSpec& s) const {
      if (s.order > opt.max_order) throw LimitError("order exceeds the configured maximum");
      return cyclic_group(s.order);
    }
    FiniteGroup operator()(const DihedralSpec& s) const {
      if (s.order > opt.max_order) throw LimitError("order exceeds the configured maximum");
      return dihedral_group(s.order);
    }
    FiniteGroup operator()(const DicyclicSpec& s) const {
      if (s.order > opt.max_order) throw LimitError("order exceeds the configured maximum");
      return dicyclic_group(s.order);
    }
    FiniteGroup operator()(const SemiDihedralSpec& s) const {
      if (s.order > opt.max_order) throw LimitError("order exceeds the configured maximum");
      return semidihedral_group(s.order);
    }
    FiniteGroup operator()(const PermSpec& s) const { return permutation_group(s.generators, opt); }
    FiniteGroup operator()(const TableFileSpec& s) const { return read_cayley_table_file(s.path); }
    FiniteGroup operator()(const ProductSpec& s) const {
      std::vector<FiniteGroup> factors;
      for (const auto& f : s.factors) factors.push_back(std::visit(*this, f.ast));
      if (factors.size() == 1) return factors.front();
      return direct_product(factors, opt);
    }
  };
  FiniteGroup g = std::visit(Builder{opt}, spec.ast);
  g.set_name(to_string(spec));
  return g;
}

inline FiniteGroup build_group(std::string_view text, const BuildOptions& opt = {}) {
  return build_group(parse_group_spec(text), opt);
}

}  // namespace epglab
