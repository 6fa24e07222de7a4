#pragma once

#include <vector>

#include "epglab/error.hpp"
#include "epglab/finite_group.hpp"
#include "epglab/graph.hpp"
#include "epglab/group_structure.hpp"

namespace epglab {

/// x ~ y iff x, y lie in a common cyclic subgroup. Built by marking every pair inside each
/// cyclic subgroup; one subgroup per cyclic class is enough since <z> depends only on the class.
inline Graph enhanced_power_graph(const FiniteGroup& g) {
  Graph out(g.order());
  const CyclicClassPartition cls = cyclic_classes(g);
  for (const auto& c : cls.classes) {
    const Subgroup h = cyclic_subgroup(g, c.front());
    for (std::size_t i = 0; i < h.members.size(); ++i)
      for (std::size_t j = i + 1; j < h.members.size(); ++j) out.add_edge(h.members[i], h.members[j]);
  }
  out.set_names(g.labels());
  return out;
}

/// x ~ y iff one is a power of the other.
inline Graph power_graph(const FiniteGroup& g) {
  Graph out(g.order());
  for (Element z = 0; z < g.order(); ++z)
    for (Element p = g.mul(z, z), k = 2; k <= g.elt_order(z); p = g.mul(p, z), ++k) out.add_edge(z, p);
  for (Element z = 1; z < g.order(); ++z) out.add_edge(0, z);
  out.set_names(g.labels());
  return out;
}

/// Dominating vertices of the enhanced power graph of a non-cyclic nilpotent group, read off
/// its G' x P x Z_n decomposition:
///   Form1            {(e', x)}
///   Form2, 4, 5      {(e', e_P, x)}
///   Form3            {(e', y, x) : y = e_P or y the unique involution of P}
inline std::vector<Element> dominating_vertices_formula(const FiniteGroup& g, const StructureReport& r) {
  if (!r.is_nilpotent || r.form == NilpotentForm::Cyclic || r.form == NilpotentForm::NotNilpotent)
    throw NotApplicableError("the dominating-vertex formula needs a non-cyclic nilpotent group");
  const auto& c = r.components;
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    if (c.proj_gprime[x] != 0) continue;
    const Element y = c.proj_two[x];
    bool in = false;
    switch (r.form) {
      case NilpotentForm::Form1: in = true; break;
      case NilpotentForm::Form3: in = y == 0 || g.elt_order(y) == 2; break;
      default: in = y == 0; break;
    }
    if (in) out.push_back(x);
  }
  return out;
}

}  // namespace epglab
