#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "epglab/finite_group.hpp"
#include "epglab/group_spec.hpp"
#include "epglab/group_structure.hpp"
#include "epglab/number_theory.hpp"

using namespace epglab;

namespace {

Element find_label(const FiniteGroup& g, const std::string& label) {
  for (Element x = 0; x < g.order(); ++x)
    if (g.label(x) == label) return x;
  ADD_FAILURE() << "no element labelled " << label << " in " << g.name();
  return 0;
}

std::vector<Element> labels_to(const FiniteGroup& g, std::initializer_list<const char*> ls) {
  std::vector<Element> out;
  for (const char* l : ls) out.push_back(find_label(g, l));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Parse, GrammarCases) {
  EXPECT_TRUE(std::holds_alternative<DihedralSpec>(parse_group_spec("D8").ast));
  EXPECT_EQ(std::get<DihedralSpec>(parse_group_spec("D8").ast).order, 8);
  const GroupSpec p = parse_group_spec("Z3 x Z3 x Z2");
  ASSERT_TRUE(std::holds_alternative<ProductSpec>(p.ast));
  const auto& f = std::get<ProductSpec>(p.ast).factors;
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(std::get<CyclicSpec>(f[0].ast).order, 3);
  EXPECT_EQ(std::get<CyclicSpec>(f[2].ast).order, 2);
  const GroupSpec perm = parse_group_spec("Perm[(1 2 3 4 5);(1 2 3)]");
  ASSERT_TRUE(std::holds_alternative<PermSpec>(perm.ast));
  EXPECT_EQ(std::get<PermSpec>(perm.ast).generators.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<TableFileSpec>(parse_group_spec("@foo.table").ast));
  EXPECT_TRUE(std::holds_alternative<SemiDihedralSpec>(parse_group_spec("SD16").ast));
}

TEST(Parse, RoundTrip) {
  for (const char* s : {"Z6", "Z3 x Z3 x Z2", "Q8", "SD32", "D10 x Z3"})
    EXPECT_EQ(parse_group_spec(to_string(parse_group_spec(s))), parse_group_spec(s)) << s;
}

TEST(Parse, Rejects) {
  for (const char* s : {"", "Z", "Z0", "D5", "D2", "Q6", "Q4", "SD8", "SD24", "Z3 x", "Z3 * Z3",
                        "Perm[]", "X3", "Z3 x Z3 junk"})
    EXPECT_THROW(parse_group_spec(s), InputError) << s;
  EXPECT_THROW(build_group("Perm[(1 1)]"), InputError);
}

TEST(Build, ClosureOfA5) {
  const FiniteGroup a5 = build_group("Perm[(1 2 3 4 5);(1 2 3)]");
  EXPECT_EQ(a5.order(), 60);
  EXPECT_EQ(build_group("Perm[(1 2 3 4);(1 2)]").order(), 24);
}

TEST(Build, DicyclicRelations) {
  const FiniteGroup q8 = build_group("Q8");
  ASSERT_EQ(q8.order(), 8);
  const Element a = find_label(q8, "a"), b = find_label(q8, "b");
  EXPECT_EQ(q8.mul(b, b), q8.mul(a, a));
  EXPECT_NE(q8.mul(a, a), q8.identity());
  EXPECT_EQ(q8.elt_order(b), 4);
  // a b = b a^{-1}
  EXPECT_EQ(q8.mul(a, b), q8.mul(b, q8.inv(a)));
}

TEST(Build, CyclicAndProducts) {
  const FiniteGroup z6 = build_group("Z6");
  EXPECT_EQ(z6.order(), 6);
  EXPECT_EQ(z6.elt_order(1), 6);
  const FiniteGroup z33 = build_group("Z3 x Z3");
  EXPECT_EQ(z33.order(), 9);
  for (Element x = 1; x < 9; ++x) EXPECT_EQ(z33.elt_order(x), 3);
  EXPECT_TRUE(z33.is_abelian());
  EXPECT_FALSE(build_group("D8").is_abelian());
}

TEST(Build, OrdersDivideGroupOrder) {
  for (const char* s : {"D12", "Q12", "SD16", "Z4 x D6", "Perm[(1 2 3);(1 2)(3 4)]"}) {
    const FiniteGroup g = build_group(s);
    for (Element x = 0; x < g.order(); ++x) {
      EXPECT_EQ(g.order() % g.elt_order(x), 0);
      EXPECT_EQ(g.pow(x, g.elt_order(x)), g.identity());
      EXPECT_EQ(g.mul(x, g.inv(x)), g.identity());
    }
  }
}

TEST(Build, Limits) {
  EXPECT_THROW(build_group("Perm[(1 2 3 4 5 6 7 8);(1 2)]"), LimitError);
  BuildOptions small;
  small.max_order = 100;
  EXPECT_THROW(build_group("Z11 x Z11", small), LimitError);
}

TEST(CayleyTable, RoundTripAndErrors) {
  const FiniteGroup d6 = build_group("D6");
  std::stringstream ss;
  write_cayley_table(d6, ss);
  const FiniteGroup back = read_cayley_table(ss, "copy");
  ASSERT_EQ(back.order(), 6);
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) EXPECT_EQ(back.mul(a, b), d6.mul(a, b));

  std::istringstream short_table("2\n0 1\n1");
  EXPECT_THROW(read_cayley_table(short_table), InputError);
  std::istringstream not_group("2\n0 1\n1 1\n");
  EXPECT_THROW(read_cayley_table(not_group), InputError);
  std::istringstream non_assoc("3\n0 1 2\n1 0 2\n2 2 0\n");
  EXPECT_THROW(read_cayley_table(non_assoc), InputError);
  EXPECT_THROW(build_group("@/nonexistent/file.table"), InputError);
}

TEST(CyclicSubgroup, Examples) {
  EXPECT_EQ(cyclic_subgroup(build_group("Z6"), 2).members, (std::vector<Element>{0, 2, 4}));
  const FiniteGroup q8 = build_group("Q8");
  EXPECT_EQ(cyclic_subgroup(q8, find_label(q8, "a")).members, labels_to(q8, {"e", "a", "a^2", "a^3"}));
  const FiniteGroup d8 = build_group("D8");
  const Subgroup h = cyclic_subgroup(d8, find_label(d8, "xy"));
  EXPECT_EQ(h.members, labels_to(d8, {"e", "xy"}));
  EXPECT_TRUE(h.is_cyclic);
  EXPECT_EQ(h.generators, labels_to(d8, {"xy"}));
}

TEST(MaximalCyclic, Examples) {
  const auto q8 = maximal_cyclic_subgroups(build_group("Q8"));
  ASSERT_EQ(q8.size(), 3);
  for (const auto& m : q8.subgroups) EXPECT_EQ(m.order(), 4);
  const auto v4 = maximal_cyclic_subgroups(build_group("Z2 x Z2"));
  ASSERT_EQ(v4.size(), 3);
  for (const auto& m : v4.subgroups) EXPECT_EQ(m.order(), 2);
  const auto z6 = maximal_cyclic_subgroups(build_group("Z6"));
  ASSERT_EQ(z6.size(), 1);
  EXPECT_EQ(z6.subgroups[0].order(), 6);
}

TEST(MaximalCyclic, FamilyInvariants) {
  for (const char* s : {"D10", "Q16", "SD16", "Z2 x Z4", "Perm[(1 2 3 4 5);(1 2 3)]", "Z3 x Z3 x Z2"}) {
    const FiniteGroup g = build_group(s);
    const auto fam = maximal_cyclic_subgroups(g);
    EXPECT_NE(fam.size(), 2) << s;
    std::size_t total = 0;
    for (int i = 0; i < fam.size(); ++i) {
      EXPECT_EQ(fam.m[i], euler_phi(fam.subgroups[i].order()));
      EXPECT_EQ(static_cast<int>(fam.gen_sets[i].size()), fam.m[i]);
      if (i) {
        EXPECT_GE(fam.m[i - 1], fam.m[i]);
      }
      total += fam.gen_sets[i].size();
    }
    // generator sets of distinct maximal cyclic subgroups are disjoint
    EXPECT_EQ(fam.gen_union.size(), total) << s;
    // every element lies in some maximal cyclic subgroup
    for (Element x = 0; x < g.order(); ++x)
      EXPECT_TRUE(std::any_of(fam.subgroups.begin(), fam.subgroups.end(),
                              [&](const Subgroup& m) { return m.contains(x); }));
  }
}

TEST(CyclicClasses, CorollaryTables) {
  const auto q8 = cyclic_classes(build_group("Q8"));
  EXPECT_EQ(q8.C(1), 1);
  EXPECT_EQ(q8.C(2), 1);
  EXPECT_EQ(q8.C(4), 3);
  EXPECT_EQ(cyclic_classes(build_group("D8")).C(2), 5);
  const auto sd = cyclic_classes(build_group("SD16"));
  EXPECT_EQ(sd.C(2), 5);
  EXPECT_EQ(sd.C(4), 3);
  EXPECT_EQ(sd.C(8), 1);
}

TEST(CyclicClasses, PartitionInvariants) {
  for (const char* s : {"Z12", "D12", "Q12", "Z2 x Z2 x Z2", "Perm[(1 2 3);(1 2)(3 4)]"}) {
    const FiniteGroup g = build_group(s);
    const auto cls = cyclic_classes(g);
    long long sum = 1;
    for (const auto& [d, c] : cls.count)
      if (d > 1) sum += static_cast<long long>(c) * euler_phi(d);
    EXPECT_EQ(sum, g.order()) << s;
    EXPECT_EQ(g.order() % cls.exponent, 0);
    for (std::size_t i = 0; i < cls.classes.size(); ++i)
      EXPECT_EQ(static_cast<long long>(cls.classes[i].size()), euler_phi(cls.class_order[i]));
    for (const auto& [d, t] : cls.tau)
      EXPECT_EQ(static_cast<long long>(t.size()), cls.C(d) * euler_phi(d));
  }
}

TEST(LcmElement, Examples) {
  const FiniteGroup g = build_group("Z4 x Z3");
  const StructureReport r = classify_structure(g);
  const Element x = find_label(g, "(2,1)"), y = find_label(g, "(1,0)");
  ASSERT_EQ(g.elt_order(x), 6);
  ASSERT_EQ(g.elt_order(y), 4);
  const Element z = lcm_element(g, r, x, y);
  EXPECT_EQ(g.label(z), "(1,1)");
  EXPECT_EQ(g.elt_order(z), 12);
  EXPECT_EQ(lcm_element(g, r, g.identity(), y), y);

  const FiniteGroup big = build_group("Z3 x Z3 x Z5 x Z5");
  const StructureReport rb = classify_structure(big);
  Element a = -1, b = -1;
  for (Element v = 0; v < big.order(); ++v) {
    if (a < 0 && big.elt_order(v) == 3) a = v;
    if (b < 0 && big.elt_order(v) == 5) b = v;
  }
  const Element c = lcm_element(big, rb, a, b);
  EXPECT_EQ(big.elt_order(c), 15);
  EXPECT_TRUE(cyclic_subgroup(big, c).contains(a));
  EXPECT_TRUE(cyclic_subgroup(big, c).contains(b));
}

TEST(LowerCentral, Examples) {
  const FiniteGroup e8 = build_group("Z2 x Z2 x Z2");
  const auto l = lower_central_series(e8);
  EXPECT_TRUE(l.term(2).is_trivial());
  EXPECT_FALSE(is_maximal_class(e8, l));

  const FiniteGroup d8 = build_group("D8");
  const auto ld = lower_central_series(d8);
  EXPECT_EQ(ld.term(2).members, labels_to(d8, {"e", "x^2"}));
  EXPECT_TRUE(ld.term(3).is_trivial());
  EXPECT_TRUE(is_maximal_class(d8, ld));

  const FiniteGroup q8 = build_group("Q8");
  const auto lq = lower_central_series(q8);
  EXPECT_EQ(lq.term(2).members, labels_to(q8, {"e", "a^2"}));
  EXPECT_TRUE(lq.term(3).is_trivial());
  EXPECT_TRUE(is_maximal_class(q8, lq));

  EXPECT_FALSE(lower_central_series(build_group("D6")).reaches_trivial());
}

TEST(Classify, Forms) {
  const auto z33 = classify_structure(build_group("Z3 x Z3"));
  EXPECT_EQ(z33.form, NilpotentForm::Form1);
  EXPECT_EQ(z33.components.gprime.size(), 9u);
  EXPECT_EQ(z33.components.zn_order, 1);

  const auto d8 = classify_structure(build_group("D8"));
  EXPECT_EQ(d8.form, NilpotentForm::Form4);
  EXPECT_EQ(d8.components.gprime.size(), 1u);
  EXPECT_EQ(d8.components.zn_order, 1);

  const auto a5 = classify_structure(build_group("Perm[(1 2 3 4 5);(1 2 3)]"));
  EXPECT_EQ(a5.form, NilpotentForm::NotNilpotent);
  EXPECT_FALSE(a5.is_nilpotent);
  EXPECT_TRUE(a5.is_simple);

  EXPECT_EQ(classify_structure(build_group("Z6")).form, NilpotentForm::Cyclic);
  EXPECT_EQ(classify_structure(build_group("Z2 x Z3")).form, NilpotentForm::Cyclic);
  EXPECT_EQ(classify_structure(build_group("Q16")).form, NilpotentForm::Form3);
  EXPECT_EQ(classify_structure(build_group("SD16 x Z3")).form, NilpotentForm::Form5);
  EXPECT_EQ(classify_structure(build_group("Z2 x Z4")).form, NilpotentForm::Form2);
  EXPECT_EQ(classify_structure(build_group("Z2 x Z2 x Z2")).form, NilpotentForm::Form2);
  EXPECT_EQ(classify_structure(build_group("Z3 x Z3 x Z2")).form, NilpotentForm::Form1);
  EXPECT_EQ(classify_structure(build_group("D6")).form, NilpotentForm::NotNilpotent);
  EXPECT_EQ(classify_structure(build_group("Perm[(1 2 3);(1 2)(3 4)]")).form, NilpotentForm::NotNilpotent);
}

TEST(Classify, SimpleOnlyForPrimeCyclicAndA5) {
  EXPECT_TRUE(classify_structure(build_group("Z7")).is_simple);
  EXPECT_FALSE(classify_structure(build_group("Z6")).is_simple);
  EXPECT_FALSE(classify_structure(build_group("Perm[(1 2 3);(1 2)(3 4)]")).is_simple);
  EXPECT_FALSE(classify_structure(build_group("Perm[(1 2 3 4);(1 2)]")).is_simple);
}

TEST(NumberTheory, Basics) {
  EXPECT_EQ(euler_phi(1), 1);
  EXPECT_EQ(euler_phi(12), 4);
  EXPECT_EQ(euler_phi(64), 32);
  EXPECT_TRUE(is_prime(61));
  EXPECT_FALSE(is_prime(1));
  EXPECT_EQ(valuation(48, 2), 4);
  EXPECT_EQ(prime_part(48, 3), 3);
}
