#include <gtest/gtest.h>

#include "epglab/epg.hpp"
#include "epglab/finite_group.hpp"
#include "epglab/labeling.hpp"
#include "epglab/oracle.hpp"
#include "epglab/random_graphs.hpp"

using namespace epglab;

namespace {

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

int exact(const Graph& g) {
  const auto c = lambda_exact(g);
  EXPECT_TRUE(c.is_exact());
  EXPECT_TRUE(c.labeling.has_value());
  if (c.labeling) {
    EXPECT_TRUE(verify_labeling(g, *c.labeling));
    EXPECT_EQ(c.labeling->span(), c.value);
  }
  return c.value;
}

}  // namespace

TEST(VerifyLabeling, Examples) {
  EXPECT_TRUE(verify_labeling(complete_graph(3), {{0, 2, 4}}));
  const Labeling ok{{0, 2, 3, 4}};
  EXPECT_TRUE(verify_labeling(star(3), ok));
  EXPECT_EQ(ok.span(), 4);
  EXPECT_FALSE(verify_labeling(star(3), {{0, 2, 2, 4}}));
  EXPECT_FALSE(verify_labeling(complete_graph(2), {{0, 1}}));
  EXPECT_THROW(verify_labeling(star(3), {{0, 2}}), InputError);
  EXPECT_FALSE(verify_labeling(complete_graph(2), {{-1, 3}}));
}

TEST(Labeling, Normalize) {
  Labeling f{{3, 5, 7}};
  f.normalize();
  EXPECT_EQ(f.labels, (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(f.span(), 4);
}

TEST(LambdaExact, Examples) {
  EXPECT_EQ(exact(complete_graph(6)), 10);
  EXPECT_EQ(exact(enhanced_power_graph(build_group("Z2 x Z2"))), 4);
  EXPECT_EQ(exact(enhanced_power_graph(build_group("Q8"))), 9);
}

TEST(LambdaExact, KnownFamilies) {
  EXPECT_EQ(exact(Graph(0)), 0);
  EXPECT_EQ(exact(Graph(1)), 0);
  EXPECT_EQ(exact(Graph(5)), 0);
  EXPECT_EQ(exact(path_graph(2)), 2);
  EXPECT_EQ(exact(path_graph(3)), 3);
  EXPECT_EQ(exact(path_graph(4)), 3);
  EXPECT_EQ(exact(path_graph(5)), 4);
  EXPECT_EQ(exact(path_graph(12)), 4);
  for (int n = 3; n <= 9; ++n) EXPECT_EQ(exact(cycle_graph(n)), 4) << n;
  for (int k = 1; k <= 8; ++k) EXPECT_EQ(exact(star(k)), k + 1) << k;
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(exact(complete_graph(n)), 2 * n - 2) << n;
  EXPECT_EQ(exact(petersen()), 9);
}

TEST(LambdaExact, DisconnectedTakesMaxOfComponents) {
  Graph g(7);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);  // K3 -> 4
  g.add_edge(3, 4);  // K2 -> 2
  EXPECT_EQ(exact(g), 4);
}

TEST(LambdaExact, GroupGraphs) {
  EXPECT_EQ(exact(enhanced_power_graph(build_group("D8"))), 8);
  EXPECT_EQ(exact(enhanced_power_graph(build_group("SD16"))), 16);
  EXPECT_EQ(exact(enhanced_power_graph(build_group("Q16"))), 17);
  EXPECT_EQ(exact(enhanced_power_graph(build_group("D6"))), 6);
  EXPECT_EQ(exact(enhanced_power_graph(build_group("Z3 x Z3"))), 9);
}

TEST(LambdaExact, MatchesOracleOnRandomGraphs) {
  for (const auto& g : random_graph_suite(7, 120, 9)) {
    const int ex = exact(g);
    EXPECT_EQ(ex, lambda_bruteforce(g, 2 * 9 + 2 * 9 * 9).value);
  }
}

TEST(LambdaExact, BudgetGivesBoundsOnly) {
  SolverOptions opt;
  opt.time_budget_seconds = 0;
  // a 40-vertex sparse graph cannot be finished in zero time
  Graph big(40);
  for (int u = 0; u < 40; ++u)
    for (int v = u + 1; v < 40; ++v)
      if ((u * 31 + v * 17) % 7 == 0) big.add_edge(u, v);
  const auto c = lambda_exact(big, opt);
  EXPECT_EQ(c.method, Method::BoundsOnly);
  EXPECT_LE(c.lower, c.upper);
  ASSERT_TRUE(c.labeling.has_value());
  EXPECT_TRUE(verify_labeling(big, *c.labeling));
  EXPECT_EQ(c.labeling->span(), c.upper);
}

TEST(LambdaExact, TooLargeGivesBoundsOnly) {
  const Graph g = enhanced_power_graph(build_group("Z3 x Z3 x Z2 x Z2 x Z2"));  // 72 vertices
  const auto c = lambda_exact(g);
  EXPECT_EQ(c.method, Method::BoundsOnly);
  EXPECT_LE(c.lower, c.upper);
}

TEST(LowerBounds, CliqueAndDegree) {
  EXPECT_EQ(lambda_lower_bound_graph(complete_graph(5)), 8);
  EXPECT_EQ(lambda_lower_bound_graph(star(6)), 7);
  EXPECT_EQ(greedy_clique(complete_graph(4)).size(), 4u);
  for (const auto& g : random_graph_suite(5, 40, 12)) {
    const Labeling f = greedy_labeling(g);
    EXPECT_TRUE(verify_labeling(g, f));
    EXPECT_LE(lambda_lower_bound_graph(g), f.span());
  }
}

TEST(LambdaExact, Deterministic) {
  const Graph g = enhanced_power_graph(build_group("D12"));
  const auto a = lambda_exact(g), b = lambda_exact(g);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.labeling->labels, b.labeling->labels);
}
