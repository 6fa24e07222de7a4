#include <gtest/gtest.h>

#include <algorithm>

#include "epglab/epg.hpp"
#include "epglab/finite_group.hpp"
#include "epglab/oracle.hpp"
#include "epglab/path_cover.hpp"
#include "epglab/random_graphs.hpp"

using namespace epglab;

TEST(Hamiltonian, Examples) {
  const auto k4 = hamiltonian_path(complete_graph(4));
  EXPECT_EQ(k4.status, PathStatus::Found);
  EXPECT_EQ(k4.path.size(), 4u);
  EXPECT_TRUE(verify_path(complete_graph(4), k4.path));
  EXPECT_EQ(hamiltonian_path(Graph(2)).status, PathStatus::Absent);

  const FiniteGroup q8 = build_group("Q8");
  const Graph epg = enhanced_power_graph(q8);
  std::vector<int> nondom;
  for (int v = 0; v < 8; ++v)
    if (epg.degree(v) != 7) nondom.push_back(v);
  const Graph k222 = complement(induced_subgraph(epg, nondom));
  const auto r = hamiltonian_path(k222);
  ASSERT_EQ(r.status, PathStatus::Found);
  EXPECT_EQ(r.path.size(), 6u);
  EXPECT_TRUE(verify_path(k222, r.path));
}

TEST(Hamiltonian, Endpoints) {
  Graph p(4);
  p.add_edge(0, 1);
  p.add_edge(1, 2);
  p.add_edge(2, 3);
  const auto r = hamiltonian_path(p, SearchMode::Exact, {3, std::nullopt});
  ASSERT_EQ(r.status, PathStatus::Found);
  EXPECT_EQ(r.path, (std::vector<int>{3, 2, 1, 0}));
  EXPECT_EQ(hamiltonian_path(p, SearchMode::Exact, {1, std::nullopt}).status, PathStatus::Absent);
  EXPECT_EQ(hamiltonian_path(p, SearchMode::Exact, {0, 3}).status, PathStatus::Found);
  EXPECT_THROW(hamiltonian_path(p, SearchMode::Exact, {7, std::nullopt}), InputError);
}

TEST(Hamiltonian, ExactAgreesWithPermutationSearch) {
  for (const auto& g : random_graph_suite(9, 150, 8)) {
    std::vector<int> order(g.size());
    for (int i = 0; i < g.size(); ++i) order[i] = i;
    bool any = false;
    do {
      any = verify_path(g, order);
    } while (!any && std::next_permutation(order.begin(), order.end()));
    const auto r = hamiltonian_path(g, SearchMode::Exact);
    EXPECT_EQ(r.status == PathStatus::Found, any);
    if (r.status == PathStatus::Found) {
      EXPECT_TRUE(verify_path(g, r.path));
    }
  }
}

TEST(Hamiltonian, HeuristicAgreesWithExact) {
  for (const auto& g : random_graph_suite(21, 80, 12)) {
    const auto ex = hamiltonian_path(g, SearchMode::Exact);
    const auto he = hamiltonian_path(g, SearchMode::Heuristic);
    EXPECT_EQ(ex.status, he.status);
    if (he.status == PathStatus::Found) {
      EXPECT_TRUE(verify_path(g, he.path));
    }
  }
}

TEST(Hamiltonian, HeuristicOnLargeGraph) {
  const FiniteGroup a5 = build_group("Perm[(1 2 3 4 5);(1 2 3)]");
  const Graph c = complement(enhanced_power_graph(a5));
  std::vector<int> rest;
  for (int v = 1; v < 60; ++v) rest.push_back(v);
  const Graph h = induced_subgraph(c, rest);
  const auto r = hamiltonian_path(h, SearchMode::Heuristic);
  ASSERT_EQ(r.status, PathStatus::Found);
  EXPECT_TRUE(verify_path(h, r.path));
  EXPECT_THROW(hamiltonian_path(h, SearchMode::Exact), LimitError);
}

TEST(PathCover, Examples) {
  EXPECT_EQ(path_cover_min(Graph(5)).size(), 5);
  EXPECT_EQ(path_cover_min(complete_graph(5)).size(), 1);
  const Graph c = complement(enhanced_power_graph(build_group("Z2 x Z2")));
  const PathCovering pc = path_cover_min(c);
  EXPECT_EQ(pc.size(), 2);
  EXPECT_TRUE(verify_path_covering(c, pc));
  EXPECT_EQ(path_cover_min(Graph(0)).size(), 0);
}

TEST(PathCover, MatchesOracle) {
  for (const auto& g : random_graph_suite(4, 150, 9)) {
    const PathCovering pc = path_cover_min(g);
    EXPECT_TRUE(verify_path_covering(g, pc));
    EXPECT_EQ(pc.size(), path_cover_bruteforce(g).value);
    const PathCovering up = path_cover_min(g, CoverMode::Upper);
    EXPECT_TRUE(verify_path_covering(g, up));
    EXPECT_GE(up.size(), pc.size());
  }
}

TEST(PathCover, ExactLimit) {
  EXPECT_THROW(path_cover_min(Graph(kExactSubsetLimit + 1)), LimitError);
  EXPECT_EQ(path_cover_min(Graph(kExactSubsetLimit + 1), CoverMode::Upper).size(), kExactSubsetLimit + 1);
}

TEST(LambdaViaCover, Examples) {
  const auto kn = lambda_via_path_cover(complete_graph(6));
  EXPECT_EQ(kn.method, Method::PathCover);
  EXPECT_EQ(kn.value, 10);
  const auto v4 = lambda_via_path_cover(enhanced_power_graph(build_group("Z2 x Z2")));
  EXPECT_EQ(v4.value, 4);
  EXPECT_EQ(v4.cover->size(), 2);
  const auto q8 = lambda_via_path_cover(enhanced_power_graph(build_group("Q8")));
  EXPECT_EQ(q8.cover->size(), 3);
  EXPECT_EQ(q8.value, 9);
  EXPECT_TRUE(verify_labeling(enhanced_power_graph(build_group("Q8")), *q8.labeling));
}

TEST(LambdaViaCover, SingleComplementPath) {
  // P6: the complement of a path with 6 vertices has a Hamiltonian path, but lambda(P6) = 4 < n - 1
  Graph p6(6);
  for (int v = 0; v < 5; ++v) p6.add_edge(v, v + 1);
  const auto c = lambda_via_path_cover(p6);
  EXPECT_EQ(c.method, Method::BoundsOnly);
  EXPECT_EQ(c.upper, 5);
  // C5: diameter 2 and c = 1, so lambda = n - 1 exactly
  Graph c5(5);
  for (int v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
  const auto d = lambda_via_path_cover(c5);
  EXPECT_EQ(d.method, Method::PathCover);
  EXPECT_EQ(d.value, 4);
}

TEST(LambdaViaCover, LabelingFromCover) {
  PathCovering c;
  c.paths = {{2, 0}, {1}};
  const Labeling f = labeling_from_complement_cover(3, c);
  EXPECT_EQ(f.labels[2], 0);
  EXPECT_EQ(f.labels[0], 1);
  EXPECT_EQ(f.labels[1], 3);
}
