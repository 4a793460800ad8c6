#include <gtest/gtest.h>

#include <algorithm>

#include "fkdeg/generators.hpp"
#include "fkdeg/graph.hpp"
#include "test_util.hpp"

using namespace fkdeg;
using fkdeg::test::graph_of;

namespace {

int parse_error_line(const std::string &text) {
  try {
    parse_graph(text);
  } catch (const parse_error &e) {
    return e.line();
  }
  return -1;
}

} // namespace

TEST(ParseGraph, SingleEdge) {
  auto g = parse_graph("2 1\n0 1");
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.size(), 1);
  EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(ParseGraph, PathWithCommentsAndTrailingNewline) {
  auto g = parse_graph("# P4\n4 3\n0 1\n# middle\n1 2\n2 3\n");
  EXPECT_EQ(g, path_graph(4));
}

TEST(ParseGraph, RejectsSelfLoopWithLine) {
  EXPECT_EQ(parse_error_line("3 3\n0 0\n0 1\n1 2\n"), 2);
}

TEST(ParseGraph, ErrorPaths) {
  EXPECT_EQ(parse_error_line("x y\n"), 1);
  EXPECT_EQ(parse_error_line("3 1\n0 3\n"), 2);          // out of range
  EXPECT_EQ(parse_error_line("3 2\n0 1\n0 1\n"), 3);     // duplicate
  EXPECT_EQ(parse_error_line("3 1\n1 0\n"), 2);          // u > v
  EXPECT_EQ(parse_error_line("3 1\n0  1\n"), 2);         // double space
  EXPECT_EQ(parse_error_line("3 1\n0\t1\n"), 2);         // tab separator
  EXPECT_EQ(parse_error_line("3 1\n-1 1\n"), 2);         // sign
  EXPECT_EQ(parse_error_line("3 2\n0 1\n"), 2);          // too few edges
  EXPECT_EQ(parse_error_line("3 1\n0 1\n1 2\n"), 3);     // too many edges
  EXPECT_EQ(parse_error_line("# nothing\n"), 1);         // missing header
  EXPECT_EQ(parse_error_line("2 5\n"), 1);               // impossible m
}

TEST(ParseGraph, RoundTripProperty) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto g = test::random_graph(1 + static_cast<int>(seed % 13), 0.3, seed);
    EXPECT_EQ(parse_graph(to_edge_list(g)), g);
  }
}

TEST(DegreeProfile, Examples) {
  EXPECT_EQ(degree_profile(star_graph(3)).deltas, (std::vector<int>{3, 1, 1, 1}));
  EXPECT_EQ(degree_profile(empty_graph(4)).deltas, (std::vector<int>{0, 0, 0, 0}));
  // K_{1,1} u K_{1,3} u K_{1,3}
  auto f3 = graph_of(10, {{0, 1}, {2, 3}, {2, 4}, {2, 5}, {6, 7}, {6, 8}, {6, 9}});
  auto p = degree_profile(f3);
  EXPECT_EQ(p.deltas, (std::vector<int>{3, 3, 1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(p.witness(1), 2);
  EXPECT_EQ(p.witness(2), 6);
  EXPECT_EQ(p.witness(3), 0); // ties by ascending id
}

TEST(DegreeProfile, Invariants) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto g = test::random_graph(12, 0.25, seed);
    auto p = degree_profile(g);
    int sum = 0;
    for (std::size_t i = 0; i < p.length(); ++i) {
      sum += p.deltas[i];
      EXPECT_EQ(g.degree(p.witnesses[i]), p.deltas[i]);
      if (i > 0) {
        EXPECT_GE(p.deltas[i - 1], p.deltas[i]);
        if (p.deltas[i - 1] == p.deltas[i])
          EXPECT_LT(p.witnesses[i - 1], p.witnesses[i]);
      }
    }
    EXPECT_EQ(sum, 2 * g.size());
    auto w = p.witnesses;
    std::sort(w.begin(), w.end());
    EXPECT_EQ(std::adjacent_find(w.begin(), w.end()), w.end());
  }
}

TEST(Girth, Examples) {
  EXPECT_EQ(girth(cycle_graph(5)), 5);
  EXPECT_EQ(girth(cycle_graph(3)), 3);
  EXPECT_EQ(girth(path_graph(6)), std::nullopt);
  EXPECT_EQ(girth(empty_graph(3)), std::nullopt);
  // Cycle enumeration gives 5 for the Petersen graph.
  EXPECT_EQ(girth(petersen_graph()), 5);
  // C4 with a pendant triangle elsewhere.
  EXPECT_EQ(girth(graph_of(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 4}})), 3);
  EXPECT_EQ(girth(graph_of(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}})), 4);
}

TEST(Girth, DeletionNeverShortensGirth) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto g = test::random_graph(10, 0.3, seed);
    SplitMix64 rng(seed * 7);
    std::vector<Vertex> xs;
    for (Vertex v = 0; v < g.order(); ++v)
      if (rng.chance(0.3))
        xs.push_back(v);
    auto before = girth(g);
    auto after = girth(remove_vertices(g, xs).graph);
    if (!before)
      EXPECT_EQ(after, std::nullopt);
    else if (after)
      EXPECT_GE(*after, *before);
  }
}

TEST(Structure, ForestsAndComponents) {
  EXPECT_TRUE(is_forest(path_graph(4)));
  EXPECT_EQ(components(path_graph(4)).size(), 1u);
  EXPECT_FALSE(is_forest(cycle_graph(5)));
  auto g = disjoint_union(star_graph(3), path_graph(2));
  EXPECT_TRUE(is_forest(g));
  auto comps = components(g);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(comps[1], (std::vector<Vertex>{4, 5}));
}

TEST(Structure, ForestIffAcyclic) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    auto g = test::random_graph(9, 0.2, seed);
    EXPECT_EQ(is_forest(g), !girth(g).has_value());
  }
}

TEST(RemoveVertices, Examples) {
  auto star = remove_vertices(star_graph(3), std::vector<Vertex>{0});
  EXPECT_EQ(star.graph, empty_graph(3));
  EXPECT_EQ(star.new_to_old, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(star.old_to_new, (std::vector<Vertex>{-1, 0, 1, 2}));

  EXPECT_EQ(remove_vertices(path_graph(4), {}).graph, path_graph(4));

  auto p = remove_vertices(path_graph(4), std::vector<Vertex>{1});
  EXPECT_EQ(p.graph, graph_of(3, {{1, 2}})); // K1 u K2
  EXPECT_THROW(remove_vertices(path_graph(4), std::vector<Vertex>{4}), std::out_of_range);
}

TEST(RemoveVertices, OrderInsensitive) {
  auto g = test::random_graph(10, 0.3, 99);
  std::vector<Vertex> a{7, 1, 4}, b{4, 7, 1};
  EXPECT_EQ(remove_vertices(g, a).graph, remove_vertices(g, b).graph);
}

TEST(CheckFk, Examples) {
  EXPECT_TRUE(check_fk_condition(star_graph(3), std::vector<Vertex>{0}, 3));
  EXPECT_TRUE(check_fk_condition(path_graph(4), {}, 2));
  EXPECT_FALSE(check_fk_condition(star_graph(3), {}, 2));
}

TEST(CheckFk, KeepingFewerThanKAlwaysWorks) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto g = test::random_graph(8, 0.4, seed);
    for (int k = 2; k <= 4; ++k) {
      std::vector<Vertex> xs;
      for (Vertex v = k - 1; v < g.order(); ++v)
        xs.push_back(v);
      EXPECT_TRUE(check_fk_condition(g, xs, k));
    }
  }
}
