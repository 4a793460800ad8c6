#include <gtest/gtest.h>

#include <set>

#include "fkdeg/enumerate.hpp"
#include "fkdeg/generators.hpp"

using namespace fkdeg;

TEST(SplitMix64, ReferenceStream) {
  // First outputs for seed 0 from the reference implementation.
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.next(), 0x06c45d188009454fULL);
}

TEST(SplitMix64, BoundedDraws) {
  SplitMix64 rng(42);
  for (int i = 0; i < 10000; ++i) {
    EXPECT_LT(rng.below(7), 7u);
    double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    int b = rng.between(-3, 3);
    EXPECT_GE(b, -3);
    EXPECT_LE(b, 3);
  }
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_EQ(derive_seed(9, 4), derive_seed(9, 4));
}

TEST(RandomForest, DeterministicForest) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    ForestProfile p;
    p.split = 0.2;
    auto a = gen_random_forest(30, p, seed);
    EXPECT_EQ(a, gen_random_forest(30, p, seed));
    EXPECT_TRUE(is_forest(a));
    EXPECT_EQ(a.order(), 30);
  }
  EXPECT_NE(gen_random_forest(30, {}, 1), gen_random_forest(30, {}, 2));
}

TEST(RandomForest, DegreeCap) {
  ForestProfile p;
  p.max_degree = 2;
  p.hub_bias = 0.9;
  for (std::uint64_t seed = 0; seed < 30; ++seed)
    EXPECT_LE(gen_random_forest(40, p, seed).max_degree(), 2);
}

TEST(RandomGirth5, HasGirthFive) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = gen_random_girth5(16, 18, seed);
    EXPECT_EQ(g.size(), 18);
    auto gi = girth(g);
    EXPECT_TRUE(!gi || *gi >= 5);
    EXPECT_EQ(g, gen_random_girth5(16, 18, seed));
  }
}

TEST(RandomGirth5, SaturationReported) {
  // Girth-5 graphs on 5 vertices have at most 5 edges.
  EXPECT_THROW(gen_random_girth5(5, 6, 1), generation_error);
}

TEST(Families, Shapes) {
  EXPECT_EQ(path_graph(4).size(), 3);
  EXPECT_EQ(cycle_graph(5).size(), 5);
  EXPECT_EQ(star_graph(3).degree(0), 3);
  auto pg = petersen_graph();
  EXPECT_EQ(pg.order(), 10);
  EXPECT_EQ(pg.size(), 15);
  for (Vertex v = 0; v < 10; ++v)
    EXPECT_EQ(pg.degree(v), 3);
}

TEST(Enumerate, Counts) {
  const int trees[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  const int forests[] = {1, 2, 3, 6, 10, 20, 37, 76, 153, 329};
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(static_cast<int>(all_trees(n).size()), trees[n - 1]) << n;
    EXPECT_EQ(static_cast<int>(all_forests(n).size()), forests[n - 1]) << n;
  }
}

TEST(Enumerate, ForestsAreDistinctAndValid) {
  std::set<std::vector<std::string>> seen;
  for (const auto &f : all_forests(8)) {
    ASSERT_TRUE(is_forest(f));
    ASSERT_EQ(f.order(), 8);
    std::vector<std::string> key;
    for (const auto &c : components(f)) {
      auto sub = remove_vertices(f, [&] {
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < f.order(); ++v)
          if (std::find(c.begin(), c.end(), v) == c.end())
            rest.push_back(v);
        return rest;
      }());
      key.push_back(detail::free_tree_code(sub.graph));
    }
    std::sort(key.begin(), key.end());
    EXPECT_TRUE(seen.insert(key).second);
  }
}
