#include <gtest/gtest.h>

#include "fkdeg/bounds.hpp"
#include "fkdeg/constructive.hpp"
#include "fkdeg/forest_dp.hpp"
#include "fkdeg/generators.hpp"
#include "fkdeg/oracle.hpp"
#include "test_util.hpp"

using namespace fkdeg;
using fkdeg::test::graph_of;

namespace {

precondition_error::kind kind_of(auto &&fn) {
  try {
    fn();
  } catch (const precondition_error &e) {
    return e.which();
  }
  ADD_FAILURE() << "no precondition_error";
  return precondition_error::kind::parameter;
}

} // namespace

TEST(Peel, AlreadySatisfiedIsEmpty) {
  auto c = peel_removal(path_graph(5), 2);
  EXPECT_TRUE(c.removed.empty());
  EXPECT_EQ(c.method, Method::peel);
}

TEST(Peel, AlwaysValidAndSmallWhenDegreesAreLow) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    auto g = test::random_graph(12, 0.2, seed);
    auto prof = degree_profile(g);
    for (int k = 2; k <= 4; ++k) {
      auto c = peel_removal(g, k);
      EXPECT_TRUE(validate_certificate(g, c, k)) << seed;
      if (prof.delta(static_cast<std::size_t>(k)) < k - 1) {
        EXPECT_LE(c.size(), (k - 1) * (k - 1));
      }
    }
  }
}

TEST(Girth5Equalize, Star) {
  auto c = girth5_equalize(star_graph(4), 2, 3);
  EXPECT_EQ(c.removed, (std::vector<Vertex>{2, 3, 4}));
  EXPECT_TRUE(validate_certificate(star_graph(4), c, 2));
}

TEST(Girth5Equalize, Preconditions) {
  using kind = precondition_error::kind;
  EXPECT_EQ(kind_of([] { girth5_equalize(cycle_graph(4), 2, 5); }), kind::girth);
  EXPECT_EQ(kind_of([] { girth5_equalize(path_graph(5), 3, 3); }), kind::parameter);
  EXPECT_EQ(kind_of([] { girth5_equalize(path_graph(5), 1, 3); }), kind::parameter);
  EXPECT_EQ(kind_of([] { girth5_equalize(star_graph(6), 2, 4); }), kind::degree_inequality);
}

TEST(Girth5Equalize, PetersenNeedsNothing) {
  auto c = girth5_equalize(petersen_graph(), 3, 4);
  EXPECT_TRUE(c.removed.empty());
}

TEST(Girth5Equalize, SizeBoundedByExcess) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    SplitMix64 rng(seed);
    int n = rng.between(6, 16);
    Graph g(0);
    try {
      g = gen_random_girth5(n, rng.between(n / 2, n + 4), rng.next());
    } catch (const generation_error &) {
      continue;
    }
    for (int k = 2; k <= 3; ++k) {
      auto prof = degree_profile(g);
      long long t = std::max<long long>(top_degree_excess(prof, k), (k - 1) * (k - 1));
      auto c = girth5_equalize(g, k, t);
      ASSERT_TRUE(validate_certificate(g, c, k)) << seed << "\n" << to_edge_list(g);
      EXPECT_LE(c.size(), t);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Equalize3, Preconditions) {
  using kind = precondition_error::kind;
  EXPECT_EQ(kind_of([] { equalize3_forest(path_graph(4), 1); }), kind::parameter);
  EXPECT_EQ(kind_of([] { equalize3_forest(cycle_graph(5), 3); }), kind::not_forest);
  // F_3 has Delta_1 + 2 Delta_2 = 9 > C(4,2) + 2.
  EXPECT_EQ(kind_of([] { equalize3_forest(build_extremal_forest(3), 2); }), kind::degree_inequality);
}

TEST(Equalize3, CertificateWithinBudget) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    auto f = test::varied_forest(4 + static_cast<int>(seed % 20), seed * 17);
    auto lhs = theorem2_lhs(degree_profile(f));
    for (int t = 2; t <= 7; ++t) {
      if (lhs > bound_theorem2(t))
        continue;
      auto c = equalize3_forest(f, t);
      ASSERT_TRUE(validate_certificate(f, c, 3)) << seed << " t=" << t << "\n" << to_edge_list(f);
      ASSERT_LE(c.size(), t) << seed << " t=" << t << "\n" << to_edge_list(f);
      ++checked;
    }
  }
  EXPECT_GT(checked, 300);
}

TEST(Equalize3, StarUnionsAtTheCap) {
  // Two equal stars joined with a K_2 sit right at the cap for small t.
  for (int t = 2; t <= 8; ++t) {
    for (std::int64_t a = 1; a <= 12; ++a)
      for (std::int64_t b = 1; b <= a; ++b) {
        std::vector<std::int64_t> leaves{a, b, 1};
        auto f = star_union(leaves);
        if (theorem2_lhs(degree_profile(f)) > bound_theorem2(t))
          continue;
        auto c = equalize3_forest(f, t);
        EXPECT_TRUE(validate_certificate(f, c, 3));
        EXPECT_LE(c.size(), t);
        EXPECT_GE(c.size(), compute_fk_forest(f, 3).value);
      }
  }
}
