#include <gtest/gtest.h>

#include "fkdeg/harness.hpp"

using namespace fkdeg;

namespace {

std::vector<GeneratorConfig> small_corpus() {
  auto j = nlohmann::json::parse(R"([
    {"kind": "random-forest", "n": 6, "n_max": 12, "seed": 7, "count": 8, "split": 0.2},
    {"kind": "random-girth5", "n": 10, "m": 12, "seed": 3, "count": 4},
    {"kind": "extremal-Ft", "t": 2, "t_max": 4},
    {"kind": "star-union", "sizes": [4, 2, 1]}
  ])");
  std::vector<GeneratorConfig> out;
  for (const auto &c : j)
    out.push_back(config_from_json(c));
  return out;
}

} // namespace

TEST(SolveExact, DispatchesByShape) {
  auto f = solve_exact(path_graph(4), 3);
  EXPECT_EQ(f.value, 2);
  EXPECT_EQ(f.certificate.method, Method::dp);
  auto c = solve_exact(cycle_graph(5), 3);
  EXPECT_EQ(c.value, 0);
  EXPECT_EQ(c.certificate.method, Method::brute);
  SolveOptions o;
  o.method = SolveMethod::brute;
  EXPECT_EQ(solve_exact(path_graph(4), 3, o).certificate.method, Method::brute);
}

TEST(SolveExact, SizeGuards) {
  EXPECT_THROW(solve_exact(cycle_graph(30), 2), limit_error);
  EXPECT_THROW(solve_exact(path_graph(dp_size_limit(3) + 1), 3), limit_error);
  SolveOptions o;
  o.allow_large = true;
  EXPECT_EQ(solve_exact(path_graph(dp_size_limit(2) + 1), 2, o).value, 0);
}

TEST(Corpus, ConfigParsing) {
  auto c = config_from_json(nlohmann::json::parse(R"({"kind": "random-forest", "n": 5})"));
  EXPECT_EQ(c.n, 5);
  EXPECT_EQ(c.count, 1);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"kind": "cube"})")),
               std::invalid_argument);
}

TEST(Corpus, ExpansionIsSeeded) {
  auto corpus = small_corpus();
  auto a = expand(corpus[0], 0);
  auto b = expand(corpus[0], 0);
  ASSERT_EQ(a.size(), 8u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].graph, b[i].graph);
    EXPECT_EQ(a[i].id, "random-forest#0." + std::to_string(i));
  }
  auto ft = expand(corpus[2], 2);
  ASSERT_EQ(ft.size(), 3u);
  EXPECT_EQ(ft[0].id, "extremal-Ft#2.t2");
  EXPECT_EQ(ft[2].family_t, 4);
}

TEST(Verify, AllClaimsPassOnSmallCorpus) {
  VerifyOptions o;
  o.claims = known_claims();
  auto run = run_verification(small_corpus(), o);
  EXPECT_EQ(run.summary.fail, 0) << run_csv(run);
  EXPECT_GT(run.summary.pass, 0);
  int total = 0;
  for (const auto &r : run.results)
    total += static_cast<int>(r.entries.size());
  EXPECT_EQ(total, run.summary.pass + run.summary.fail + run.summary.skip);
}

TEST(Verify, JobsGiveIdenticalCsv) {
  VerifyOptions o;
  o.claims = known_claims();
  auto one = run_csv(run_verification(small_corpus(), o));
  o.jobs = 4;
  EXPECT_EQ(one, run_csv(run_verification(small_corpus(), o)));
}

TEST(Verify, EmptyCorpus) {
  auto run = run_verification({}, VerifyOptions{});
  EXPECT_TRUE(run.results.empty());
  EXPECT_EQ(run_csv(run), "instance,kind,seed,n,m,k,f_k,method,X,claim,verdict,hypothesis,conclusion\n"
                          "# summary,pass=0,fail=0,skip=0\n");
}

TEST(Verify, UnknownClaimRejected) {
  VerifyOptions o;
  o.claims = {"thm9"};
  EXPECT_THROW(run_verification(small_corpus(), o), std::invalid_argument);
}

TEST(Verify, GeneratorFailureIsSkip) {
  GeneratorConfig c;
  c.kind = "random-girth5";
  c.n = 5;
  c.m = 9;
  VerifyOptions o;
  o.ks = {2};
  auto run = run_verification({c}, o);
  ASSERT_EQ(run.results.size(), 1u);
  EXPECT_EQ(run.summary.skip, 1);
  EXPECT_EQ(run.summary.fail, 0);
}

TEST(Verify, ExtremalFamilyAtTOneIsFlagged) {
  // F_1 is a single edge, so f_3 = 0 rather than 1.
  GeneratorConfig c;
  c.kind = "extremal-Ft";
  c.t = 1;
  VerifyOptions o;
  o.claims = {"lemma2"};
  o.ks = {3};
  auto run = run_verification({c}, o);
  EXPECT_EQ(run.summary.fail, 1);
}

TEST(Serialization, ResultJsonKeys) {
  auto g = path_graph(4);
  auto s = solve_exact(g, 3);
  auto j = result_json(g, 3, s.value, s.certificate, 1.5);
  for (const char *key : {"n", "m", "k", "f_k", "method", "X", "residual_max_degree", "witnesses",
                          "order_below_k", "elapsed_ms"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["X"], nlohmann::json(s.certificate.removed));
  EXPECT_EQ(j["f_k"], 2);
  EXPECT_EQ(csv_quote("a\"b"), "\"a\"\"b\"");
}
