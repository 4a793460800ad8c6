#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "fkdeg/bounds.hpp"
#include "fkdeg/certificate.hpp"
#include "fkdeg/constructive.hpp"
#include "fkdeg/forest_dp.hpp"
#include "fkdeg/generators.hpp"
#include "fkdeg/graph.hpp"
#include "fkdeg/oracle.hpp"

namespace fkdeg {

// ---------------------------------------------------------------------------
// Exact solving with size guards
// ---------------------------------------------------------------------------

enum class SolveMethod { dp, brute, automatic };

/// Largest forest order the DP accepts for k without an explicit override.
inline int dp_size_limit(int k) { return k <= 2 ? 150 : k == 3 ? 90 : 40; }

struct SolveOptions {
  SolveMethod method = SolveMethod::automatic;
  bool allow_large = false;
  int oracle_limit = kDefaultOracleLimit;
  int jobs = 1;
  Deadline deadline;
};

struct SolveResult {
  int value = 0;
  RemovalCertificate certificate;
  double elapsed_ms = 0;
};

/// Throws limit_error when the instance is outside every permitted method.
inline SolveResult solve_exact(const Graph &g, int k, const SolveOptions &opt = {}) {
  auto start = std::chrono::steady_clock::now();
  SolveResult out;
  bool forest = is_forest(g);
  bool use_dp = opt.method == SolveMethod::dp || (opt.method == SolveMethod::automatic && forest);
  if (use_dp) {
    if (!forest)
      throw precondition_error(precondition_error::kind::not_forest,
                               "the DP method needs a forest");
    if (!opt.allow_large && g.order() > dp_size_limit(k))
      throw limit_error(g.order(), dp_size_limit(k));
    ForestDpOptions dopt;
    dopt.jobs = opt.jobs;
    dopt.deadline = opt.deadline;
    auto r = compute_fk_forest(g, k, dopt);
    out.value = r.value;
    out.certificate = std::move(r.certificate);
  } else {
    auto r = brute_force_fk(g, k, opt.oracle_limit, opt.deadline);
    out.value = r.value;
    out.certificate = std::move(r.certificate);
  }
  out.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// ---------------------------------------------------------------------------
// Corpus description
// ---------------------------------------------------------------------------

/// One line of a corpus: how to produce `count` instances.
struct GeneratorConfig {
  std::string kind = "random-forest"; // random-forest | random-girth5 | star-union | extremal-Ft | path | star
  int n = 10;
  std::optional<int> n_max; // draw n uniformly from [n, n_max]
  std::optional<int> m;
  std::uint64_t seed = 1;
  int count = 1;
  ForestProfile profile;
  std::optional<int> t;      // extremal-Ft
  std::optional<int> t_max;  // extremal-Ft ranges
  std::vector<std::int64_t> sizes; // star-union
};

struct Instance {
  std::string id;
  std::string kind;
  std::uint64_t seed = 0;
  Graph graph;
  std::optional<int> family_t;
  std::string error; // generator failure, graph is empty then
};

inline GeneratorConfig config_from_json(const nlohmann::json &j) {
  GeneratorConfig c;
  c.kind = j.value("kind", c.kind);
  c.n = j.value("n", c.n);
  if (j.contains("n_max"))
    c.n_max = j.at("n_max").get<int>();
  if (j.contains("m"))
    c.m = j.at("m").get<int>();
  c.seed = j.value("seed", c.seed);
  c.count = j.value("count", c.count);
  c.profile.split = j.value("split", c.profile.split);
  c.profile.hub_bias = j.value("hub_bias", c.profile.hub_bias);
  c.profile.max_degree = j.value("max_degree", c.profile.max_degree);
  if (j.contains("t"))
    c.t = j.at("t").get<int>();
  if (j.contains("t_max"))
    c.t_max = j.at("t_max").get<int>();
  if (j.contains("sizes"))
    c.sizes = j.at("sizes").get<std::vector<std::int64_t>>();
  static const std::vector<std::string> kinds{"random-forest", "random-girth5", "star-union",
                                              "extremal-Ft",   "path",          "star"};
  if (std::find(kinds.begin(), kinds.end(), c.kind) == kinds.end())
    throw std::invalid_argument("unknown generator kind '" + c.kind + "'");
  return c;
}

inline std::vector<Instance> expand(const GeneratorConfig &c, std::size_t config_index) {
  std::vector<Instance> out;
  auto base_id = c.kind + "#" + std::to_string(config_index);
  auto add = [&](std::string id, std::uint64_t seed, auto make) {
    Instance inst{std::move(id), c.kind, seed, Graph(0), std::nullopt, {}};
    try {
      make(inst);
    } catch (const std::exception &e) {
      inst.graph = Graph(0);
      inst.error = e.what();
    }
    out.push_back(std::move(inst));
  };

  if (c.kind == "extremal-Ft") {
    int lo = c.t.value_or(1), hi = c.t_max.value_or(lo);
    for (int t = lo; t <= hi; ++t)
      add(base_id + ".t" + std::to_string(t), 0, [&](Instance &i) {
        i.graph = build_extremal_forest(t);
        i.family_t = t;
      });
    return out;
  }
  if (c.kind == "path" || c.kind == "star") {
    add(base_id, 0, [&](Instance &i) { i.graph = c.kind == "path" ? path_graph(c.n) : star_graph(c.n); });
    return out;
  }
  if (c.kind == "star-union" && !c.sizes.empty()) {
    add(base_id, 0, [&](Instance &i) { i.graph = star_union(c.sizes); });
    return out;
  }
  for (int idx = 0; idx < c.count; ++idx) {
    std::uint64_t s = derive_seed(c.seed, static_cast<std::uint64_t>(idx));
    add(base_id + "." + std::to_string(idx), s, [&](Instance &i) {
      SplitMix64 rng(s);
      int n = c.n_max ? rng.between(c.n, std::max(c.n, *c.n_max)) : c.n;
      if (c.kind == "random-forest") {
        i.graph = gen_random_forest(n, c.profile, rng.next());
      } else if (c.kind == "random-girth5") {
        int m = c.m.value_or(n);
        i.graph = gen_random_girth5(n, m, rng.next());
      } else {
        std::vector<std::int64_t> sizes(static_cast<std::size_t>(rng.between(1, 6)));
        for (auto &a : sizes)
          a = rng.between(1, std::max(1, n));
        i.graph = star_union(sizes);
      }
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification runs
// ---------------------------------------------------------------------------

inline const std::vector<std::string> &known_claims() {
  static const std::vector<std::string> claims{"oracle-equiv", "thm1",        "thm2",
                                               "cor1",         "cor2",        "thm3",
                                               "lemma2",       "lemma3-cert", "thm2-cert",
                                               "moore"};
  return claims;
}

struct VerifyOptions {
  std::vector<std::string> claims;
  std::vector<int> ks{2, 3};
  std::vector<int> ts{1, 2, 3, 4, 5};
  std::vector<int> ps{2, 3};
  int oracle_limit = kDefaultOracleLimit;
  int jobs = 1;
  std::optional<std::chrono::milliseconds> timeout;
};

/// Per (instance, k) outcome.
struct RunResult {
  std::string instance;
  std::string kind;
  std::uint64_t seed = 0;
  int n = 0;
  int m = 0;
  int k = 0;
  std::optional<int> fk;
  std::optional<RemovalCertificate> certificate;
  double elapsed_ms = 0;
  std::string note;
  std::vector<ClaimEntry> entries;
};

struct Summary {
  int pass = 0;
  int fail = 0;
  int skip = 0;
};

struct VerificationRun {
  std::vector<RunResult> results;
  Summary summary;
};

inline bool is_failure(Verdict v) { return v == Verdict::violated; }

namespace detail {

inline bool wants(const VerifyOptions &o, const std::string &claim) {
  return std::find(o.claims.begin(), o.claims.end(), claim) != o.claims.end();
}

inline ClaimEntry failure_entry(std::string claim, std::string what) {
  ClaimEntry e{std::move(claim)};
  e.hypothesis_holds = true;
  e.conclusion = {{"detail", std::move(what)}};
  e.conclusion_holds = false;
  e.verdict = Verdict::violated;
  return e;
}

inline ClaimEntry skip_entry(std::string claim, std::string why) {
  ClaimEntry e{std::move(claim)};
  e.conclusion = {{"detail", std::move(why)}};
  e.verdict = Verdict::not_applicable;
  return e;
}

// Certificate-producing claims: valid certificate, |X| <= t, and f_k <= t when known.
inline ClaimEntry certificate_entry(std::string claim, const Graph &g, int k, long long t,
                                    const RemovalCertificate &cert, std::optional<int> fk) {
  ClaimEntry e{std::move(claim)};
  e.hypothesis = {{"k", std::to_string(k)}, {"t", std::to_string(t)}};
  e.hypothesis_holds = true;
  bool valid = validate_certificate(g, cert, k);
  e.conclusion = {{"|X|", std::to_string(cert.size())}, {"valid", valid ? "yes" : "no"}};
  bool ok = valid && cert.size() <= t;
  if (fk) {
    e.conclusion.emplace_back("f_k", std::to_string(*fk));
    ok = ok && *fk <= t && *fk <= cert.size();
  }
  e.exact_fk = fk;
  e.conclusion_holds = ok;
  e.verdict = ok ? Verdict::pass : Verdict::violated;
  return e;
}

inline RunResult evaluate(const Instance &inst, int k, bool first_k, const VerifyOptions &o) {
  RunResult r;
  r.instance = inst.id;
  r.kind = inst.kind;
  r.seed = inst.seed;
  r.n = inst.graph.order();
  r.m = inst.graph.size();
  r.k = k;
  if (!inst.error.empty()) {
    r.note = "generator: " + inst.error;
    r.entries.push_back(skip_entry("generator", inst.error));
    return r;
  }
  const Graph &g = inst.graph;
  Deadline deadline = o.timeout ? Deadline::after(*o.timeout) : Deadline::none();
  const bool forest = is_forest(g);

  try {
    SolveOptions so;
    so.oracle_limit = o.oracle_limit;
    so.deadline = deadline;
    try {
      auto s = solve_exact(g, k, so);
      r.fk = s.value;
      r.elapsed_ms = s.elapsed_ms;
      // Round trip through the text format before re-checking.
      Graph reloaded = parse_graph(to_edge_list(g));
      if (!validate_certificate(reloaded, s.certificate, k) || s.certificate.size() != s.value)
        r.entries.push_back(failure_entry("certificate", "certificate failed re-validation"));
      r.certificate = std::move(s.certificate);
    } catch (const limit_error &e) {
      r.note = std::string("exact value skipped: ") + e.what();
    }

    if (wants(o, "oracle-equiv")) {
      if (forest && r.fk && g.order() <= o.oracle_limit) {
        auto b = brute_force_fk(g, k, o.oracle_limit, deadline);
        ClaimEntry e{"oracle-equiv"};
        e.hypothesis = {{"k", std::to_string(k)}};
        e.hypothesis_holds = true;
        e.conclusion = {{"dp", std::to_string(*r.fk)}, {"brute", std::to_string(b.value)}};
        e.conclusion_holds = b.value == *r.fk;
        e.exact_fk = b.value;
        e.verdict = decide(true, e.conclusion_holds);
        r.entries.push_back(e);
      } else {
        r.entries.push_back(skip_entry("oracle-equiv", "not a forest within the oracle limit"));
      }
    }
    for (int t : o.ts) {
      if (wants(o, "thm1") && k == 2 && t >= 1)
        r.entries.push_back(check_theorem1(g, t, r.fk));
      if (k == 3 && t >= 2) {
        if (wants(o, "thm2"))
          r.entries.push_back(check_theorem2(g, t, r.fk));
        if (wants(o, "cor1") && forest)
          r.entries.push_back(corollary1_check(degree_profile(g), t, r.fk));
        if (wants(o, "cor2"))
          r.entries.push_back(check_corollary2(g, t, r.fk));
        if (wants(o, "thm2-cert") && forest &&
            theorem2_lhs(degree_profile(g)) <= bound_theorem2(t)) {
          r.entries.push_back(certificate_entry("thm2-cert", g, 3, t, equalize3_forest(g, t), r.fk));
        }
      }
      const bool t_ok = t >= (k - 1) * (k - 1);
      if (wants(o, "thm3") && t_ok)
        r.entries.push_back(check_theorem3(g, k, t, r.fk));
      if (wants(o, "lemma3-cert") && t_ok) {
        auto hyp = check_lemma3(g, k, t, r.fk);
        if (hyp.hypothesis_holds)
          r.entries.push_back(
              certificate_entry("lemma3-cert", g, k, t, girth5_equalize(g, k, t), r.fk));
      }
    }
    if (wants(o, "lemma2") && k == 3 && inst.family_t) {
      int t = *inst.family_t;
      ClaimEntry e{"lemma2"};
      e.hypothesis = {{"t", std::to_string(t)}};
      e.hypothesis_holds = true;
      e.conclusion = {{"m", std::to_string(g.size())},
                      {"closed form", std::to_string(extremal_size(t))},
                      {"f_3", r.fk ? std::to_string(*r.fk) : "?"}};
      if (r.fk)
        e.conclusion_holds = *r.fk == t && g.size() == extremal_size(t);
      e.exact_fk = r.fk;
      e.verdict = decide(true, e.conclusion_holds);
      r.entries.push_back(e);
    }
    if (wants(o, "moore") && first_k)
      for (int p : o.ps)
        r.entries.push_back(moore_check(g, p));
  } catch (const timeout_error &) {
    r.note = "timeout";
    r.entries.push_back(skip_entry("timeout", "per-instance deadline exceeded"));
  } catch (const std::exception &e) {
    r.entries.push_back(failure_entry("error", e.what()));
  }
  return r;
}

} // namespace detail

/**
   Runs every requested claim on every instance. Output order is
   instance-major, then k, independent of how jobs interleave.
 */
inline VerificationRun run_verification(const std::vector<GeneratorConfig> &corpus,
                                        const VerifyOptions &opt) {
  for (const auto &c : opt.claims)
    if (std::find(known_claims().begin(), known_claims().end(), c) == known_claims().end())
      throw std::invalid_argument("unknown claim '" + c + "'");
  std::vector<Instance> instances;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (auto &inst : expand(corpus[i], i))
      instances.push_back(std::move(inst));

  const std::size_t per = opt.ks.size();
  std::vector<RunResult> results(instances.size() * per);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= instances.size())
        break;
      for (std::size_t j = 0; j < per; ++j)
        results[i * per + j] = detail::evaluate(instances[i], opt.ks[j], j == 0, opt);
    }
  };
  int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(instances.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }

  VerificationRun run{std::move(results), {}};
  for (const auto &r : run.results)
    for (const auto &e : r.entries) {
      if (e.verdict == Verdict::pass)
        ++run.summary.pass;
      else if (e.verdict == Verdict::violated)
        ++run.summary.fail;
      else
        ++run.summary.skip;
    }
  return run;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline nlohmann::json result_json(const Graph &g, int k, int value, const RemovalCertificate &c,
                                  double elapsed_ms) {
  nlohmann::json j;
  j["n"] = g.order();
  j["m"] = g.size();
  j["k"] = k;
  j["f_k"] = value;
  j["method"] = std::string(to_string(c.method));
  j["X"] = c.removed;
  j["residual_max_degree"] =
      c.residual_max_degree ? nlohmann::json(*c.residual_max_degree) : nlohmann::json(nullptr);
  j["witnesses"] = c.witnesses;
  j["order_below_k"] = c.order_below_k;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

inline std::string join_values(const Values &vs) {
  std::string out;
  for (const auto &[k, v] : vs) {
    if (!out.empty())
      out += ';';
    out += k + "=" + v;
  }
  return out;
}

inline nlohmann::json entry_json(const ClaimEntry &e) {
  nlohmann::json j;
  j["claim"] = e.claim;
  j["verdict"] = std::string(to_string(e.verdict));
  j["hypothesis"] = nlohmann::json::object();
  for (const auto &[k, v] : e.hypothesis)
    j["hypothesis"][k] = v;
  j["hypothesis_holds"] = e.hypothesis_holds;
  j["conclusion"] = nlohmann::json::object();
  for (const auto &[k, v] : e.conclusion)
    j["conclusion"][k] = v;
  j["conclusion_holds"] =
      e.conclusion_holds ? nlohmann::json(*e.conclusion_holds) : nlohmann::json(nullptr);
  j["exact_fk"] = e.exact_fk ? nlohmann::json(*e.exact_fk) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json run_json(const VerificationRun &run) {
  nlohmann::json out;
  out["results"] = nlohmann::json::array();
  for (const auto &r : run.results) {
    nlohmann::json j;
    j["instance"] = r.instance;
    j["kind"] = r.kind;
    j["seed"] = r.seed;
    j["n"] = r.n;
    j["m"] = r.m;
    j["k"] = r.k;
    j["f_k"] = r.fk ? nlohmann::json(*r.fk) : nlohmann::json(nullptr);
    if (r.certificate) {
      j["method"] = std::string(to_string(r.certificate->method));
      j["X"] = r.certificate->removed;
    }
    j["elapsed_ms"] = r.elapsed_ms;
    if (!r.note.empty())
      j["note"] = r.note;
    j["entries"] = nlohmann::json::array();
    for (const auto &e : r.entries)
      j["entries"].push_back(entry_json(e));
    out["results"].push_back(std::move(j));
  }
  out["summary"] = {{"pass", run.summary.pass}, {"fail", run.summary.fail}, {"skip", run.summary.skip}};
  return out;
}

inline std::string csv_quote(const std::string &s) {
  std::string out = "\"";
  for (char c : s)
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

/// One row per entry; no timing columns, so identical runs give identical bytes.
inline std::string run_csv(const VerificationRun &run) {
  std::ostringstream os;
  os << "instance,kind,seed,n,m,k,f_k,method,X,claim,verdict,hypothesis,conclusion\n";
  for (const auto &r : run.results) {
    std::string xs;
    if (r.certificate)
      for (Vertex v : r.certificate->removed)
        xs += (xs.empty() ? "" : " ") + std::to_string(v);
    for (const auto &e : r.entries) {
      os << r.instance << ',' << r.kind << ',' << r.seed << ',' << r.n << ',' << r.m << ',' << r.k
         << ',' << (r.fk ? std::to_string(*r.fk) : "") << ','
         << (r.certificate ? std::string(to_string(r.certificate->method)) : "") << ',' << xs << ','
         << e.claim << ',' << to_string(e.verdict) << ',' << csv_quote(join_values(e.hypothesis))
         << ',' << csv_quote(join_values(e.conclusion)) << '\n';
    }
  }
  os << "# summary,pass=" << run.summary.pass << ",fail=" << run.summary.fail
     << ",skip=" << run.summary.skip << '\n';
  return os.str();
}

} // namespace fkdeg
