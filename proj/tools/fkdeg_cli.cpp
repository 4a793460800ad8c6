// fkdeg: command-line front end.
//
// Exit codes: 0 ok, 1 violation or invalid certificate, 2 usage error,
// 3 input error (unreadable file, malformed graph, size limit, bad corpus).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fkdeg/fkdeg.hpp"

using namespace fkdeg;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw input_error("cannot open '" + path + "'");
  try {
    return parse_graph(in);
  } catch (const parse_error &e) {
    throw input_error(path + ":" + std::to_string(e.line()) + ": " + e.what());
  }
}

std::string join(const std::vector<Vertex> &vs) {
  std::string out;
  for (Vertex v : vs)
    out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

void print_entry(std::ostream &os, const ClaimEntry &e) {
  os << e.claim << " " << to_string(e.verdict) << "  [" << join_values(e.hypothesis) << "]";
  if (!e.conclusion.empty())
    os << " -> [" << join_values(e.conclusion) << "]";
  os << '\n';
}

// ---------------------------------------------------------------------------

struct ComputeArgs {
  std::string input;
  int k = 2;
  std::string method = "auto";
  std::string format = "text";
  bool allow_large = false;
  int jobs = 1;
};

int run_compute(const ComputeArgs &a) {
  auto g = load_graph(a.input);
  SolveOptions o;
  o.method = a.method == "dp" ? SolveMethod::dp : a.method == "brute" ? SolveMethod::brute
                                                                     : SolveMethod::automatic;
  o.allow_large = a.allow_large;
  o.jobs = a.jobs;
  auto r = solve_exact(g, a.k, o);
  if (!validate_certificate(g, r.certificate, a.k)) {
    std::cerr << "error: certificate failed validation\n";
    return kExitViolation;
  }
  auto j = result_json(g, a.k, r.value, r.certificate, r.elapsed_ms);
  if (a.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else if (a.format == "csv") {
    std::cout << "n,m,k,f_k,method,X,residual_max_degree,witnesses,order_below_k,elapsed_ms\n"
              << g.order() << ',' << g.size() << ',' << a.k << ',' << r.value << ','
              << to_string(r.certificate.method) << ',' << join(r.certificate.removed) << ','
              << (r.certificate.residual_max_degree ? std::to_string(*r.certificate.residual_max_degree) : "")
              << ',' << join(r.certificate.witnesses) << ','
              << (r.certificate.order_below_k ? "true" : "false") << ',' << r.elapsed_ms << '\n';
  } else {
    const auto &c = r.certificate;
    std::cout << "n = " << g.order() << ", m = " << g.size() << ", k = " << a.k << '\n'
              << "f_k = " << r.value << "  (" << to_string(c.method) << ")\n"
              << "X = {" << join(c.removed) << "}\n";
    if (c.order_below_k)
      std::cout << "G - X has fewer than " << a.k << " vertices\n";
    else
      std::cout << "residual max degree " << *c.residual_max_degree << " at {" << join(c.witnesses)
                << "}\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

int run_brute(const std::string &input, int k, int limit) {
  if (limit > kOracleHardLimit)
    throw usage_error("--limit above " + std::to_string(kOracleHardLimit) + " is not supported");
  if (limit > kDefaultOracleLimit)
    std::cerr << "warning: brute force above " << kDefaultOracleLimit
              << " vertices may take a very long time\n";
  auto g = load_graph(input);
  auto r = brute_force_fk(g, k, limit);
  std::cout << "f_k = " << r.value << "\nX = {" << join(r.certificate.removed) << "}\n";
  return validate_certificate(g, r.certificate, k) ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  int t = 1;
  int n = 1;
  std::vector<std::int64_t> sizes;
  std::string out;
};

int run_construct(const ConstructArgs &a) {
  Graph g(0);
  std::string comment;
  if (a.family == "extremal-ft") {
    g = build_extremal_forest(a.t);
    comment = "extremal forest F_" + std::to_string(a.t);
  } else if (a.family == "star") {
    g = star_graph(a.n);
    comment = "star K_{1," + std::to_string(a.n) + "}";
  } else if (a.family == "path") {
    g = path_graph(a.n);
    comment = "path P_" + std::to_string(a.n);
  } else {
    if (a.sizes.empty())
      throw usage_error("star-union needs --sizes");
    g = star_union(a.sizes);
    comment = "star union";
  }
  if (a.out.empty()) {
    write_graph(std::cout, g, comment);
  } else {
    std::ofstream os(a.out);
    if (!os)
      throw input_error("cannot write '" + a.out + "'");
    write_graph(os, g, comment);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  int n = 10;
  std::optional<int> m;
  std::uint64_t seed = 1;
  int count = 1;
  std::string out;
};

int run_gen(const GenArgs &a) {
  GeneratorConfig c;
  c.kind = a.kind;
  c.n = a.n;
  c.m = a.m;
  c.seed = a.seed;
  c.count = a.count;
  std::filesystem::create_directories(a.out);
  int failures = 0;
  for (const auto &inst : expand(c, 0)) {
    if (!inst.error.empty()) {
      std::cerr << inst.id << ": " << inst.error << '\n';
      ++failures;
      continue;
    }
    auto idx = inst.id.substr(inst.id.rfind('.') + 1);
    auto path = std::filesystem::path(a.out) / (a.kind + "-s" + std::to_string(a.seed) + "-" + idx + ".txt");
    std::ofstream os(path);
    if (!os)
      throw input_error("cannot write '" + path.string() + "'");
    write_graph(os, inst.graph, inst.kind + " seed " + std::to_string(inst.seed));
  }
  return failures ? kExitInput : kExitOk;
}

// ---------------------------------------------------------------------------

struct BoundsArgs {
  std::string input;
  std::vector<int> ks{2, 3};
  std::vector<int> ts{1, 2, 3, 4, 5};
  std::vector<int> ps{2, 3};
};

int run_bounds(const BoundsArgs &a) {
  auto g = load_graph(a.input);
  const bool forest = is_forest(g);
  auto prof = degree_profile(g);
  std::cout << "n = " << g.order() << ", m = " << g.size() << ", forest = " << (forest ? "yes" : "no");
  auto gi = girth(g);
  std::cout << ", girth = " << (gi ? std::to_string(*gi) : "inf") << '\n';
  bool violated = false;
  for (int k : a.ks) {
    std::optional<int> fk;
    try {
      fk = solve_exact(g, k).value;
    } catch (const limit_error &e) {
      std::cout << "k=" << k << ": exact value skipped (" << e.what() << ")\n";
    }
    std::cout << "k=" << k << ": f_k = " << (fk ? std::to_string(*fk) : "?") << '\n';
    std::vector<ClaimEntry> entries;
    for (int t : a.ts) {
      if (k == 2 && forest)
        entries.push_back(check_theorem1(g, t, fk));
      if (k == 3 && t >= 2 && forest) {
        entries.push_back(check_theorem2(g, t, fk));
        if (prof.length() >= static_cast<std::size_t>(t))
          entries.push_back(corollary1_check(prof, t, fk));
        entries.push_back(check_corollary2(g, t, fk));
      }
      if (t >= (k - 1) * (k - 1)) {
        entries.push_back(check_lemma3(g, k, t, fk));
        entries.push_back(check_theorem3(g, k, t, fk));
      }
    }
    for (int p : a.ps)
      for (auto &e : asymptotic_report(g, k, p, fk))
        if (e.claim != "moore")
          entries.push_back(std::move(e));
    for (const auto &e : entries) {
      std::cout << "  ";
      print_entry(std::cout, e);
      violated = violated || e.verdict == Verdict::violated;
    }
  }
  for (int p : a.ps) {
    auto e = moore_check(g, p);
    print_entry(std::cout, e);
    violated = violated || e.verdict == Verdict::violated;
  }
  return violated ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string claims;
  std::string corpus;
  int jobs = 1;
  std::optional<double> timeout;
  std::string format = "text";
};

std::vector<std::string> split_list(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      out.push_back(item);
  return out;
}

int run_verify(const VerifyArgs &a) {
  VerifyOptions o;
  o.claims = split_list(a.claims);
  for (const auto &c : o.claims)
    if (std::find(known_claims().begin(), known_claims().end(), c) == known_claims().end())
      throw usage_error("unknown claim '" + c + "'");
  o.jobs = a.jobs;
  if (a.timeout)
    o.timeout = std::chrono::milliseconds(static_cast<long long>(*a.timeout * 1000.0));

  std::ifstream in(a.corpus);
  if (!in)
    throw input_error("cannot open '" + a.corpus + "'");
  std::vector<GeneratorConfig> corpus;
  try {
    auto j = json::parse(in);
    const json *list = &j;
    if (j.is_object()) {
      list = &j.at("instances");
      if (j.contains("k"))
        o.ks = j.at("k").get<std::vector<int>>();
      if (j.contains("t"))
        o.ts = j.at("t").get<std::vector<int>>();
      if (j.contains("p"))
        o.ps = j.at("p").get<std::vector<int>>();
      o.oracle_limit = j.value("oracle_limit", o.oracle_limit);
    }
    if (!list->is_array())
      throw input_error("corpus must be an array of generator configs");
    for (const auto &c : *list)
      corpus.push_back(config_from_json(c));
  } catch (const json::exception &e) {
    throw input_error(a.corpus + ": " + e.what());
  } catch (const std::invalid_argument &e) {
    throw input_error(a.corpus + ": " + e.what());
  }

  auto run = run_verification(corpus, o);
  if (a.format == "json") {
    std::cout << run_json(run).dump(2) << '\n';
  } else if (a.format == "csv") {
    std::cout << run_csv(run);
  } else {
    for (const auto &r : run.results) {
      std::cout << r.instance << " k=" << r.k << " n=" << r.n << " m=" << r.m
                << " f_k=" << (r.fk ? std::to_string(*r.fk) : "?");
      if (!r.note.empty())
        std::cout << " (" << r.note << ")";
      std::cout << '\n';
      for (const auto &e : r.entries) {
        std::cout << "  ";
        print_entry(std::cout, e);
      }
    }
    std::cout << "pass " << run.summary.pass << ", fail " << run.summary.fail << ", skip "
              << run.summary.skip << '\n';
  }
  return run.summary.fail > 0 ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------------------

struct BenchRow {
  std::string name;
  int n;
  int k;
  int fk;
  double ms;
};

int run_bench(const std::string &suite, const std::string &format) {
  std::vector<BenchRow> rows;
  auto time_it = [&](const std::string &name, const Graph &g, int k, SolveMethod m) {
    SolveOptions o;
    o.method = m;
    o.allow_large = true;
    auto r = solve_exact(g, k, o);
    rows.push_back({name, g.order(), k, r.value, r.elapsed_ms});
  };
  ForestProfile prof;
  prof.split = 0.05;
  prof.hub_bias = 0.5;
  if (suite == "small") {
    for (int t = 2; t <= 7; ++t)
      time_it("extremal F_" + std::to_string(t), build_extremal_forest(t), 3, SolveMethod::dp);
    time_it("petersen", petersen_graph(), 3, SolveMethod::brute);
    time_it("path 40", path_graph(40), 3, SolveMethod::dp);
  } else if (suite == "forest-dp") {
    for (int n : {40, 60, 80, 100})
      time_it("random forest", gen_random_forest(n, prof, derive_seed(7, n)), 2, SolveMethod::dp);
    for (int n : {30, 45, 60})
      time_it("random forest", gen_random_forest(n, prof, derive_seed(8, n)), 3, SolveMethod::dp);
  } else {
    for (int n : {10, 12, 14, 16, 18})
      time_it("random girth-5", gen_random_girth5(n, n + n / 4, derive_seed(9, n)), 3,
              SolveMethod::brute);
  }
  if (format == "json") {
    json j = json::array();
    for (const auto &r : rows)
      j.push_back({{"name", r.name}, {"n", r.n}, {"k", r.k}, {"f_k", r.fk}, {"elapsed_ms", r.ms}});
    std::cout << j.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "name,n,k,f_k,elapsed_ms\n";
    for (const auto &r : rows)
      std::cout << r.name << ',' << r.n << ',' << r.k << ',' << r.fk << ',' << r.ms << '\n';
  } else {
    for (const auto &r : rows)
      std::printf("%-20s n=%-4d k=%d f_k=%-3d %10.2f ms\n", r.name.c_str(), r.n, r.k, r.fk, r.ms);
  }
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"f_k: vertex deletions until k vertices share the maximum degree"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json", "csv"};

  ComputeArgs ca;
  auto *compute = app.add_subcommand("compute", "exact f_k with a certificate");
  compute->add_option("--input", ca.input, "edge-list file")->required();
  compute->add_option("--k", ca.k)->required()->check(CLI::Range(2, 1 << 20));
  compute->add_option("--method", ca.method)->check(CLI::IsMember({"dp", "brute", "auto"}));
  compute->add_option("--format", ca.format)->check(CLI::IsMember(formats));
  compute->add_option("--jobs", ca.jobs)->check(CLI::PositiveNumber);
  compute->add_flag("--allow-large", ca.allow_large, "lift the DP size guard");

  std::string b_input;
  int b_k = 2, b_limit = kDefaultOracleLimit;
  auto *brute = app.add_subcommand("brute", "exhaustive f_k");
  brute->add_option("--input", b_input)->required();
  brute->add_option("--k", b_k)->required()->check(CLI::Range(2, 1 << 20));
  brute->add_option("--limit", b_limit)->check(CLI::PositiveNumber);

  ConstructArgs co;
  auto *construct = app.add_subcommand("construct", "write a named graph family");
  construct->add_option("--family", co.family)
      ->required()
      ->check(CLI::IsMember({"extremal-ft", "star", "path", "star-union"}));
  construct->add_option("--t", co.t)->check(CLI::Range(1, 100000));
  construct->add_option("--n", co.n)->check(CLI::Range(0, 10000000));
  construct->add_option("--sizes", co.sizes)->delimiter(',');
  construct->add_option("--out", co.out);

  GenArgs ga;
  auto *gen = app.add_subcommand("gen", "seeded random instances");
  gen->add_option("--kind", ga.kind)->required()->check(CLI::IsMember({"random-forest", "random-girth5"}));
  gen->add_option("--n", ga.n)->required()->check(CLI::Range(1, 10000000));
  gen->add_option("--m", ga.m);
  gen->add_option("--seed", ga.seed)->required();
  gen->add_option("--count", ga.count)->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--out", ga.out)->required();

  BoundsArgs ba;
  std::optional<int> bk, bt, bp;
  auto *bounds = app.add_subcommand("bounds", "evaluate every applicable bound");
  bounds->add_option("--input", ba.input)->required();
  bounds->add_option("--k", bk)->check(CLI::Range(2, 64));
  bounds->add_option("--t", bt)->check(CLI::Range(1, 1000000));
  bounds->add_option("--p", bp)->check(CLI::Range(1, 64));

  VerifyArgs va;
  auto *verify = app.add_subcommand("verify", "check claims over a seeded corpus");
  verify->add_option("--claims", va.claims, "comma-separated claim tags")->required();
  verify->add_option("--corpus", va.corpus, "JSON corpus file")->required();
  verify->add_option("--jobs", va.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--timeout", va.timeout, "per-instance seconds")->check(CLI::PositiveNumber);
  verify->add_option("--format", va.format)->check(CLI::IsMember(formats));

  std::string suite, bench_format = "text";
  auto *bench = app.add_subcommand("bench", "timing suites");
  bench->add_option("--suite", suite)->required()->check(CLI::IsMember({"small", "forest-dp", "oracle"}));
  bench->add_option("--format", bench_format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute)
      return run_compute(ca);
    if (*brute)
      return run_brute(b_input, b_k, b_limit);
    if (*construct)
      return run_construct(co);
    if (*gen)
      return run_gen(ga);
    if (*bounds) {
      if (bk)
        ba.ks = {*bk};
      if (bt)
        ba.ts = {*bt};
      if (bp)
        ba.ps = {*bp};
      return run_bounds(ba);
    }
    if (*verify)
      return run_verify(va);
    return run_bench(suite, bench_format);
  } catch (const usage_error &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const limit_error &e) {
    std::cerr << "error: " << e.what() << " (use --allow-large or the dp method where possible)\n";
    return kExitInput;
  } catch (const precondition_error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const input_error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
