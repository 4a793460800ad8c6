#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "fkdeg/constructive.hpp"
#include "fkdeg/graph.hpp"

// Extremal star forests and the closed-form bounds on f_k, all in exact
// integer/rational arithmetic. Strict "size less than" comparisons sit
// right on cubic-over-6 and cubic-over-18 boundaries, so no floating point
// is used for anything that decides a verdict.

namespace fkdeg {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational &r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1)
    os << '/' << r.denominator();
  return os.str();
}

inline std::int64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < r)
    return 0;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= r; ++i)
    out = out * (n - r + i) / i;
  return out;
}

namespace detail {
inline void require_param(bool ok, const char *what) {
  if (!ok)
    throw std::invalid_argument(what);
}
} // namespace detail

// ---------------------------------------------------------------------------
// Extremal family
// ---------------------------------------------------------------------------

/// a_1..a_t: a_1 = 1, a_2 = 3, a_i = max(a_{i-1}, i - a_{i-1} + 2 a_{i-2}).
inline std::vector<std::int64_t> a_sequence_prefix(int t) {
  detail::require_param(t >= 1, "t must be positive");
  std::vector<std::int64_t> a{1};
  if (t >= 2)
    a.push_back(3);
  for (int i = 3; i <= t; ++i) {
    std::int64_t prev = a[i - 2], prev2 = a[i - 3];
    a.push_back(std::max(prev, i - prev + 2 * prev2));
  }
  return a;
}

inline std::int64_t a_sequence(int i) { return a_sequence_prefix(i).back(); }

/// a_{2i} = a_{2i+1} = i^2 + i + 1.
inline std::int64_t a_closed_form(int i) {
  detail::require_param(i >= 1, "index must be positive");
  if (i == 1)
    return 1;
  std::int64_t h = i / 2;
  return h * h + h + 1;
}

inline Graph star_union(std::span<const std::int64_t> leaves) {
  std::int64_t n = 0;
  for (auto a : leaves)
    n += a + 1;
  Graph g(static_cast<int>(n));
  Vertex next = 0;
  for (auto a : leaves) {
    Vertex center = next++;
    for (std::int64_t j = 0; j < a; ++j)
      g.add_edge(center, next++);
  }
  return g;
}

/// F_t: disjoint stars K_{1,a_1}, ..., K_{1,a_t}; each star is numbered center first.
inline Graph build_extremal_forest(int t) {
  auto a = a_sequence_prefix(t);
  return star_union(a);
}

/// Size of F_t from the closed form (t = 2k+1 or t = 2k).
inline std::int64_t extremal_size(int t) {
  detail::require_param(t >= 1, "t must be positive");
  Rational k(t / 2);
  Rational m = t % 2 == 1
                   ? Rational(2, 3) * k * k * k + 2 * k * k + Rational(10, 3) * k + 1
                   : Rational(2, 3) * k * k * k + k * k + Rational(7, 3) * k;
  if (m.denominator() != 1)
    throw std::logic_error("extremal size is not an integer");
  return m.numerator();
}

// ---------------------------------------------------------------------------
// Bound formulas
// ---------------------------------------------------------------------------

/// n(t) = (t^3 + 6t^2 + 17t + 12) / 6; forests of size below it have f_2 <= t.
inline std::int64_t bound_theorem1(std::int64_t t) {
  detail::require_param(t >= 1, "t must be positive");
  Rational v(t * t * t + 6 * t * t + 17 * t + 12, 6);
  if (v.denominator() != 1)
    throw std::logic_error("n(t) is not an integer");
  return v.numerator();
}

/// C(t+2, 2) + 2, the cap on Delta_1 + 2 Delta_2.
inline std::int64_t bound_theorem2(std::int64_t t) {
  detail::require_param(t >= 2, "t must be at least 2");
  return binomial(t + 2, 2) + 2;
}

/// t^3/18 + t^2/3 + 11t/18 + 1; forests of size below it have f_3 <= t.
inline Rational bound_corollary2(std::int64_t t) {
  detail::require_param(t >= 2, "t must be at least 2");
  return Rational(t * t * t, 18) + Rational(t * t, 3) + Rational(11 * t, 18) + 1;
}

/// Lower bound on Delta_1 + ... + Delta_t forced by f_3 > t: t^3/18 + t^2/3 + 29t/18.
inline Rational corollary1_sum_threshold(std::int64_t t) {
  detail::require_param(t >= 2, "t must be at least 2");
  return Rational(t * t * t, 18) + Rational(t * t, 3) + Rational(29 * t, 18);
}

/// c_k with C((k-1)^2 + 2, 2) + c_k = k - 1.
inline std::int64_t c_k(std::int64_t k) {
  detail::require_param(k >= 2, "k must be at least 2");
  return (k - 1) - binomial((k - 1) * (k - 1) + 2, 2);
}

/// C(t+2, 2) + c_k, the cap on Delta_1 + 2 Delta_2 + ... + (k-1) Delta_{k-1}.
inline std::int64_t bound_theorem3(std::int64_t k, std::int64_t t) {
  detail::require_param(k >= 2, "k must be at least 2");
  detail::require_param(t >= (k - 1) * (k - 1), "t must be at least (k-1)^2");
  return binomial(t + 2, 2) + c_k(k);
}

/// Delta_1 + 2 Delta_2 + ... + (k-1) Delta_{k-1}.
inline std::int64_t weighted_top_degrees(const DegreeProfile &p, int k) {
  std::int64_t s = 0;
  for (int i = 1; i < k; ++i)
    s += static_cast<std::int64_t>(i) * p.delta(static_cast<std::size_t>(i));
  return s;
}

/// m <= 2 n^{(p+1)/p}, evaluated exactly as m^p <= 2^p n^{p+1}.
inline bool moore_inequality_holds(std::int64_t n, std::int64_t m, int p) {
  detail::require_param(p >= 1, "p must be positive");
  __int128 lhs = 1, rhs = 1;
  for (int i = 0; i < p; ++i) {
    lhs *= m;
    rhs *= 2;
  }
  for (int i = 0; i <= p; ++i)
    rhs *= n;
  return lhs <= rhs;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

enum class Verdict { pass, violated, not_applicable, report_only };

inline std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::pass:
    return "pass";
  case Verdict::violated:
    return "VIOLATED";
  case Verdict::not_applicable:
    return "n/a";
  case Verdict::report_only:
    return "report";
  }
  return "?";
}

using Values = std::vector<std::pair<std::string, std::string>>;

/// One claim checked on one instance.
struct ClaimEntry {
  std::string claim;
  Values hypothesis;
  bool hypothesis_holds = false;
  Values conclusion;
  std::optional<bool> conclusion_holds;
  std::optional<int> exact_fk;
  Verdict verdict = Verdict::not_applicable;
};

struct BoundReport {
  std::string instance;
  std::vector<ClaimEntry> entries;
};

/// VIOLATED only when the hypothesis holds and the conclusion is decided false.
inline Verdict decide(bool hypothesis, std::optional<bool> conclusion) {
  if (!hypothesis || !conclusion)
    return Verdict::not_applicable;
  return *conclusion ? Verdict::pass : Verdict::violated;
}

namespace detail {
inline std::string str(std::int64_t v) { return std::to_string(v); }
} // namespace detail

/// Forest of size < n(t) => f_2 <= t.
inline ClaimEntry check_theorem1(const Graph &f, std::int64_t t, std::optional<int> f2) {
  ClaimEntry e{"thm1"};
  auto bound = bound_theorem1(t);
  e.hypothesis = {{"t", detail::str(t)}, {"m", detail::str(f.size())}, {"n(t)", detail::str(bound)}};
  e.hypothesis_holds = is_forest(f) && f.size() < bound;
  e.exact_fk = f2;
  if (f2) {
    e.conclusion = {{"f_2", detail::str(*f2)}};
    e.conclusion_holds = *f2 <= t;
  }
  e.verdict = decide(e.hypothesis_holds, e.conclusion_holds);
  return e;
}

/// Forest with Delta_1 + 2 Delta_2 <= C(t+2,2) + 2 => f_3 <= t.
inline ClaimEntry check_theorem2(const Graph &f, std::int64_t t, std::optional<int> f3) {
  ClaimEntry e{"thm2"};
  auto lhs = theorem2_lhs(degree_profile(f));
  auto bound = bound_theorem2(t);
  e.hypothesis = {{"t", detail::str(t)}, {"D1+2D2", detail::str(lhs)}, {"bound", detail::str(bound)}};
  e.hypothesis_holds = is_forest(f) && lhs <= bound;
  e.exact_fk = f3;
  if (f3) {
    e.conclusion = {{"f_3", detail::str(*f3)}};
    e.conclusion_holds = *f3 <= t;
  }
  e.verdict = decide(e.hypothesis_holds, e.conclusion_holds);
  return e;
}

struct Corollary1Clauses {
  bool i = false;
  bool ii = false;
  bool iii = false;
  // Smallest i in [2, t] whose clause (ii) fails, if any.
  std::optional<int> ii_failing_index;
  std::int64_t top_sum = 0;
  Rational threshold;
};

/// Evaluates clauses (i)-(iii) on the first t entries of the profile.
inline Corollary1Clauses corollary1_clauses(const DegreeProfile &p, int t) {
  detail::require_param(t >= 2, "t must be at least 2");
  if (p.length() < static_cast<std::size_t>(t))
    throw std::invalid_argument("degree profile shorter than t");
  Corollary1Clauses c;
  c.i = p.delta(static_cast<std::size_t>(t)) >= 2;
  c.ii = true;
  for (int i = 2; i <= t; ++i) {
    std::int64_t lhs = p.delta(static_cast<std::size_t>(t + 1 - i)) +
                       2LL * p.delta(static_cast<std::size_t>(t + 2 - i));
    if (lhs < binomial(i + 2, 2) + 3) {
      c.ii = false;
      c.ii_failing_index = i;
      break;
    }
  }
  for (int i = 1; i <= t; ++i)
    c.top_sum += p.delta(static_cast<std::size_t>(i));
  c.threshold = corollary1_sum_threshold(t);
  c.iii = Rational(c.top_sum) >= c.threshold;
  return c;
}

/// f_3 > t => clauses (i)-(iii). Without f_3 the entry is report-only.
inline ClaimEntry corollary1_check(const DegreeProfile &p, int t, std::optional<int> f3) {
  ClaimEntry e{"cor1"};
  e.hypothesis = {{"t", detail::str(t)}};
  e.exact_fk = f3;
  if (f3)
    e.hypothesis.emplace_back("f_3", detail::str(*f3));
  e.hypothesis_holds = f3 && *f3 > t;
  if (p.length() < static_cast<std::size_t>(t)) {
    e.verdict = e.hypothesis_holds ? Verdict::violated : Verdict::not_applicable;
    return e;
  }
  auto c = corollary1_clauses(p, t);
  e.conclusion = {{"(i)", c.i ? "yes" : "no"},
                  {"(ii)", c.ii ? "yes" : "no"},
                  {"(iii) sum", detail::str(c.top_sum)},
                  {"(iii) threshold", to_string(c.threshold)},
                  {"(iii)", c.iii ? "yes" : "no"}};
  e.conclusion_holds = c.i && c.ii && c.iii;
  e.verdict = f3 ? decide(e.hypothesis_holds, e.conclusion_holds) : Verdict::report_only;
  return e;
}

/// Forest of size below t^3/18 + t^2/3 + 11t/18 + 1 => f_3 <= t.
inline ClaimEntry check_corollary2(const Graph &f, std::int64_t t, std::optional<int> f3) {
  ClaimEntry e{"cor2"};
  auto bound = bound_corollary2(t);
  e.hypothesis = {{"t", detail::str(t)}, {"m", detail::str(f.size())}, {"bound", to_string(bound)}};
  e.hypothesis_holds = is_forest(f) && Rational(f.size()) < bound;
  e.exact_fk = f3;
  if (f3) {
    e.conclusion = {{"f_3", detail::str(*f3)}};
    e.conclusion_holds = *f3 <= t;
  }
  e.verdict = decide(e.hypothesis_holds, e.conclusion_holds);
  return e;
}

inline bool has_girth_at_least(const Graph &g, int bound) {
  auto gi = girth(g);
  return !gi || *gi >= bound;
}

/// Girth >= 5, t >= (k-1)^2, excess <= t => f_k <= t.
inline ClaimEntry check_lemma3(const Graph &g, int k, std::int64_t t, std::optional<int> fk) {
  ClaimEntry e{"lemma3"};
  auto excess = top_degree_excess(degree_profile(g), k);
  e.hypothesis = {{"k", detail::str(k)}, {"t", detail::str(t)}, {"excess", detail::str(excess)}};
  e.hypothesis_holds = has_girth_at_least(g, 5) && t >= static_cast<std::int64_t>(k - 1) * (k - 1) &&
                       excess <= t;
  e.exact_fk = fk;
  if (fk) {
    e.conclusion = {{"f_k", detail::str(*fk)}};
    e.conclusion_holds = *fk <= t;
  }
  e.verdict = decide(e.hypothesis_holds, e.conclusion_holds);
  return e;
}

/// Girth >= 5, t >= (k-1)^2, sum i*Delta_i <= C(t+2,2) + c_k => f_k <= t.
inline ClaimEntry check_theorem3(const Graph &g, int k, std::int64_t t, std::optional<int> fk) {
  ClaimEntry e{"thm3"};
  bool t_ok = t >= static_cast<std::int64_t>(k - 1) * (k - 1);
  auto lhs = weighted_top_degrees(degree_profile(g), k);
  e.hypothesis = {{"k", detail::str(k)}, {"t", detail::str(t)}, {"weighted", detail::str(lhs)}};
  if (t_ok)
    e.hypothesis.emplace_back("bound", detail::str(bound_theorem3(k, t)));
  e.hypothesis_holds = t_ok && has_girth_at_least(g, 5) && lhs <= bound_theorem3(k, t);
  e.exact_fk = fk;
  if (fk) {
    e.conclusion = {{"f_k", detail::str(*fk)}};
    e.conclusion_holds = *fk <= t;
  }
  e.verdict = decide(e.hypothesis_holds, e.conclusion_holds);
  return e;
}

/// Girth > 2p => m <= 2 n^{(p+1)/p}.
inline ClaimEntry moore_check(const Graph &g, int p) {
  ClaimEntry e{"moore"};
  e.hypothesis = {{"p", std::to_string(p)}};
  auto gi = girth(g);
  e.hypothesis.emplace_back("girth", gi ? std::to_string(*gi) : "inf");
  e.hypothesis_holds = !gi || *gi > 2 * p;
  double rhs = 2.0 * std::pow(static_cast<double>(g.order()), (p + 1.0) / p);
  std::ostringstream os;
  os.precision(6);
  os << rhs;
  e.conclusion = {{"m", std::to_string(g.size())}, {"2n^((p+1)/p)", os.str()}};
  e.conclusion_holds = moore_inequality_holds(g.order(), g.size(), p);
  e.verdict = decide(e.hypothesis_holds, e.conclusion_holds);
  return e;
}

/**
   Leading-constant values of the asymptotic bounds, alongside f_k when
   known. These entries never carry a verdict: the lower-order terms are
   unspecified. The Moore inequality is the only decided part.
 */
inline std::vector<ClaimEntry> asymptotic_report(const Graph &g, int k, int p,
                                                 std::optional<int> fk) {
  std::vector<ClaimEntry> out;
  const double n = g.order();
  const double ck2 = static_cast<double>(binomial(k, 2));
  auto fmt = [](double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
  };
  auto gi = girth(g);

  ClaimEntry c3{"cor3"};
  c3.hypothesis = {{"k", std::to_string(k)}, {"girth>=5", has_girth_at_least(g, 5) ? "yes" : "no"}};
  c3.conclusion = {{"t^3 coefficient", "1/" + std::to_string(6 * binomial(k, 2))}};
  c3.exact_fk = fk;
  c3.verdict = Verdict::report_only;
  out.push_back(c3);

  ClaimEntry c4{"cor4"};
  c4.hypothesis = {{"k", std::to_string(k)},
                   {"p", std::to_string(p)},
                   {"girth", gi ? std::to_string(*gi) : "inf"}};
  c4.hypothesis_holds = p >= 3 && (!gi || *gi > 2 * p);
  c4.conclusion = {{"constant", "(12*" + std::to_string(binomial(k, 2)) + ")^(1/3)"},
                   {"leading bound", fmt(std::cbrt(12 * ck2) * std::pow(n, (p + 1.0) / (3.0 * p)))}};
  c4.exact_fk = fk;
  c4.verdict = Verdict::report_only;
  out.push_back(c4);

  ClaimEntry c5{"cor5"};
  c5.hypothesis = {{"k", std::to_string(k)}, {"forest", is_forest(g) ? "yes" : "no"}};
  c5.hypothesis_holds = is_forest(g);
  c5.conclusion = {{"constant", std::to_string(6 * binomial(k, 2)) + "^(1/3)"},
                   {"leading bound", fmt(std::cbrt(6 * ck2) * std::cbrt(n))}};
  c5.exact_fk = fk;
  c5.verdict = Verdict::report_only;
  out.push_back(c5);

  out.push_back(moore_check(g, p));
  return out;
}

} // namespace fkdeg
