#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "fkdeg/certificate.hpp"
#include "fkdeg/errors.hpp"
#include "fkdeg/graph.hpp"
#include "fkdeg/order.hpp"

// Exact f_k for forests.
//
// For a fixed set S of k "special" vertices and a target degree delta, a
// bottom-up pass over a rooted version of the forest computes, for every
// vertex u, three best subforest orders inside the subtree T(u):
//
//   n1(u)  u is not kept;
//   n2(u)  u is kept with exactly delta children kept (so its parent must go);
//   n3(u)  u is kept with at most delta-1 kept children (exactly delta-1 if u
//          is special), leaving room for the parent.
//
// In all three every special vertex of T(u) is kept at degree delta and no
// kept vertex exceeds delta. n2 and n3 count u itself, so the child sums of
// those two recursions carry a +1 for u.
//
// f_k(F) is n(F) minus the best root value over all (S, delta), capped by
// n(F) - k + 1, which is always achievable by keeping only k - 1 vertices.

namespace fkdeg {

struct DpTriple {
  Order n1;
  Order n2;
  Order n3;

  Order best() const { return max(n1, max(n2, n3)); }
  friend bool operator==(const DpTriple &, const DpTriple &) = default;
};

/// Values for a leaf of the rooted forest.
inline DpTriple dp_leaf_base(bool special, int delta) {
  if (!special)
    return delta == 0 ? DpTriple{Order(0), Order(1), NEG_INF}
                      : DpTriple{Order(0), NEG_INF, Order(1)};
  if (delta == 0)
    return {NEG_INF, Order(1), NEG_INF};
  if (delta == 1)
    return {NEG_INF, NEG_INF, Order(1)};
  return {NEG_INF, NEG_INF, NEG_INF};
}

struct ChildEntry {
  Vertex vertex = -1;
  DpTriple triple;
};

namespace detail {

// Gain n3(w) - n1(w) of keeping a non-special child attached to its parent.
// rank 0: n3 is NEG_INF (never worth it); rank 2: n1 is NEG_INF while n3 is
// finite (the child cannot be dropped, so it must be kept).
struct Gain {
  int rank;
  int diff;
  friend auto operator<=>(const Gain &, const Gain &) = default;
};

inline Gain gain_of(const DpTriple &t) {
  if (!t.n3.is_finite())
    return {0, 0};
  if (!t.n1.is_finite())
    return {2, 0};
  return {1, t.n3.value() - t.n1.value()};
}

inline bool gain_nonnegative(const Gain &g) { return g.rank == 2 || (g.rank == 1 && g.diff >= 0); }

// Non-increasing gain; equal gains keep ascending vertex order.
inline void sort_by_gain(std::span<ChildEntry> entries) {
  std::stable_sort(entries.begin(), entries.end(), [](const ChildEntry &a, const ChildEntry &b) {
    return gain_of(a.triple) > gain_of(b.triple);
  });
}

inline int count_nonnegative(std::span<const ChildEntry> sorted) {
  int q = 0;
  while (q < static_cast<int>(sorted.size()) && gain_nonnegative(gain_of(sorted[q].triple)))
    ++q;
  return q;
}

struct SpecialSums {
  int p = 0;
  Order n2{0};
  Order n3{0};
};

// First `take` entries contribute n3, the rest n1.
inline Order split_sum(std::span<const ChildEntry> sorted, int take) {
  Order sum(0);
  for (int j = 0; j < static_cast<int>(sorted.size()); ++j) {
    sum += j < take ? sorted[j].triple.n3 : sorted[j].triple.n1;
    if (!sum.is_finite())
      break;
  }
  return sum;
}

// How many non-special children are kept below u in state n2 or n3.
inline int kept_for_n2(int p, int delta) { return delta - p; }
inline int kept_for_n3(bool u_special, int p, int q_prime, int delta) {
  return u_special ? delta - 1 - p : std::min(q_prime, delta - 1 - p);
}

inline DpTriple combine_core(bool u_special, const SpecialSums &sp,
                             std::span<const ChildEntry> sorted, int q_prime, int delta) {
  const int p = sp.p;
  const int q = static_cast<int>(sorted.size());
  DpTriple out;

  if (!u_special) {
    Order n1 = sp.n2;
    for (const auto &w : sorted) {
      if (!n1.is_finite())
        break;
      n1 += w.triple.best();
    }
    out.n1 = n1;
  }

  if (p <= delta && delta <= p + q)
    out.n2 = Order(1) + sp.n3 + split_sum(sorted, kept_for_n2(p, delta));

  if (u_special) {
    if (p <= delta - 1 && delta - 1 <= p + q)
      out.n3 = Order(1) + sp.n3 + split_sum(sorted, kept_for_n3(true, p, q_prime, delta));
  } else if (p <= delta - 1) {
    out.n3 = Order(1) + sp.n3 + split_sum(sorted, kept_for_n3(false, p, q_prime, delta));
  }
  return out;
}

} // namespace detail

/**
   The children of one vertex, split into special and non-special ones,
   with the non-special children ordered by non-increasing n3 - n1.
 */
class ChildPartition {
public:
  ChildPartition(std::vector<ChildEntry> specials, std::vector<ChildEntry> nonspecials)
      : specials_(std::move(specials)), nonspecials_(std::move(nonspecials)) {
    detail::sort_by_gain(nonspecials_);
    q_prime_ = detail::count_nonnegative(nonspecials_);
  }

  std::span<const ChildEntry> specials() const { return specials_; }
  std::span<const ChildEntry> nonspecials() const { return nonspecials_; }
  int p() const { return static_cast<int>(specials_.size()); }
  int q() const { return static_cast<int>(nonspecials_.size()); }
  int q_prime() const { return q_prime_; }

  detail::SpecialSums special_sums() const {
    detail::SpecialSums s;
    s.p = p();
    for (const auto &v : specials_) {
      s.n2 += v.triple.n2;
      s.n3 += v.triple.n3;
    }
    return s;
  }

private:
  std::vector<ChildEntry> specials_;
  std::vector<ChildEntry> nonspecials_;
  int q_prime_ = 0;
};

inline DpTriple dp_combine(bool u_special, const ChildPartition &part, int delta) {
  return detail::combine_core(u_special, part.special_sums(), part.nonspecials(), part.q_prime(),
                              delta);
}

// ---------------------------------------------------------------------------
// Rooting
// ---------------------------------------------------------------------------

/**
   Parent/children structure of a forest hung from one root. For a
   disconnected forest the root is an extra node with index n(F) adjacent
   to one vertex of every component; that node never belongs to any
   subforest.
 */
struct Rooting {
  int node_count = 0;
  Vertex root = -1;
  bool virtual_root = false;
  std::vector<Vertex> parent;
  std::vector<std::vector<Vertex>> children;
  std::vector<Vertex> postorder;
};

/// `root` is used when F is connected; `attach` (one vertex per component,
/// in component order) when it is not. Both default to the lowest id.
inline Rooting root_forest(const Graph &f, std::optional<Vertex> root = std::nullopt,
                           std::span<const Vertex> attach = {}) {
  const int n = f.order();
  if (n == 0)
    throw std::invalid_argument("cannot root the empty graph");
  auto comps = components(f);
  Rooting r;
  r.virtual_root = comps.size() > 1;
  r.node_count = r.virtual_root ? n + 1 : n;
  r.parent.assign(static_cast<std::size_t>(r.node_count), -1);
  r.children.assign(static_cast<std::size_t>(r.node_count), {});

  std::vector<Vertex> tops;
  if (r.virtual_root) {
    r.root = n;
    if (!attach.empty() && attach.size() != comps.size())
      throw std::invalid_argument("need one attachment vertex per component");
    for (std::size_t c = 0; c < comps.size(); ++c) {
      Vertex a = attach.empty() ? comps[c].front() : attach[c];
      if (!std::binary_search(comps[c].begin(), comps[c].end(), a))
        throw std::invalid_argument("attachment vertex not in its component");
      tops.push_back(a);
      r.parent[a] = n;
      r.children[n].push_back(a);
    }
  } else {
    r.root = root.value_or(0);
    if (!f.contains(r.root))
      throw std::out_of_range("root out of range");
    tops.push_back(r.root);
  }

  // Iterative DFS; children are listed in ascending id.
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> preorder;
  preorder.reserve(static_cast<std::size_t>(n));
  for (Vertex top : tops) {
    std::vector<Vertex> stack{top};
    seen[top] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      preorder.push_back(u);
      for (Vertex w : f.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          r.parent[w] = u;
          r.children[u].push_back(w);
          stack.push_back(w);
        }
    }
  }
  if (static_cast<int>(preorder.size()) != n)
    throw std::logic_error("rooting did not reach every vertex");
  // Reverse preorder visits every child before its parent.
  r.postorder.assign(preorder.rbegin(), preorder.rend());
  if (r.virtual_root)
    r.postorder.push_back(n);
  return r;
}

/// A rooted forest together with one choice of special set and target degree.
struct RootedForestView {
  const Graph *base = nullptr;
  Rooting rooting;
  std::vector<char> special; // indexed by node, includes the virtual root
  int delta = 0;

  int special_count() const { return static_cast<int>(std::count(special.begin(), special.end(), 1)); }
};

namespace detail {

inline void check_forest_query(const Graph &f, std::span<const Vertex> specials, int delta) {
  if (!is_forest(f))
    throw precondition_error(precondition_error::kind::not_forest, "input is not a forest");
  std::vector<Vertex> s(specials.begin(), specials.end());
  for (Vertex v : s)
    if (!f.contains(v))
      throw std::out_of_range("special vertex " + std::to_string(v) + " out of range");
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("special vertices must be distinct");
  if (f.order() <= static_cast<int>(s.size()))
    throw std::invalid_argument("forest must have more vertices than special vertices");
  if (delta < 0 || delta > f.max_degree())
    throw std::invalid_argument("target degree must lie in [0, max degree]");
}

} // namespace detail

inline RootedForestView make_view(const Graph &f, std::span<const Vertex> specials, int delta,
                                  std::optional<Vertex> root = std::nullopt,
                                  std::span<const Vertex> attach = {}) {
  detail::check_forest_query(f, specials, delta);
  std::vector<char> special(static_cast<std::size_t>(f.order() + 1), 0);
  for (Vertex v : specials)
    special[v] = 1;
  if (!root && components(f).size() == 1) {
    Vertex r = 0;
    while (special[r])
      ++r;
    root = r;
  }
  if (root && special[*root])
    throw std::invalid_argument("root must not be special");
  RootedForestView view{&f, root_forest(f, root, attach), std::move(special), delta};
  view.special.resize(static_cast<std::size_t>(view.rooting.node_count));
  return view;
}

// ---------------------------------------------------------------------------
// Evaluation and reconstruction
// ---------------------------------------------------------------------------

namespace detail {

/// Reusable buffers for many DP runs over one rooting.
class DpWorkspace {
public:
  const std::vector<DpTriple> &run(const Rooting &r, std::span<const char> special, int delta) {
    table_.resize(static_cast<std::size_t>(r.node_count));
    for (Vertex u : r.postorder) {
      const auto &kids = r.children[u];
      const bool u_special = special[u] != 0;
      if (kids.empty()) {
        table_[u] = dp_leaf_base(u_special, delta);
        continue;
      }
      SpecialSums sp;
      nonspecial_.clear();
      for (Vertex c : kids) {
        if (special[c]) {
          ++sp.p;
          sp.n2 += table_[c].n2;
          sp.n3 += table_[c].n3;
        } else {
          nonspecial_.push_back({c, table_[c]});
        }
      }
      sort_by_gain(nonspecial_);
      table_[u] = combine_core(u_special, sp, nonspecial_, count_nonnegative(nonspecial_), delta);
    }
    return table_;
  }

  /// Vertices of an optimal subforest realizing `state` (1, 2 or 3) at the root.
  std::vector<Vertex> reconstruct(const Rooting &r, std::span<const char> special, int delta,
                                  int state) {
    std::vector<Vertex> kept;
    std::vector<std::pair<Vertex, int>> stack{{r.root, state}};
    std::vector<ChildEntry> nonspecial;
    while (!stack.empty()) {
      auto [u, s] = stack.back();
      stack.pop_back();
      if (s != 1 && !(r.virtual_root && u == r.root))
        kept.push_back(u);

      int p = 0;
      nonspecial.clear();
      for (Vertex c : r.children[u]) {
        if (special[c]) {
          ++p;
          stack.emplace_back(c, s == 1 ? 2 : 3);
        } else {
          nonspecial.push_back({c, table_[c]});
        }
      }
      if (s == 1) {
        for (const auto &w : nonspecial)
          stack.emplace_back(w.vertex, best_state(w.triple));
        continue;
      }
      sort_by_gain(nonspecial);
      int take = s == 2 ? kept_for_n2(p, delta)
                        : kept_for_n3(special[u] != 0, p, count_nonnegative(nonspecial), delta);
      for (int j = 0; j < static_cast<int>(nonspecial.size()); ++j)
        stack.emplace_back(nonspecial[j].vertex, j < take ? 3 : 1);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
  }

  static int best_state(const DpTriple &t) {
    int s = 1;
    Order v = t.n1;
    if (t.n2 > v) {
      s = 2;
      v = t.n2;
    }
    if (t.n3 > v)
      s = 3;
    return s;
  }

private:
  std::vector<DpTriple> table_;
  std::vector<ChildEntry> nonspecial_;
};

// The answer for one (S, delta) is read at the root: all three states for
// a real root, only n1 for the virtual one.
inline std::pair<Order, int> root_value(const Rooting &r, const DpTriple &t) {
  if (r.virtual_root)
    return {t.n1, 1};
  int s = DpWorkspace::best_state(t);
  return {t.best(), s};
}

} // namespace detail

/// Per-vertex triples for a view, indexed by node.
inline std::vector<DpTriple> solve_rooted(const RootedForestView &view) {
  detail::DpWorkspace ws;
  return ws.run(view.rooting, view.special, view.delta);
}

struct SubforestResult {
  Order value;
  std::vector<Vertex> kept; // empty when value is NEG_INF
};

/**
   Largest induced subforest of F containing every vertex of S, with
   maximum degree at most delta and every S-vertex at degree exactly delta.
 */
inline SubforestResult max_subforest(const Graph &f, std::span<const Vertex> specials, int delta,
                                     std::optional<Vertex> root = std::nullopt,
                                     std::span<const Vertex> attach = {}) {
  auto view = make_view(f, specials, delta, root, attach);
  detail::DpWorkspace ws;
  const auto &table = ws.run(view.rooting, view.special, view.delta);
  auto [value, state] = detail::root_value(view.rooting, table[view.rooting.root]);
  SubforestResult out{value, {}};
  if (value.is_finite())
    out.kept = ws.reconstruct(view.rooting, view.special, view.delta, state);
  return out;
}

inline Order max_subforest_order(const Graph &f, std::span<const Vertex> specials, int delta) {
  return max_subforest(f, specials, delta).value;
}

// ---------------------------------------------------------------------------
// Driver
// ---------------------------------------------------------------------------

enum class RootChoice { lowest_id, highest_id };

struct ForestDpOptions {
  int jobs = 1;
  // Skip (S, delta) where some special vertex has degree below delta in F.
  bool prune = true;
  RootChoice root_choice = RootChoice::lowest_id;
  Deadline deadline;
};

struct ForestFkResult {
  int value = 0;
  RemovalCertificate certificate;
  // Winning (S, delta); empty when the "fewer than k vertices" branch won.
  std::vector<Vertex> specials;
  int delta = -1;
  std::size_t evaluated = 0;
};

namespace detail {

struct Candidate {
  Order value;
  std::size_t set_index = 0;
  int delta = 0;

  // Larger value wins; ties go to the lexicographically least (S, delta).
  bool beats(const Candidate &o) const {
    if (value != o.value)
      return value > o.value;
    if (set_index != o.set_index)
      return set_index < o.set_index;
    return delta < o.delta;
  }
};

// All k-subsets of 0..n-1 in lexicographic order, flattened.
inline std::vector<Vertex> all_subsets(int n, int k) {
  std::vector<Vertex> flat;
  std::vector<Vertex> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    pick[i] = i;
  while (true) {
    flat.insert(flat.end(), pick.begin(), pick.end());
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i)
      --i;
    if (i < 0)
      break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j)
      pick[j] = pick[j - 1] + 1;
  }
  return flat;
}

} // namespace detail

/**
   f_k(F) for a forest F, with a certificate reconstructed from the
   optimal subforest. Deterministic for any number of jobs.
 */
inline ForestFkResult compute_fk_forest(const Graph &f, int k, const ForestDpOptions &opt = {}) {
  if (k < 2)
    throw std::invalid_argument("k must be at least 2");
  if (!is_forest(f))
    throw precondition_error(precondition_error::kind::not_forest, "input is not a forest");
  const int n = f.order();
  ForestFkResult res;

  if (n <= k) {
    // n < k needs nothing; n == k needs nothing if F is regular, otherwise
    // any single deletion drops the order below k.
    std::vector<Vertex> xs;
    if (n == k && !check_fk_condition(f, {}, k))
      xs.push_back(0);
    res.value = static_cast<int>(xs.size());
    res.certificate = make_certificate(f, std::move(xs), k, Method::dp);
    return res;
  }

  const bool connected = components(f).size() == 1;
  std::vector<Rooting> rootings;
  std::vector<Vertex> root_ids;
  if (connected) {
    for (int i = 0; i <= k; ++i) {
      Vertex r = opt.root_choice == RootChoice::lowest_id ? i : n - 1 - i;
      root_ids.push_back(r);
      rootings.push_back(root_forest(f, r));
    }
  } else {
    rootings.push_back(root_forest(f));
  }

  const auto subsets = detail::all_subsets(n, k);
  const std::size_t set_count = subsets.size() / static_cast<std::size_t>(k);
  const int top_degree = f.max_degree();

  auto evaluate_range = [&](std::atomic<std::size_t> &next, detail::Candidate &best,
                            std::size_t &evaluated) {
    detail::DpWorkspace ws;
    std::vector<char> special(static_cast<std::size_t>(n + 1), 0);
    constexpr std::size_t chunk = 64;
    while (true) {
      std::size_t begin = next.fetch_add(chunk);
      if (begin >= set_count)
        break;
      opt.deadline.check();
      std::size_t end = std::min(set_count, begin + chunk);
      for (std::size_t si = begin; si < end; ++si) {
        std::span<const Vertex> s(subsets.data() + si * static_cast<std::size_t>(k),
                                  static_cast<std::size_t>(k));
        int max_delta = top_degree;
        if (opt.prune)
          for (Vertex v : s)
            max_delta = std::min(max_delta, f.degree(v));
        for (Vertex v : s)
          special[v] = 1;
        std::size_t ri = 0;
        if (connected)
          while (special[root_ids[ri]])
            ++ri;
        const Rooting &r = rootings[ri];
        for (int delta = 0; delta <= max_delta; ++delta) {
          const auto &table = ws.run(r, special, delta);
          detail::Candidate c{detail::root_value(r, table[r.root]).first, si, delta};
          ++evaluated;
          if (c.beats(best))
            best = c;
        }
        for (Vertex v : s)
          special[v] = 0;
      }
    }
  };

  std::atomic<std::size_t> next{0};
  const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(set_count)));
  std::vector<detail::Candidate> bests(static_cast<std::size_t>(jobs),
                                       detail::Candidate{NEG_INF, set_count, 0});
  std::vector<std::size_t> counts(static_cast<std::size_t>(jobs), 0);
  if (jobs == 1) {
    evaluate_range(next, bests[0], counts[0]);
  } else {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&, j] {
        try {
          evaluate_range(next, bests[j], counts[j]);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    for (auto &t : pool)
      t.join();
    for (auto &e : errors)
      if (e)
        std::rethrow_exception(e);
  }

  detail::Candidate best = bests[0];
  for (const auto &c : bests)
    if (c.beats(best))
      best = c;
  for (auto c : counts)
    res.evaluated += c;

  const int below_k = n - k + 1;
  if (best.value.is_finite() && n - best.value.value() <= below_k) {
    std::span<const Vertex> s(subsets.data() + best.set_index * static_cast<std::size_t>(k),
                              static_cast<std::size_t>(k));
    std::vector<char> special(static_cast<std::size_t>(n + 1), 0);
    for (Vertex v : s)
      special[v] = 1;
    std::size_t ri = 0;
    if (connected)
      while (special[root_ids[ri]])
        ++ri;
    const Rooting &r = rootings[ri];
    detail::DpWorkspace ws;
    const auto &table = ws.run(r, special, best.delta);
    auto kept = ws.reconstruct(r, special, best.delta, detail::root_value(r, table[r.root]).second);
    std::vector<char> keep(static_cast<std::size_t>(n), 0);
    for (Vertex v : kept)
      keep[v] = 1;
    std::vector<Vertex> xs;
    for (Vertex v = 0; v < n; ++v)
      if (!keep[v])
        xs.push_back(v);
    res.value = n - best.value.value();
    res.specials.assign(s.begin(), s.end());
    res.delta = best.delta;
    res.certificate = make_certificate(f, std::move(xs), k, Method::dp);
  } else {
    // Keep the k-1 lowest ids.
    std::vector<Vertex> xs;
    for (Vertex v = k - 1; v < n; ++v)
      xs.push_back(v);
    res.value = below_k;
    res.certificate = make_certificate(f, std::move(xs), k, Method::dp);
  }
  if (res.certificate.size() != res.value || !validate_certificate(f, res.certificate, k))
    throw std::logic_error("forest DP produced an invalid certificate");
  return res;
}

} // namespace fkdeg
