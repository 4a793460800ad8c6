#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "fkdeg/certificate.hpp"
#include "fkdeg/errors.hpp"
#include "fkdeg/graph.hpp"
#include "fkdeg/order.hpp"

// Exhaustive ground truth for small graphs. Everything here is a direct
// transcription of the definitions; nothing is clever on purpose.

namespace fkdeg {

inline constexpr int kDefaultOracleLimit = 18;
// Subsets are 64-bit masks.
inline constexpr int kOracleHardLimit = 64;

namespace detail {

using Mask = std::uint64_t;

inline std::vector<Mask> adjacency_masks(const Graph &g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

inline void check_limit(const Graph &g, int limit) {
  if (g.order() > limit || g.order() > kOracleHardLimit)
    throw limit_error(g.order(), std::min(limit, kOracleHardLimit));
}

inline bool fk_holds(std::span<const Mask> adj, Mask alive, int k) {
  if (std::popcount(alive) < k)
    return true;
  int top = -1, count = 0;
  for (Mask rest = alive; rest; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    int d = std::popcount(adj[v] & alive);
    if (d > top) {
      top = d;
      count = 1;
    } else if (d == top) {
      ++count;
    }
  }
  return count >= k;
}

} // namespace detail

struct OracleResult {
  int value = 0;
  RemovalCertificate certificate;
};

/**
   f_k(G) by trying every X in order of increasing |X|, lexicographically
   within a size. The certificate is the first minimizer found.
 */
inline OracleResult brute_force_fk(const Graph &g, int k, int limit = kDefaultOracleLimit,
                                   const Deadline &deadline = {}) {
  if (k < 2)
    throw std::invalid_argument("k must be at least 2");
  detail::check_limit(g, limit);
  const int n = g.order();
  auto adj = detail::adjacency_masks(g);
  const detail::Mask all = n == 64 ? ~detail::Mask{0} : (detail::Mask{1} << n) - 1;

  std::vector<int> pick;
  std::uint64_t polls = 0;
  for (int s = 0; s <= n; ++s) {
    // Lexicographic s-combinations of 0..n-1.
    pick.resize(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i)
      pick[i] = i;
    while (true) {
      if ((++polls & 0xfff) == 0)
        deadline.check();
      detail::Mask x = 0;
      for (int v : pick)
        x |= detail::Mask{1} << v;
      if (detail::fk_holds(adj, all & ~x, k)) {
        std::vector<Vertex> xs(pick.begin(), pick.end());
        return {s, make_certificate(g, std::move(xs), k, Method::brute)};
      }
      int i = s - 1;
      while (i >= 0 && pick[i] == n - s + i)
        --i;
      if (i < 0)
        break;
      ++pick[i];
      for (int j = i + 1; j < s; ++j)
        pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("unreachable: deleting all vertices always succeeds");
}

/**
   Largest induced subgraph of F that contains every vertex of S, has
   maximum degree at most delta, and gives every S-vertex degree exactly
   delta. NEG_INF when there is none.
 */
inline Order brute_force_subforest(const Graph &f, std::span<const Vertex> specials, int delta,
                                   int limit = kDefaultOracleLimit) {
  detail::check_limit(f, limit);
  auto adj = detail::adjacency_masks(f);
  detail::Mask s_mask = 0;
  for (Vertex v : specials) {
    if (!f.contains(v))
      throw std::out_of_range("special vertex out of range");
    s_mask |= detail::Mask{1} << v;
  }
  std::vector<int> free;
  for (Vertex v = 0; v < f.order(); ++v)
    if (!(s_mask >> v & 1))
      free.push_back(v);

  if (free.size() > 62)
    throw limit_error(f.order(), 62);
  Order best = NEG_INF;
  const std::uint64_t total = std::uint64_t{1} << free.size();
  for (std::uint64_t sub = 0; sub < total; ++sub) {
    detail::Mask keep = s_mask;
    for (std::uint64_t rest = sub; rest; rest &= rest - 1)
      keep |= detail::Mask{1} << free[static_cast<std::size_t>(std::countr_zero(rest))];
    int size = std::popcount(keep);
    if (best.is_finite() && size <= best.value())
      continue;
    bool ok = true;
    for (detail::Mask rest = keep; rest && ok; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      int d = std::popcount(adj[v] & keep);
      ok = (s_mask >> v & 1) ? d == delta : d <= delta;
    }
    if (ok)
      best = Order(size);
  }
  return best;
}

} // namespace fkdeg
