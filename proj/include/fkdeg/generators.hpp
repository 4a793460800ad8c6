#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fkdeg/graph.hpp"

namespace fkdeg {

/**
   SplitMix64 (Steele, Lea, Flood 2014) with the standard constants.

   Pinned so that corpora reproduce bit-for-bit across platforms and
   implementations; std::uniform_int_distribution is not portable.
   below(b) uses Lemire's multiply-shift rejection, uniform() takes the top
   53 bits.
 */
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Independent stream seeded from this one.
  SplitMix64 split() { return SplitMix64(next()); }

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return uniform() < p; }

  template <typename T> void shuffle(std::vector<T> &v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
  }

private:
  std::uint64_t state_;
};

/// The i-th instance seed derived from a corpus seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 rng(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
  return rng.next();
}

// ---------------------------------------------------------------------------
// Fixed families
// ---------------------------------------------------------------------------

inline Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v)
    g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3)
    throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

/// K_{1,leaves} with the center at 0.
inline Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v)
    g.add_edge(0, v);
  return g;
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph petersen_graph() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

/// Shape controls for random forests.
struct ForestProfile {
  // Chance that a new vertex starts a new component.
  double split = 0.1;
  // Chance that the parent is picked proportionally to degree rather than uniformly.
  double hub_bias = 0.3;
  // 0 means unbounded.
  int max_degree = 0;
};

/**
   Random forest by parent attachment: vertex v either starts a new
   component or attaches to an earlier vertex, then ids are shuffled.
   Fully determined by (n, profile, seed).
 */
inline Graph gen_random_forest(int n, const ForestProfile &profile, std::uint64_t seed) {
  if (n < 1)
    throw std::invalid_argument("n must be positive");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> endpoints; // each vertex once per incident edge
  auto open = [&](Vertex v) { return profile.max_degree <= 0 || deg[v] < profile.max_degree; };

  for (Vertex v = 1; v < n; ++v) {
    if (rng.chance(profile.split))
      continue;
    Vertex parent = -1;
    if (!endpoints.empty() && rng.chance(profile.hub_bias)) {
      Vertex cand = endpoints[static_cast<std::size_t>(rng.below(endpoints.size()))];
      if (open(cand))
        parent = cand;
    }
    if (parent < 0) {
      std::vector<Vertex> eligible;
      for (Vertex u = 0; u < v; ++u)
        if (open(u))
          eligible.push_back(u);
      if (eligible.empty())
        continue;
      parent = eligible[static_cast<std::size_t>(rng.below(eligible.size()))];
    }
    edges.emplace_back(parent, v);
    ++deg[parent];
    ++deg[v];
    endpoints.push_back(parent);
    endpoints.push_back(v);
  }

  std::vector<Vertex> relabel(static_cast<std::size_t>(n));
  std::iota(relabel.begin(), relabel.end(), 0);
  rng.shuffle(relabel);
  Graph g(n);
  for (auto [a, b] : edges)
    g.add_edge(relabel[a], relabel[b]);
  return g;
}

/// The requested edge count could not be reached; carries what was.
class generation_error : public std::runtime_error {
public:
  generation_error(int requested, int achieved)
      : std::runtime_error("girth-5 generator saturated at " + std::to_string(achieved) +
                           " edges, " + std::to_string(requested) + " requested"),
        requested_(requested), achieved_(achieved) {}

  int requested() const noexcept { return requested_; }
  int achieved() const noexcept { return achieved_; }

private:
  int requested_;
  int achieved_;
};

namespace detail {

// Distance from s to t is at most `limit`.
inline bool within_distance(const Graph &g, Vertex s, Vertex t, int limit) {
  std::vector<Vertex> frontier{s};
  std::vector<Vertex> seen{s};
  for (int d = 0; d < limit; ++d) {
    std::vector<Vertex> next;
    for (Vertex x : frontier)
      for (Vertex y : g.neighbors(x)) {
        if (y == t)
          return true;
        if (std::find(seen.begin(), seen.end(), y) == seen.end()) {
          seen.push_back(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return false;
}

} // namespace detail

/**
   Random graph of girth at least 5 with m edges: candidate pairs are tried
   in random order and an edge is kept unless its ends are already within
   distance 3. A rejected pair can never become acceptable later, so one
   pass over all pairs certifies saturation.
 */
inline Graph gen_random_girth5(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 0)
    throw std::invalid_argument("need n >= 1 and m >= 0");
  SplitMix64 rng(seed);
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      pairs.emplace_back(u, v);
  rng.shuffle(pairs);
  Graph g(n);
  for (auto [u, v] : pairs) {
    if (g.size() == m)
      break;
    if (!detail::within_distance(g, u, v, 3))
      g.add_edge(u, v);
  }
  if (g.size() < m)
    throw generation_error(m, g.size());
  if (auto gi = girth(g); gi && *gi < 5)
    throw std::logic_error("girth-5 generator produced a short cycle");
  return g;
}

} // namespace fkdeg
