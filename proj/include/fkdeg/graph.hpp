#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fkdeg/errors.hpp"

namespace fkdeg {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/**
   Simple undirected graph on the dense vertex set 0..n-1.

   Neighbor lists are kept sorted, so adjacency tests are O(log d) and
   two graphs with the same edge set compare equal.
 */
class Graph {
public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(checked_order(n))) {}

  static Graph from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges)
      g.add_edge(u, v);
    return g;
  }

  /// Throws std::invalid_argument on loops, duplicates and out-of-range ends.
  void add_edge(Vertex u, Vertex v) {
    if (!contains(u) || !contains(v))
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    auto &nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
      throw std::invalid_argument("duplicate edge " + std::to_string(std::min(u, v)) + " " +
                                  std::to_string(std::max(u, v)));
    nu.insert(it, v);
    auto &nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edges_;
  }

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edges_; }
  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }

  bool adjacent(Vertex u, Vertex v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  int max_degree() const {
    int d = 0;
    for (const auto &nb : adj_)
      d = std::max(d, static_cast<int>(nb.size()));
    return d;
  }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (u < v)
          out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  static int checked_order(int n) {
    if (n < 0)
      throw std::invalid_argument("negative vertex count");
    return n;
  }

  std::vector<std::vector<Vertex>> adj_;
  int edges_ = 0;
};

/// Disjoint union; the vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph &a, const Graph &b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges())
    g.add_edge(u, v);
  for (auto [u, v] : b.edges())
    g.add_edge(u + a.order(), v + a.order());
  return g;
}

// ---------------------------------------------------------------------------
// Edge-list text format
// ---------------------------------------------------------------------------

namespace detail {

inline bool parse_int(std::string_view tok, long long &out) {
  if (tok.empty() || !(tok.front() >= '0' && tok.front() <= '9'))
    return false;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

// Exactly two base-10 tokens separated by a single space.
inline bool parse_pair(std::string_view line, long long &a, long long &b) {
  auto sp = line.find(' ');
  if (sp == std::string_view::npos)
    return false;
  return parse_int(line.substr(0, sp), a) && parse_int(line.substr(sp + 1), b);
}

} // namespace detail

/**
   Parse the edge-list format: '#' lines are comments, blank lines are
   ignored, the first significant line is "n m", followed by exactly m
   lines "u v" with 0 <= u < v < n.
 */
inline Graph parse_graph(std::istream &in) {
  std::string raw;
  int line_no = 0;
  std::optional<Graph> g;
  long long expected = 0;
  long long seen = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (line.empty() || line.front() == '#')
      continue;

    long long a = 0, b = 0;
    if (!g) {
      if (!detail::parse_pair(line, a, b))
        throw parse_error(line_no, "malformed header, expected \"n m\"");
      if (a > 100'000'000 || b > a * (a - 1) / 2)
        throw parse_error(line_no, "edge count impossible for a simple graph");
      g.emplace(static_cast<int>(a));
      expected = b;
      continue;
    }
    if (!detail::parse_pair(line, a, b))
      throw parse_error(line_no, "malformed edge line, expected \"u v\"");
    if (seen == expected)
      throw parse_error(line_no, "more edge lines than announced");
    if (a >= g->order() || b >= g->order())
      throw parse_error(line_no, "vertex out of range");
    if (a == b)
      throw parse_error(line_no, "self-loop at vertex " + std::to_string(a));
    if (a > b)
      throw parse_error(line_no, "edge endpoints must satisfy u < v");
    if (g->adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b)))
      throw parse_error(line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    g->add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    ++seen;
  }
  if (!g)
    throw parse_error(line_no, "missing header");
  if (seen != expected)
    throw parse_error(line_no, "expected " + std::to_string(expected) + " edges, found " +
                                   std::to_string(seen));
  return std::move(*g);
}

inline Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

inline void write_graph(std::ostream &out, const Graph &g, std::string_view comment = {}) {
  if (!comment.empty())
    out << "# " << comment << '\n';
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges())
    out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph &g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

// ---------------------------------------------------------------------------
// Degree profile
// ---------------------------------------------------------------------------

/// Degrees sorted non-increasingly, with the vertex realizing each entry.
struct DegreeProfile {
  std::vector<int> deltas;
  std::vector<Vertex> witnesses;

  std::size_t length() const { return deltas.size(); }

  /// 1-based access; entries past the end read as 0.
  int delta(std::size_t i) const { return i >= 1 && i <= deltas.size() ? deltas[i - 1] : 0; }
  Vertex witness(std::size_t i) const { return witnesses.at(i - 1); }
};

/// Ties among equal degrees are broken by ascending vertex id.
inline DegreeProfile degree_profile(const Graph &g) {
  DegreeProfile p;
  p.witnesses.resize(static_cast<std::size_t>(g.order()));
  std::iota(p.witnesses.begin(), p.witnesses.end(), 0);
  std::stable_sort(p.witnesses.begin(), p.witnesses.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  p.deltas.reserve(p.witnesses.size());
  for (Vertex v : p.witnesses)
    p.deltas.push_back(g.degree(v));
  return p;
}

// ---------------------------------------------------------------------------
// Structure
// ---------------------------------------------------------------------------

/// Length of a shortest cycle, or nullopt for acyclic graphs. One BFS per vertex.
inline std::optional<int> girth(const Graph &g) {
  const int n = g.order();
  int best = -1;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    dist[s] = 0;
    parent[s] = -1;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      // Nothing shorter can be found past this depth.
      if (best != -1 && 2 * dist[x] >= best)
        break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          int len = dist[x] + dist[y] + 1;
          if (best == -1 || len < best)
            best = len;
        }
      }
    }
  }
  if (best == -1)
    return std::nullopt;
  return best;
}

/// Connected components, each sorted, ordered by smallest member.
inline std::vector<std::vector<Vertex>> components(const Graph &g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s])
      continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex y : g.neighbors(comp[i]))
        if (!seen[y]) {
          seen[y] = 1;
          comp.push_back(y);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_forest(const Graph &g) {
  return g.size() == g.order() - static_cast<int>(components(g).size());
}

// ---------------------------------------------------------------------------
// Vertex deletion
// ---------------------------------------------------------------------------

/// G - X with both directions of the relabeling; removed vertices map to -1.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> old_to_new;
  std::vector<Vertex> new_to_old;
};

inline std::vector<char> vertex_mask(const Graph &g, std::span<const Vertex> xs) {
  std::vector<char> mask(static_cast<std::size_t>(g.order()), 0);
  for (Vertex x : xs) {
    if (!g.contains(x))
      throw std::out_of_range("unknown vertex " + std::to_string(x));
    mask[x] = 1;
  }
  return mask;
}

inline InducedSubgraph remove_vertices(const Graph &g, std::span<const Vertex> xs) {
  auto removed = vertex_mask(g, xs);
  InducedSubgraph out;
  out.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!removed[v]) {
      out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
      out.new_to_old.push_back(v);
    }
  out.graph = Graph(static_cast<int>(out.new_to_old.size()));
  for (auto [u, v] : g.edges())
    if (!removed[u] && !removed[v])
      out.graph.add_edge(out.old_to_new[u], out.old_to_new[v]);
  return out;
}

/// Degrees in G - X, indexed by original id; -1 for deleted vertices.
inline std::vector<int> residual_degrees(const Graph &g, std::span<const char> removed) {
  std::vector<int> deg(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (removed[v])
      continue;
    int d = 0;
    for (Vertex w : g.neighbors(v))
      d += removed[w] ? 0 : 1;
    deg[v] = d;
  }
  return deg;
}

/// True iff G - X has at least k vertices of maximum degree, or fewer than k vertices.
inline bool check_fk_condition(const Graph &g, std::span<const Vertex> xs, int k) {
  auto removed = vertex_mask(g, xs);
  auto deg = residual_degrees(g, removed);
  int alive = 0, top = -1, count = 0;
  for (int d : deg) {
    if (d < 0)
      continue;
    ++alive;
    if (d > top) {
      top = d;
      count = 1;
    } else if (d == top) {
      ++count;
    }
  }
  return alive < k || count >= k;
}

} // namespace fkdeg
