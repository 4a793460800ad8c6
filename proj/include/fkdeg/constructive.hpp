#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "fkdeg/certificate.hpp"
#include "fkdeg/errors.hpp"
#include "fkdeg/graph.hpp"

// Deletion procedures that come with a guaranteed bound on |X|. Whenever
// several vertices qualify for deletion the lowest id is taken, so every
// procedure is deterministic. Degree witnesses are recomputed on the
// current graph after each deletion round.

namespace fkdeg {

namespace detail {

/// Working graph that remembers the original id of each vertex.
struct Tracked {
  Graph graph;
  std::vector<Vertex> original;

  static Tracked of(const Graph &g) {
    Tracked t{g, {}};
    t.original.resize(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
      t.original[v] = v;
    return t;
  }

  /// Deletes current-ids `xs`, appending their original ids to `out`.
  Tracked without(std::span<const Vertex> xs, std::vector<Vertex> &out) const {
    for (Vertex x : xs)
      out.push_back(original[x]);
    auto sub = remove_vertices(graph, xs);
    Tracked next{std::move(sub.graph), {}};
    for (Vertex v : sub.new_to_old)
      next.original.push_back(original[v]);
    return next;
  }
};

inline void require(bool cond, const char *what) {
  if (!cond)
    throw std::logic_error(std::string("constructive procedure reached an impossible state: ") +
                           what);
}

inline bool in_closed_nbhd(const Graph &g, Vertex center, Vertex v) {
  return v == center || g.adjacent(center, v);
}

/// The `count` lowest-id neighbors of u lying outside N[a] for every a in avoid.
inline std::vector<Vertex> neighbors_outside(const Graph &g, Vertex u,
                                             std::initializer_list<Vertex> avoid, int count) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(u)) {
    if (static_cast<int>(out.size()) == count)
      break;
    bool blocked = false;
    for (Vertex a : avoid)
      blocked = blocked || in_closed_nbhd(g, a, w);
    if (!blocked)
      out.push_back(w);
  }
  require(static_cast<int>(out.size()) == count, "not enough deletable neighbors");
  return out;
}

inline int count_k2_components(const Graph &g) {
  int p = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1 && g.degree(g.neighbors(v)[0]) == 1 && v < g.neighbors(v)[0])
      ++p;
  return p;
}

inline Vertex lowest_k2_vertex(const Graph &g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1 && g.degree(g.neighbors(v)[0]) == 1)
      return v;
  require(false, "no K2 component");
  return -1;
}

inline long long binom2(long long a) { return a * (a - 1) / 2; }

} // namespace detail

// ---------------------------------------------------------------------------
// Peeling
// ---------------------------------------------------------------------------

/**
   Delete the k-1 highest-degree vertices, then keep deleting every vertex
   of maximum degree while at least k vertices remain but fewer than k of
   them share the maximum degree. If Delta_k(G) < k-1 at most (k-1)^2
   vertices are deleted.
 */
inline RemovalCertificate peel_removal(const Graph &g, int k) {
  if (k < 2)
    throw std::invalid_argument("k must be at least 2");
  std::vector<Vertex> xs;
  if (!check_fk_condition(g, {}, k)) {
    auto cur = detail::Tracked::of(g);
    auto prof = degree_profile(cur.graph);
    std::vector<Vertex> top(prof.witnesses.begin(),
                            prof.witnesses.begin() + std::min<std::size_t>(k - 1, prof.length()));
    cur = cur.without(top, xs);
    while (cur.graph.order() >= k && !check_fk_condition(cur.graph, {}, k)) {
      int d = cur.graph.max_degree();
      std::vector<Vertex> peel;
      for (Vertex v = 0; v < cur.graph.order(); ++v)
        if (cur.graph.degree(v) == d)
          peel.push_back(v);
      cur = cur.without(peel, xs);
    }
  }
  return make_certificate(g, std::move(xs), k, Method::peel);
}

// ---------------------------------------------------------------------------
// Girth at least 5
// ---------------------------------------------------------------------------

/// Delta_1 + ... + Delta_{k-1} - (k-1) Delta_k.
inline long long top_degree_excess(const DegreeProfile &p, int k) {
  long long s = 0;
  for (int i = 1; i < k; ++i)
    s += p.delta(static_cast<std::size_t>(i));
  return s - static_cast<long long>(k - 1) * p.delta(static_cast<std::size_t>(k));
}

/**
   For a graph of girth at least 5 whose top k-1 degrees exceed Delta_k by
   at most t in total (t >= (k-1)^2): reduce u_1..u_{k-1} to degree
   Delta_k by deleting neighbors that lie in no other N[u_j]. Falls back to
   peeling when Delta_k < k-1.
 */
inline RemovalCertificate girth5_equalize(const Graph &g, int k, long long t) {
  using kind = precondition_error::kind;
  if (k < 2)
    throw precondition_error(kind::parameter, "k must be at least 2");
  if (t < static_cast<long long>(k - 1) * (k - 1))
    throw precondition_error(kind::parameter, "t must be at least (k-1)^2");
  if (auto gi = girth(g); gi && *gi < 5)
    throw precondition_error(kind::girth, "graph has girth " + std::to_string(*gi) + " < 5");
  auto prof = degree_profile(g);
  if (top_degree_excess(prof, k) > t)
    throw precondition_error(kind::degree_inequality,
                             "Delta_1+...+Delta_{k-1}-(k-1)Delta_k exceeds t");
  if (g.order() < k)
    return make_certificate(g, {}, k, Method::girth5);

  const int dk = prof.delta(static_cast<std::size_t>(k));
  if (dk < k - 1) {
    auto cert = peel_removal(g, k);
    cert.method = Method::girth5;
    return cert;
  }

  std::vector<Vertex> u(prof.witnesses.begin(), prof.witnesses.begin() + k);
  std::vector<Vertex> xs;
  for (int i = 0; i + 1 < k; ++i) {
    int need = prof.delta(static_cast<std::size_t>(i + 1)) - dk;
    for (Vertex w : g.neighbors(u[i])) {
      if (need == 0)
        break;
      bool blocked = false;
      for (int j = 0; j < k && !blocked; ++j)
        blocked = j != i && detail::in_closed_nbhd(g, u[j], w);
      if (!blocked) {
        xs.push_back(w);
        --need;
      }
    }
    detail::require(need == 0, "girth-5 neighbor supply exhausted");
  }
  return make_certificate(g, std::move(xs), k, Method::girth5);
}

// ---------------------------------------------------------------------------
// f_3 on forests
// ---------------------------------------------------------------------------

namespace detail {

// Returns current ids to delete from f (a forest satisfying the hypothesis
// for t), recursing on F - u_1 where needed.
inline void equalize3_step(const Tracked &cur, int t, std::vector<Vertex> &out) {
  const Graph &f = cur.graph;
  if (check_fk_condition(f, {}, 3))
    return;
  auto prof = degree_profile(f);
  const int d1 = prof.delta(1), d2 = prof.delta(2), d3 = prof.delta(3);
  const Vertex u1 = prof.witness(1), u2 = prof.witness(2), u3 = prof.witness(3);
  require(d1 + 2LL * d2 <= binom2(t + 2) + 2, "hypothesis lost in recursion");

  auto take = [&](std::vector<Vertex> xs) {
    for (Vertex x : xs)
      out.push_back(cur.original[x]);
  };

  if (t == 2) {
    if (d1 == 1) {
      // Only K1 and K2 components, exactly one K2 since Delta_1 > Delta_3.
      take({u1});
      return;
    }
    if (d2 == 1) {
      // A star K_{1,d1}, isolated vertices and p copies of K2.
      int p = count_k2_components(f);
      if (p == 1)
        take({u1, lowest_k2_vertex(f)});
      else
        take({u1});
      return;
    }
    require(d2 == 2 && d1 >= 2 && d1 <= 4, "t=2 forces Delta_2 = 2 and Delta_1 in {2,3,4}");
    if (d1 == 2) {
      require(d3 == 1, "Delta_1 = 2 forces Delta_3 = 1");
      if (!f.adjacent(u1, u2)) {
        // Two P3 copies centred at u1 and u2: drop one end of each.
        take({f.neighbors(u1)[0], f.neighbors(u2)[0]});
      } else if (count_k2_components(f) == 0) {
        take({u1, u2});
      } else {
        take({u1});
      }
      return;
    }
    if (d3 == 2) {
      take(neighbors_outside(f, u1, {u2, u3}, d1 - 2));
      return;
    }
    require(d3 == 1, "Delta_1 >= 3 and Delta_3 < 2 forces Delta_3 = 1");
    if (count_k2_components(f) == 0) {
      take({u1, u2});
    } else if (f.adjacent(u1, u2)) {
      take({u1});
    } else {
      take({u1, f.neighbors(u2)[0]});
    }
    return;
  }

  if (static_cast<long long>(d1) + d2 - 2LL * d3 <= t) {
    if (d3 == 0) {
      // A single K2 plus isolated vertices.
      take({u1});
      return;
    }
    if (d3 == 1) {
      std::vector<Vertex> both{u1, u2};
      if (check_fk_condition(f, both, 3)) {
        take(both);
        return;
      }
      auto xs = neighbors_outside(f, u1, {u2}, d1 - 1);
      auto ys = neighbors_outside(f, u2, {u1}, d2 - 1);
      xs.insert(xs.end(), ys.begin(), ys.end());
      require(check_fk_condition(f, xs, 3), "neither Delta_3 = 1 option works");
      take(std::move(xs));
      return;
    }
    auto xs = neighbors_outside(f, u1, {u2, u3}, d1 - d3);
    auto ys = neighbors_outside(f, u2, {u1, u3}, d2 - d3);
    xs.insert(xs.end(), ys.begin(), ys.end());
    take(std::move(xs));
    return;
  }

  std::vector<Vertex> head;
  std::vector<Vertex> drop{u1};
  auto rest = cur.without(drop, head);
  out.insert(out.end(), head.begin(), head.end());
  equalize3_step(rest, t - 1, out);
}

} // namespace detail

inline long long theorem2_lhs(const DegreeProfile &p) { return p.delta(1) + 2LL * p.delta(2); }

/**
   Deletion set of size at most t leaving three vertices of maximum degree
   (or fewer than three vertices) in a forest with
   Delta_1 + 2 Delta_2 <= C(t+2, 2) + 2.
 */
inline RemovalCertificate equalize3_forest(const Graph &f, int t) {
  using kind = precondition_error::kind;
  if (t < 2)
    throw precondition_error(kind::parameter, "t must be at least 2");
  if (!is_forest(f))
    throw precondition_error(kind::not_forest, "input is not a forest");
  if (theorem2_lhs(degree_profile(f)) > detail::binom2(t + 2) + 2)
    throw precondition_error(kind::degree_inequality, "Delta_1 + 2 Delta_2 exceeds C(t+2,2) + 2");
  std::vector<Vertex> xs;
  detail::equalize3_step(detail::Tracked::of(f), t, xs);
  return make_certificate(f, std::move(xs), 3, Method::theorem2);
}

} // namespace fkdeg
