#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fkdeg/graph.hpp"

namespace fkdeg {

enum class Method { dp, brute, peel, girth5, theorem2 };

inline std::string_view to_string(Method m) {
  switch (m) {
  case Method::dp:
    return "dp";
  case Method::brute:
    return "brute";
  case Method::peel:
    return "peel";
  case Method::girth5:
    return "girth5";
  case Method::theorem2:
    return "theorem2";
  }
  return "?";
}

/**
   A deletion set X (original vertex ids, sorted) together with what G - X
   looks like: either the residual maximum degree and every vertex attaining
   it, or the flag that fewer than k vertices remain.
 */
struct RemovalCertificate {
  std::vector<Vertex> removed;
  std::optional<int> residual_max_degree;
  std::vector<Vertex> witnesses;
  bool order_below_k = false;
  Method method = Method::dp;

  int size() const { return static_cast<int>(removed.size()); }
};

/// Builds the certificate for X from scratch. Does not judge validity.
inline RemovalCertificate make_certificate(const Graph &g, std::vector<Vertex> xs, int k,
                                           Method method) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  RemovalCertificate cert;
  cert.method = method;
  auto removed = vertex_mask(g, xs);
  auto deg = residual_degrees(g, removed);
  int alive = g.order() - static_cast<int>(xs.size());
  cert.removed = std::move(xs);
  if (alive < k) {
    cert.order_below_k = true;
    return cert;
  }
  int top = *std::max_element(deg.begin(), deg.end());
  cert.residual_max_degree = top;
  for (Vertex v = 0; v < g.order(); ++v)
    if (deg[v] == top)
      cert.witnesses.push_back(v);
  return cert;
}

/// Re-derives everything the certificate claims against g.
inline bool validate_certificate(const Graph &g, const RemovalCertificate &cert, int k) {
  for (Vertex x : cert.removed)
    if (!g.contains(x))
      return false;
  if (!std::is_sorted(cert.removed.begin(), cert.removed.end()) ||
      std::adjacent_find(cert.removed.begin(), cert.removed.end()) != cert.removed.end())
    return false;
  if (!check_fk_condition(g, cert.removed, k))
    return false;

  auto removed = vertex_mask(g, cert.removed);
  int alive = g.order() - cert.size();
  if (cert.order_below_k)
    return alive < k;
  if (!cert.residual_max_degree || static_cast<int>(cert.witnesses.size()) < k)
    return false;
  auto deg = residual_degrees(g, removed);
  int top = *std::max_element(deg.begin(), deg.end());
  if (top != *cert.residual_max_degree)
    return false;
  for (Vertex w : cert.witnesses)
    if (!g.contains(w) || removed[w] || deg[w] != top)
      return false;
  return true;
}

} // namespace fkdeg
