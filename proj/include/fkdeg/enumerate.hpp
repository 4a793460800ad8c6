#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "fkdeg/graph.hpp"

// Every forest on n unlabeled vertices, each exactly once.
//
// Rooted trees are built as multisets of smaller rooted trees and encoded
// by the usual parenthesis string with sorted children. A free tree is
// identified by the smallest encoding among its center-rooted versions,
// and a forest is a multiset of free trees.

namespace fkdeg {

namespace detail {

inline std::string rooted_code(const Graph &g, Vertex u, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : g.neighbors(u))
    if (w != parent)
      kids.push_back(rooted_code(g, w, u));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (auto &k : kids)
    out += k;
  return out + ")";
}

inline std::vector<Vertex> tree_centers(const Graph &g) {
  int n = g.order();
  if (n <= 2) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
      all[v] = v;
    return all;
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1)
      layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : g.neighbors(v))
        if (--deg[w] == 1)
          next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

inline std::string free_tree_code(const Graph &tree) {
  std::string best;
  for (Vertex c : tree_centers(tree)) {
    auto code = rooted_code(tree, c, -1);
    if (best.empty() || code < best)
      best = code;
  }
  return best;
}

inline Graph tree_from_code(const std::string &code) {
  int n = static_cast<int>(std::count(code.begin(), code.end(), '('));
  Graph g(n);
  std::vector<Vertex> stack;
  Vertex next = 0;
  for (char ch : code) {
    if (ch == '(') {
      Vertex v = next++;
      if (!stack.empty())
        g.add_edge(stack.back(), v);
      stack.push_back(v);
    } else {
      stack.pop_back();
    }
  }
  return g;
}

// Rooted tree codes by size, sizes 1..n.
inline std::vector<std::vector<std::string>> rooted_trees_upto(int n) {
  std::vector<std::vector<std::string>> by_size(static_cast<std::size_t>(n + 1));
  if (n >= 1)
    by_size[1] = {"()"};
  struct Item {
    int size;
    const std::string *code;
  };
  for (int s = 2; s <= n; ++s) {
    std::vector<Item> items;
    for (int z = 1; z < s; ++z)
      for (const auto &c : by_size[z])
        items.push_back({z, &c});
    std::set<std::string> found;
    std::vector<std::size_t> chosen;
    // Multisets of items with non-increasing index, total size s - 1.
    auto rec = [&](auto &&self, std::size_t max_index, int left) -> void {
      if (left == 0) {
        std::vector<std::string> kids;
        for (auto i : chosen)
          kids.push_back(*items[i].code);
        std::sort(kids.begin(), kids.end());
        std::string code = "(";
        for (auto &k : kids)
          code += k;
        found.insert(code + ")");
        return;
      }
      for (std::size_t i = 0; i <= max_index && i < items.size(); ++i) {
        if (items[i].size > left)
          continue;
        chosen.push_back(i);
        self(self, i, left - items[i].size);
        chosen.pop_back();
      }
    };
    rec(rec, items.size(), s - 1);
    by_size[s].assign(found.begin(), found.end());
  }
  return by_size;
}

} // namespace detail

/// All unlabeled trees with n vertices (n >= 1).
inline std::vector<Graph> all_trees(int n) {
  auto rooted = detail::rooted_trees_upto(n);
  std::set<std::string> codes;
  for (const auto &c : rooted[static_cast<std::size_t>(n)])
    codes.insert(detail::free_tree_code(detail::tree_from_code(c)));
  std::vector<Graph> out;
  for (const auto &c : codes)
    out.push_back(detail::tree_from_code(c));
  return out;
}

/// All unlabeled forests with n vertices (n >= 1); components are numbered consecutively.
inline std::vector<Graph> all_forests(int n) {
  std::vector<Graph> trees; // every tree of size 1..n, grouped by size
  for (int s = 1; s <= n; ++s)
    for (auto &t : all_trees(s))
      trees.push_back(std::move(t));

  std::vector<Graph> out;
  std::vector<std::size_t> chosen;
  auto rec = [&](auto &&self, std::size_t max_index, int left) -> void {
    if (left == 0) {
      Graph g(0);
      for (auto i : chosen)
        g = disjoint_union(g, trees[i]);
      out.push_back(std::move(g));
      return;
    }
    for (std::size_t i = 0; i <= max_index && i < trees.size(); ++i) {
      if (trees[i].order() > left)
        continue;
      chosen.push_back(i);
      self(self, i, left - trees[i].order());
      chosen.pop_back();
    }
  };
  rec(rec, trees.size(), n);
  return out;
}

} // namespace fkdeg
