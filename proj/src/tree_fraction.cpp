#include "cgseries/tree_fraction.hpp"

#include <string>

#include "cgseries/errors.hpp"

namespace cgs {

RootedTree RootedTree::from_edges(int n, const std::vector<std::pair<int, int>>& edges, int root) {
  if (n <= 0 || root < 0 || root >= n) throw DomainError("invalid tree root");
  if (static_cast<int>(edges.size()) != n - 1) throw DomainError("a tree on n vertices has n - 1 edges");
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw DomainError("invalid tree edge");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  RootedTree t;
  t.root = root;
  t.children.assign(n, {});
  std::vector<int> parent(n, -2);
  std::vector<int> stack{root};
  parent[root] = -1;
  int seen = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int w : adj[v]) {
      if (w == parent[v]) continue;
      if (parent[w] != -2) throw DomainError("edges contain a cycle");
      parent[w] = v;
      t.children[v].push_back(w);
      stack.push_back(w);
    }
  }
  if (seen != n) throw DomainError("edges do not connect all vertices");
  return t;
}

namespace {

RatQ evaluate_vertex(const RootedTree& tree, int v, const RatQ& z) {
  RatQ denom = z;
  for (int c : tree.children[v]) denom -= evaluate_vertex(tree, c, z);
  if (denom.is_zero()) throw DomainError("zero denominator at vertex " + std::to_string(v));
  return denom.inverse();
}

}  // namespace

RatQ tree_continued_fraction(const RootedTree& tree) {
  const RatQ z(QPoly::from_ints({1, 0, 1}), QPoly::q());
  return evaluate_vertex(tree, tree.root, z);
}

}  // namespace cgs
