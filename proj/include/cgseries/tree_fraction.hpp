#pragma once

#include <utility>
#include <vector>

#include "cgseries/ratq.hpp"

namespace cgs {

struct RootedTree {
  int root = 0;
  std::vector<std::vector<int>> children;

  int size() const { return static_cast<int>(children.size()); }
  // Orients an undirected edge list away from `root`; throws DomainError
  // when the edges do not form a tree on vertices 0..n-1.
  static RootedTree from_edges(int n, const std::vector<std::pair<int, int>>& edges, int root);
};

// Branched continued fraction f_v = 1 / (z - sum_{c child of v} f_c) with
// z = q + 1/q, evaluated bottom-up; returns f_root.
RatQ tree_continued_fraction(const RootedTree& tree);

}  // namespace cgs
