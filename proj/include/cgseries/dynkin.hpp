#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cgseries/group_model.hpp"
#include "cgseries/matrix.hpp"

namespace cgs {

using IntMatrix = Matrix<long>;

// Affine simply-laced diagram together with its finite part.
//
// Node orders (node 0 is the extending node):
//   A~n : cycle 0-1-...-n-0 (A~1: double edge 0=1)
//   D~n : 0-2, 1-2, chain 2..n-2, (n-1)-(n-2), n-(n-2)
//   E~6 : 0-1-2-3-4, 2-5-6
//   E~7 : 0-1-2-3-4-5-6, 3-7
//   E~8 : 0-1-2-3-4-5-6-7, 5-8
// These agree with the irreducible orderings of the SU(2) group models.
struct DynkinData {
  char family = 'A';  // 'A', 'D' or 'E'
  int rank = 0;       // rank of the finite diagram
  std::vector<std::pair<int, int>> affine_edges;  // with multiplicity by repetition
  IntMatrix affine_cartan;
  IntMatrix finite_cartan;  // affine_cartan without node 0
  std::vector<long> marks;

  std::string name() const;  // "A5", "E8", ...
};

DynkinData affine_dynkin(char family, int rank);
// "A5", "D4", "E8"
DynkinData affine_dynkin(const std::string& name);
// Diagram matched by McKay to an SU(2) group model.
DynkinData dynkin_for_group(const GroupModel& g);

// Adjacency matrices (multi-edges add up).
IntMatrix adjacency_from_edges(int n, const std::vector<std::pair<int, int>>& edges);
IntMatrix finite_adjacency(const DynkinData& d);
IntMatrix affine_adjacency(const DynkinData& d);

}  // namespace cgs
