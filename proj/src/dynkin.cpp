#include "cgseries/dynkin.hpp"

#include "cgseries/errors.hpp"

namespace cgs {

std::string DynkinData::name() const { return std::string(1, family) + std::to_string(rank); }

IntMatrix adjacency_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  IntMatrix c(n, n, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw DomainError("bad edge in diagram");
    c(u, v) += 1;
    c(v, u) += 1;
  }
  return c;
}

DynkinData affine_dynkin(char family, int rank) {
  DynkinData d;
  d.family = family;
  d.rank = rank;
  auto& e = d.affine_edges;
  switch (family) {
    case 'A':
      if (rank < 1) throw DomainError("A_n requires n >= 1");
      if (rank == 1) {
        e = {{0, 1}, {0, 1}};
      } else {
        for (int k = 0; k < rank; ++k) e.emplace_back(k, k + 1);
        e.emplace_back(rank, 0);
      }
      d.marks.assign(rank + 1, 1);
      break;
    case 'D':
      if (rank < 4) throw DomainError("D_n requires n >= 4");
      e = {{0, 2}, {1, 2}};
      for (int k = 2; k < rank - 2; ++k) e.emplace_back(k, k + 1);
      e.emplace_back(rank - 1, rank - 2);
      e.emplace_back(rank, rank - 2);
      d.marks.assign(rank + 1, 2);
      d.marks[0] = d.marks[1] = d.marks[rank - 1] = d.marks[rank] = 1;
      break;
    case 'E':
      if (rank == 6) {
        e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}};
        d.marks = {1, 2, 3, 2, 1, 2, 1};
      } else if (rank == 7) {
        e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}};
        d.marks = {1, 2, 3, 4, 3, 2, 1, 2};
      } else if (rank == 8) {
        e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}};
        d.marks = {1, 2, 3, 4, 5, 6, 4, 2, 3};
      } else {
        throw DomainError("E_n requires n in {6, 7, 8}");
      }
      break;
    default: throw DomainError(std::string("unsupported diagram family ") + family);
  }
  const int n = rank + 1;
  const IntMatrix adj = adjacency_from_edges(n, e);
  d.affine_cartan = IntMatrix(n, n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) d.affine_cartan(a, b) = (a == b ? 2 : 0) - adj(a, b);
  d.finite_cartan = d.affine_cartan.minor_matrix(0, 0);
  return d;
}

DynkinData affine_dynkin(const std::string& name) {
  if (name.size() < 2) throw DomainError("malformed diagram name: " + name);
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw DomainError("");
  } catch (const std::exception&) {
    throw DomainError("malformed diagram name: " + name);
  }
  return affine_dynkin(name[0], rank);
}

DynkinData dynkin_for_group(const GroupModel& g) {
  switch (g.family) {
    case Family::Cyclic: return affine_dynkin('A', g.param - 1);
    case Family::BinaryDihedral: return affine_dynkin('D', g.param + 2);
    case Family::Tetrahedral: return affine_dynkin('E', 6);
    case Family::Octahedral: return affine_dynkin('E', 7);
    case Family::Icosahedral: return affine_dynkin('E', 8);
    default: break;
  }
  throw DomainError(g.name + " is not an SU(2) family with a McKay diagram");
}

IntMatrix finite_adjacency(const DynkinData& d) {
  const IntMatrix a = affine_adjacency(d);
  return a.minor_matrix(0, 0);
}

IntMatrix affine_adjacency(const DynkinData& d) { return adjacency_from_edges(d.rank + 1, d.affine_edges); }

}  // namespace cgs
