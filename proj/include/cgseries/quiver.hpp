#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cgseries/dynkin.hpp"
#include "cgseries/group_io.hpp"
#include "cgseries/ratq.hpp"
#include "cgseries/tree_fraction.hpp"

namespace cgs {

// Undirected multigraph: symmetric nonnegative adjacency with zero diagonal.
struct Graph {
  IntMatrix adjacency;
  std::optional<int> root;
  std::string name;

  int size() const { return static_cast<int>(adjacency.rows()); }
  // Throws DomainError when the graph is not a tree or has multi-edges.
  RootedTree as_tree() const;
};

Graph graph_from_edges(int n, const std::vector<std::array<long, 3>>& edges, std::optional<int> root = std::nullopt);
// { "vertices": n, "edges": [[u, v, mult], ...], "root": optional }
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);
Graph load_graph(const std::string& path);
// "dynkin:A5", "affine:E8", "gfile:PATH"
Graph graph_from_selector(const std::string& selector);
Graph finite_dynkin_graph(const std::string& name);
Graph affine_dynkin_graph(const std::string& name);

// E - qC + q^2 E
Matrix<QPoly> preprojective_kernel(const Graph& g);

struct PreprojectiveSeries {
  QPoly det;         // det(E - qC + q^2 E)
  Matrix<RatQ> h;    // its inverse
  bool verified = false;  // (E - qC + q^2 E) H = E
};

// Fraction-free Gauss-Jordan elimination over Q[q]; the product with the
// kernel is re-checked.
PreprojectiveSeries preprojective_H(const Graph& g);

struct FinitenessReport {
  bool all_polynomial = false;       // every H entry a polynomial
  bool det_vanishes_at_one = false;  // det(2E - C) = 0
  // Smallest h <= bound with U_{h-1}(C/2) = 0 (Chebyshev polynomials of the
  // second kind), i.e. the Coxeter number for finite ADE graphs.
  std::optional<int> coxeter_number;
  // (E + P q^h) H is a polynomial matrix, P = -U_h(C/2).
  bool twisted_polynomial = false;
};

FinitenessReport dynkin_finiteness_check(const Graph& g, const PreprojectiveSeries& series);
FinitenessReport dynkin_finiteness_check(const Graph& g);

// U_k(C/2) for k = 0..count-1.
std::vector<IntMatrix> chebyshev_matrices(const IntMatrix& c, int count);

}  // namespace cgs
