#include "cgseries/quiver.hpp"

#include <cstdlib>
#include <fstream>

#include "cgseries/errors.hpp"

namespace cgs {

namespace {

bool is_zero_matrix(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

long max_abs(const IntMatrix& m) {
  long best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) best = std::max(best, std::abs(m(i, j)));
  return best;
}

}  // namespace

RootedTree Graph::as_tree() const {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) {
      if (adjacency(i, j) > 1) throw DomainError("multi-edge in a tree");
      if (adjacency(i, j) == 1) edges.emplace_back(i, j);
    }
  return RootedTree::from_edges(size(), edges, root.value_or(0));
}

Graph graph_from_edges(int n, const std::vector<std::array<long, 3>>& edges, std::optional<int> root) {
  if (n < 1) throw DomainError("a graph needs at least one vertex");
  Graph g;
  g.adjacency = IntMatrix(n, n, 0);
  for (const auto& [u, v, mult] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("loops are not allowed");
    if (mult < 0) throw DomainError("negative edge multiplicity");
    g.adjacency(u, v) += mult;
    g.adjacency(v, u) += mult;
  }
  if (root && (*root < 0 || *root >= n)) throw DomainError("root out of range");
  g.root = root;
  return g;
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("graph: expected an object");
  for (const auto& [key, value] : j.items())
    if (key != "vertices" && key != "edges" && key != "root" && key != "name")
      throw SchemaError("graph: unknown key '" + key + "'");
  if (!j.contains("vertices") || !j["vertices"].is_number_integer()) throw SchemaError("graph: 'vertices' must be an integer");
  std::vector<std::array<long, 3>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw SchemaError("graph: 'edges' must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3) throw SchemaError("graph: edges are [u, v] or [u, v, mult]");
      for (const auto& x : e)
        if (!x.is_number_integer()) throw SchemaError("graph: edge entries must be integers");
      edges.push_back({e[0].get<long>(), e[1].get<long>(), e.size() == 3 ? e[2].get<long>() : 1L});
    }
  }
  std::optional<int> root;
  if (j.contains("root") && !j["root"].is_null()) {
    if (!j["root"].is_number_integer()) throw SchemaError("graph: 'root' must be an integer");
    root = j["root"].get<int>();
  }
  Graph g;
  try {
    g = graph_from_edges(j["vertices"].get<int>(), edges, root);
  } catch (const DomainError& e) {
    throw SchemaError(std::string("graph: ") + e.what());
  }
  if (j.contains("name") && !j["name"].is_string()) throw SchemaError("graph: 'name' must be a string");
  if (j.contains("name")) g.name = j["name"].get<std::string>();
  return g;
}

Json graph_to_json(const Graph& g) {
  Json j;
  if (!g.name.empty()) j["name"] = g.name;
  j["vertices"] = g.size();
  Json edges = Json::array();
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (g.adjacency(u, v) > 0) edges.push_back({u, v, g.adjacency(u, v)});
  j["edges"] = edges;
  if (g.root) j["root"] = *g.root;
  return j;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("graph: invalid JSON: ") + e.what());
  }
  return graph_from_json(j);
}

Graph finite_dynkin_graph(const std::string& name) {
  const DynkinData d = affine_dynkin(name);
  Graph g;
  g.adjacency = finite_adjacency(d);
  g.root = 0;
  g.name = d.name();
  return g;
}

Graph affine_dynkin_graph(const std::string& name) {
  const DynkinData d = affine_dynkin(name);
  Graph g;
  g.adjacency = affine_adjacency(d);
  g.root = 0;
  g.name = "affine " + d.name();
  return g;
}

Graph graph_from_selector(const std::string& selector) {
  if (selector.rfind("dynkin:", 0) == 0) return finite_dynkin_graph(selector.substr(7));
  if (selector.rfind("affine:", 0) == 0) return affine_dynkin_graph(selector.substr(7));
  if (selector.rfind("gfile:", 0) == 0) return load_graph(selector.substr(6));
  throw std::invalid_argument("unknown graph selector '" + selector + "'");
}

Matrix<QPoly> preprojective_kernel(const Graph& g) {
  const int n = g.size();
  Matrix<QPoly> k(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) k(i, j) = QPoly::from_ints({1, -g.adjacency(i, j), 1});
      else if (g.adjacency(i, j) != 0) k(i, j) = QPoly::from_ints({0, -g.adjacency(i, j)});
    }
  return k;
}

PreprojectiveSeries preprojective_H(const Graph& g) {
  const int n = g.size();
  const Matrix<QPoly> kernel = preprojective_kernel(g);
  Matrix<QPoly> a(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = kernel(i, j);
    a(i, n + i) = QPoly(1);
  }
  QPoly prev(1);
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && a(piv, k).is_zero()) ++piv;
    if (piv == n) throw SingularMatrix("preprojective kernel is singular");
    if (piv != k) {
      for (int j = 0; j < 2 * n; ++j) std::swap(a(piv, j), a(k, j));
      sign = -sign;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      for (int j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        a(i, j) = QPoly::exact_div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      }
      a(i, k) = QPoly();
    }
    prev = a(k, k);
  }
  PreprojectiveSeries out;
  out.det = sign > 0 ? prev : -prev;
  out.h = Matrix<RatQ>(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.h(i, j) = RatQ(a(i, n + j), a(i, i));
  const Matrix<RatQ> k = kernel.map([](const QPoly& p) { return RatQ(p); });
  out.verified = k * out.h == Matrix<RatQ>::identity(n);
  return out;
}

std::vector<IntMatrix> chebyshev_matrices(const IntMatrix& c, int count) {
  std::vector<IntMatrix> u;
  if (count <= 0) return u;
  u.push_back(IntMatrix::identity(c.rows()));
  if (count > 1) u.push_back(c);
  while (static_cast<int>(u.size()) < count) {
    const std::size_t k = u.size();
    u.push_back(c * u[k - 1] - u[k - 2]);
  }
  return u;
}

FinitenessReport dynkin_finiteness_check(const Graph& g, const PreprojectiveSeries& series) {
  FinitenessReport r;
  r.all_polynomial = true;
  for (std::size_t i = 0; i < series.h.rows(); ++i)
    for (std::size_t j = 0; j < series.h.cols(); ++j)
      if (!series.h(i, j).is_polynomial()) r.all_polynomial = false;
  r.det_vanishes_at_one = series.det.evaluate(Cyclo(1)).is_zero();

  const int bound = 4 * g.size() + 2;
  std::vector<IntMatrix> u = chebyshev_matrices(g.adjacency, 2);
  for (int h = 1; h <= bound; ++h) {
    if (is_zero_matrix(u[h - 1])) {
      r.coxeter_number = h;
      break;
    }
    if (max_abs(u[h]) > (1L << 40)) break;
    u.push_back(g.adjacency * u[h] - u[h - 1]);
  }
  if (r.coxeter_number) {
    const int h = *r.coxeter_number;
    const int n = g.size();
    Matrix<RatQ> twist(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        QPoly p = QPoly::monomial(Cyclo(Rational(-u[h](i, j))), h);
        if (i == j) p += QPoly(1);
        twist(i, j) = RatQ(p);
      }
    const Matrix<RatQ> prod = twist * series.h;
    r.twisted_polynomial = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!prod(i, j).is_polynomial()) r.twisted_polynomial = false;
  }
  return r;
}

FinitenessReport dynkin_finiteness_check(const Graph& g) { return dynkin_finiteness_check(g, preprojective_H(g)); }

}  // namespace cgs
