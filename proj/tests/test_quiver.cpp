#include <doctest.h>

#include "cgseries/cg_engine.hpp"
#include "cgseries/errors.hpp"
#include "cgseries/quiver.hpp"

using namespace cgs;

namespace {

QPoly P(std::initializer_list<long> c) { return QPoly::from_ints(c); }

}  // namespace

TEST_SUITE("quiver-series") {

TEST_CASE("single vertex") {
  const auto s = preprojective_H(graph_from_edges(1, {}));
  CHECK(s.verified);
  CHECK(s.h(0, 0) == RatQ(P({1}), P({1, 0, 1})));
}

TEST_CASE("path A2") {
  const auto s = preprojective_H(finite_dynkin_graph("A2"));
  CHECK(s.verified);
  const QPoly det = P({1, 0, 1}).pow(2) - P({0, 0, 1});
  CHECK(s.det == det);
  // Inverse of [[a, -q], [-q, a]] with a = 1 + q^2 is [[a, q], [q, a]] / det.
  CHECK(s.h(0, 0) == RatQ(P({1, 0, 1}), det));
  CHECK(s.h(0, 1) == RatQ(P({0, 1}), det));
}

TEST_CASE("affine E8 against the continued fraction and the invariants") {
  const Graph e8 = affine_dynkin_graph("E8");
  const auto s = preprojective_H(e8);
  CHECK(s.verified);
  const RatQ cf = tree_continued_fraction(e8.as_tree());
  CHECK(RatQ(QPoly::q()) * s.h(0, 0) == cf);
  const SeriesMatrix m = series_matrix(make_binary_icosahedral(), SeriesKind::S, Sign::Plus);
  CHECK(RatQ(QPoly::q()) * m(0, 0) == cf);
}

TEST_CASE("McKay graphs reproduce the symmetric-power matrix") {
  for (const char* name : {"A4", "D5", "E6", "E7"}) {
    const auto s = preprojective_H(affine_dynkin_graph(name));
    const GroupModel g = make_builtin(std::string(name) == "A4"   ? "cyclic:5"
                                      : std::string(name) == "D5" ? "bd:3"
                                      : std::string(name) == "E6" ? "2T"
                                                                  : "2O");
    INFO(name);
    CHECK(s.h == series_matrix(g, SeriesKind::S, Sign::Plus));
  }
}

TEST_CASE("finite type graphs") {
  // H is not polynomial for finite diagrams; (E - U_h q^h) H is, with h the Coxeter number.
  const auto a3 = dynkin_finiteness_check(finite_dynkin_graph("A3"));
  CHECK_FALSE(a3.all_polynomial);
  CHECK(a3.coxeter_number == 4);
  CHECK(a3.twisted_polynomial);
  const std::pair<const char*, int> cases[] = {{"A1", 2}, {"A5", 6}, {"D4", 6}, {"D6", 10}, {"E6", 12}, {"E7", 18}, {"E8", 30}};
  for (const auto& [name, h] : cases) {
    INFO(name);
    const auto r = dynkin_finiteness_check(finite_dynkin_graph(name));
    CHECK(r.coxeter_number == h);
    CHECK(r.twisted_polynomial);
    CHECK_FALSE(r.det_vanishes_at_one);
  }
}

TEST_CASE("affine and wild graphs") {
  const auto tri = dynkin_finiteness_check(affine_dynkin_graph("A2"));
  CHECK(tri.det_vanishes_at_one);
  CHECK_FALSE(tri.all_polynomial);
  CHECK_FALSE(tri.coxeter_number.has_value());
  const Graph wild = graph_from_edges(2, {{0, 1, 3}});
  const auto w = dynkin_finiteness_check(wild);
  CHECK_FALSE(w.all_polynomial);
  CHECK_FALSE(w.det_vanishes_at_one);
  CHECK_FALSE(w.coxeter_number.has_value());
}

TEST_CASE("Chebyshev matrices") {
  const auto u = chebyshev_matrices(finite_dynkin_graph("A2").adjacency, 4);
  CHECK(u[0] == IntMatrix::identity(2));
  CHECK(u[1] == finite_dynkin_graph("A2").adjacency);
  CHECK(u[2] == IntMatrix(2, 2));
}

TEST_CASE("graph JSON") {
  const Graph g = graph_from_json(Json::parse(R"({"vertices": 3, "edges": [[0, 1, 1], [1, 2, 2]], "root": 1})"));
  CHECK(g.size() == 3);
  CHECK(g.adjacency(1, 2) == 2);
  CHECK(g.root == 1);
  CHECK(graph_from_json(graph_to_json(g)).adjacency == g.adjacency);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": 2, "edges": [[0, 0, 1]]})")), SchemaError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": 2, "edges": [], "colour": 1})")), SchemaError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": 2, "edges": [[0, 5, 1]]})")), SchemaError);
  CHECK_THROWS(graph_from_selector("dynkin:Z9"));
  CHECK_THROWS_AS(g.as_tree(), DomainError);
}

TEST_CASE("H has nonnegative integer series coefficients on small graphs") {
  for (const char* sel : {"dynkin:D5", "affine:D4", "affine:A3"}) {
    const auto s = preprojective_H(graph_from_selector(sel));
    for (std::size_t i = 0; i < s.h.rows(); ++i)
      for (std::size_t j = 0; j < s.h.cols(); ++j) {
        const auto c = (s.h(i, j) / RatQ(P({1, 0, -1}))).series_prefix(12);
        for (const auto& v : c) CHECK(v.is_integer());
      }
  }
}

}
