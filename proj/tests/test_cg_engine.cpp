#include <doctest.h>

#include "cgseries/cg_engine.hpp"
#include "cgseries/errors.hpp"

using namespace cgs;

namespace {

QPoly P(std::initializer_list<long> c) { return QPoly::from_ints(c); }

SeriesMatrix square(std::initializer_list<std::initializer_list<RatQ>> rows) {
  SeriesMatrix m(rows.size(), rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (const auto& v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

bool all_pass(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

}  // namespace

TEST_SUITE("cg-engine") {

TEST_CASE("cg matrix examples") {
  const GroupModel z2 = make_cyclic_su2(2);
  CycloMatrix swap(2, 2);
  swap(0, 1) = 2;
  swap(1, 0) = 2;
  CHECK(cg_matrix(z2, z2.defining_row) == swap);
  CHECK(cg_matrix(z2, z2.char_table.row(0)) == CycloMatrix::identity(2));

  const GroupModel s3 = make_symmetric(3);
  CycloMatrix expected(3, 3);
  const long table[3][3] = {{0, 1, 0}, {1, 1, 1}, {0, 1, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) expected(i, j) = table[i][j];
  CHECK(cg_matrix(s3, s3.char_table.row(1)) == expected);
}

TEST_CASE("cg matrices multiply like characters") {
  for (const char* sel : {"cyclic:5", "bd:3", "2T", "sym:4"}) {
    const GroupModel g = make_builtin(sel);
    INFO(sel);
    for (int a = 0; a < g.num_classes(); ++a)
      for (int b = a; b < g.num_classes(); ++b) {
        std::vector<Cyclo> prod;
        for (int k = 0; k < g.num_classes(); ++k) prod.push_back(g.char_table(a, k) * g.char_table(b, k));
        CHECK(cg_matrix(g, prod) == cg_matrix(g, g.char_table.row(a)) * cg_matrix(g, g.char_table.row(b)));
      }
  }
}

TEST_CASE("series matrix examples for Z/2") {
  const GroupModel z2 = make_cyclic_su2(2);
  const SeriesMatrix s = series_matrix(z2, SeriesKind::S, Sign::Plus);
  CHECK(s(0, 0) == RatQ(P({1, 0, 1}), P({1, 0, -1}).pow(2)));
  CHECK(series_matrix(z2, SeriesKind::A, Sign::Minus) == square({{RatQ(P({1, 0, 1})), RatQ(P({0, -2}))},
                                                                  {RatQ(P({0, -2})), RatQ(P({1, 0, 1}))}}));
  // Trivial multiplicity in R^{(x)k}: (2^k + (-2)^k)/2.
  const auto t = series_matrix(z2, SeriesKind::T, Sign::Plus)(0, 0).series_prefix(8);
  for (int k = 0; k <= 8; ++k) CHECK(t[k] == Cyclo(((1L << k) + (k % 2 ? -(1L << k) : (1L << k))) / 2));
}

TEST_CASE("symmetric powers of cyclic groups count monomials") {
  // x^a y^b carries weight a - b; (S^k (x) R_i, R_j) counts a + b = k with a - b + i = j mod m.
  for (int m = 2; m <= 6; ++m) {
    const SeriesMatrix s = series_matrix(make_cyclic_su2(m), SeriesKind::S, Sign::Plus);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const auto coeffs = s(i, j).series_prefix(15);
        for (int k = 0; k <= 15; ++k) {
          long count = 0;
          for (int a = 0; a <= k; ++a) count += (((a - (k - a) + i - j) % m) + m) % m == 0;
          CHECK(coeffs[k] == Cyclo(count));
        }
      }
  }
}

TEST_CASE("binary icosahedral invariants") {
  const SeriesMatrix s = series_matrix(make_binary_icosahedral(), SeriesKind::S, Sign::Plus);
  const RatQ klein(P({1}) + QPoly::monomial(Cyclo(1), 30), QPoly::one_minus_q_pow(12) * QPoly::one_minus_q_pow(20));
  CHECK(s(0, 0) == klein);
}

TEST_CASE("serial and parallel series agree") {
  for (const char* sel : {"cyclic:4", "bd:3", "2T", "2O", "sym:4"}) {
    const GroupModel g = make_builtin(sel);
    for (auto kind : {SeriesKind::S, SeriesKind::A, SeriesKind::T, SeriesKind::P})
      for (auto sign : {Sign::Plus, Sign::Minus}) {
        INFO(sel << " " << kind_name(kind, sign));
        CHECK(series_matrix(g, kind, sign) == series_matrix_serial(g, kind, sign));
      }
  }
}

TEST_CASE("series coefficients are nonnegative integers") {
  for (const char* sel : {"bd:4", "2T", "sym:4"}) {
    const SeriesMatrix s = series_matrix(make_builtin(sel), SeriesKind::S, Sign::Plus);
    for (std::size_t i = 0; i < s.rows(); ++i)
      for (std::size_t j = 0; j < s.cols(); ++j)
        for (const auto& c : s(i, j).series_prefix(12)) CHECK((c.is_integer() && c.rational_value() >= 0));
  }
}

TEST_CASE("minor examples") {
  const GroupModel z2 = make_cyclic_su2(2);
  const MinorResult m = minor_series(z2, SeriesKind::S, Sign::Plus, {0, 1}, {0, 1});
  CHECK(m.agree);
  CHECK(m.direct == RatQ(P({1}), P({1, 0, -1}).pow(2)));
  const MinorResult t = minor_series(make_binary_tetrahedral(), SeriesKind::A, Sign::Minus, {0, 1}, {0, 1});
  CHECK(t.agree);
  CHECK(t.character_formula == t.direct);
  CHECK_THROWS(minor_series(z2, SeriesKind::S, Sign::Plus, {0, 0}, {0, 1}));
}

TEST_CASE("all minors agree, serial and parallel") {
  for (const char* sel : {"cyclic:4", "bd:2", "sym:3"}) {
    const GroupModel g = make_builtin(sel);
    for (int k = 1; k <= 3 && k <= g.num_classes(); ++k) {
      const MinorSweep par = check_all_minors(g, SeriesKind::S, Sign::Plus, k);
      const MinorSweep ser = check_all_minors_serial(g, SeriesKind::S, Sign::Plus, k);
      CHECK(par.ok());
      CHECK(ser.ok());
      CHECK(par.checked == ser.checked);
    }
  }
  CHECK(k_subsets(5, 2).size() == 10);
}

TEST_CASE("rows via the first row") {
  const GroupModel z2 = make_cyclic_su2(2);
  const SeriesMatrix s = series_matrix(z2, SeriesKind::S, Sign::Plus);
  CHECK(row_via_first(z2, SeriesKind::S, Sign::Plus, 0) == s.row(0));
  const RatQ den(P({1}), P({1, 0, -1}).pow(2));
  CHECK(row_via_first(z2, SeriesKind::S, Sign::Plus, 1) ==
        std::vector<RatQ>{RatQ(P({0, 2})) * den, RatQ(P({1, 0, 1})) * den});
  const GroupModel s3 = make_symmetric(3);
  for (int i = 0; i < 3; ++i)
    CHECK(row_via_first(s3, SeriesKind::S, Sign::Plus, i) == series_matrix(s3, SeriesKind::S, Sign::Plus).row(i));
}

TEST_CASE("relation suite") {
  for (const char* sel : {"cyclic:2", "cyclic:5", "bd:3", "2T", "sym:3", "sym:4"}) {
    const GroupModel g = make_builtin(sel);
    INFO(sel);
    const auto checks = relation_suite(g);
    CHECK(checks.size() == 4);
    CHECK(all_pass(checks));
    for (const auto& c : printed_relation_variants(g)) CHECK_FALSE(c.pass);
  }
}

TEST_CASE("exterior times symmetric is the identity") {
  const GroupModel g = make_binary_octahedral();
  CHECK(series_matrix(g, SeriesKind::A, Sign::Minus) * series_matrix(g, SeriesKind::S, Sign::Plus) ==
        SeriesMatrix::identity(g.num_classes()));
}

}
