#include <doctest.h>

#include "cgseries/calibration.hpp"
#include "cgseries/cartan_eta.hpp"
#include "cgseries/dynkin.hpp"
#include "cgseries/errors.hpp"
#include "cgseries/weyl.hpp"

using namespace cgs;

namespace {

CycloMatrix from_ints(const IntMatrix& m) { return m.map([](long v) { return Cyclo(v); }); }

// Plain Gauss-Jordan over mpq_class, independent of the library inverse.
std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    const Rational inv = 1 / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Rational>> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(a[i].begin() + n, a[i].end());
  return out;
}

bool equals(const CycloMatrix& m, const std::vector<std::vector<Rational>>& r) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != Cyclo(r[i][j])) return false;
  return true;
}

bool all_pass(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

QPoly P(std::initializer_list<long> c) { return QPoly::from_ints(c); }

}  // namespace

TEST_SUITE("cartan-eta") {

TEST_CASE("euclidean matrices") {
  GroupAnalysis z2(make_cyclic_su2(2));
  CHECK(euclidean_cg(z2) == SeriesMatrix(1, 1, RatQ(P({1, 0, 1}))));
  CHECK(euclidean_cartan(z2) == CycloMatrix(1, 1, Cyclo(2)));
  GroupAnalysis z3(make_cyclic_su2(3));
  CHECK(euclidean_cartan(z3) == from_ints(affine_dynkin("A2").finite_cartan));
  GroupAnalysis i(make_binary_icosahedral());
  CHECK(euclidean_cartan(i) == from_ints(affine_dynkin("E8").finite_cartan));
}

TEST_CASE("McKay correspondence") {
  GroupAnalysis z2(make_cyclic_su2(2));
  CHECK(all_pass(mckay_check(z2)));
  IntMatrix a1(2, 2);
  a1(0, 0) = a1(1, 1) = 2;
  a1(0, 1) = a1(1, 0) = -2;
  CHECK(affine_dynkin("A1").affine_cartan == a1);
  for (const char* sel : {"bd:2", "bd:5", "2T", "2O", "2I", "cyclic:7"}) {
    GroupAnalysis a(make_builtin(sel));
    INFO(sel);
    CHECK(all_pass(mckay_check(a)));
    CHECK(dynkin_for_group(a.group()).marks == a.dims());
  }
  CHECK(dynkin_for_group(make_binary_dihedral(2)).name() == "D4");
  CHECK(dynkin_for_group(make_binary_tetrahedral()).name() == "E6");
}

TEST_CASE("inverse character table") {
  CHECK(inverse_char_table(make_cyclic_su2(2)) == CycloMatrix(1, 1, Cyclo(-1)));
  for (const char* sel : {"cyclic:3", "2T", "bd:4"}) {
    const GroupModel g = make_builtin(sel);
    const std::size_t n = g.num_classes() - 1;
    CHECK(inverse_char_table(g) * euclidean_char_table(g) == CycloMatrix::identity(n));
  }
}

TEST_CASE("inverse Cartan matrix by every method") {
  GroupAnalysis z2(make_cyclic_su2(2));
  CHECK(cartan_inverse(z2, InverseMethod::Direct) == CycloMatrix(1, 1, Cyclo(Rational(1, 2))));
  GroupAnalysis z3(make_cyclic_su2(3));
  CycloMatrix a2(2, 2);
  a2(0, 0) = a2(1, 1) = Cyclo(Rational(2, 3));
  a2(0, 1) = a2(1, 0) = Cyclo(Rational(1, 3));
  CHECK(cartan_inverse(z3, InverseMethod::Direct) == a2);
  for (const char* sel : {"cyclic:2", "cyclic:5", "bd:3", "2T", "2O", "2I"}) {
    GroupAnalysis a(make_builtin(sel));
    INFO(sel);
    const auto oracle = rational_inverse(dynkin_for_group(a.group()).finite_cartan);
    for (auto m : all_inverse_methods()) {
      INFO(method_name(m));
      CHECK(equals(cartan_inverse(a, m), oracle));
    }
  }
  GroupAnalysis s3(make_symmetric(3));
  CHECK_THROWS_AS(cartan_inverse(s3, InverseMethod::Characters), NonFreeAction);
  CHECK(parse_method("sylvester-limit") == InverseMethod::SylvesterLimit);
  CHECK_THROWS(parse_method("guess"));
}

TEST_CASE("closed form for cyclic groups") {
  CHECK(an_closed_form(1, 1, 1) == Rational(1, 2));
  CHECK(an_closed_form(3, 1, 3) == Rational(1, 4));
  for (int n = 1; n <= 7; ++n) {
    const auto oracle = rational_inverse(affine_dynkin('A', n).finite_cartan);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) CHECK(an_closed_form(n, i, j) == oracle[i - 1][j - 1]);
  }
  CHECK_THROWS(an_closed_form(3, 0, 1));
}

TEST_CASE("eta invariants") {
  GroupAnalysis z2(make_cyclic_su2(2));
  const EtaData e = eta_invariants(z2);
  CHECK(e.unsigned_sums(0, 0) == Cyclo(Rational(1, 8)));
  CHECK(e.unsigned_sums(1, 0) == Cyclo(Rational(-1, 8)));
  CHECK(e.unsigned_sums(0, 1) == Cyclo(Rational(-1, 8)));
  CHECK(e.unsigned_sums(1, 1) == Cyclo(Rational(1, 8)));
  CHECK(e.sigma == -1);
  CHECK(e.eta(0, 0) == Cyclo(Rational(-1, 8)));
  CHECK(cartan_inverse(z2, InverseMethod::Eta) == CycloMatrix(1, 1, Cyclo(Rational(1, 2))));
  for (const char* sel : {"2T", "bd:3", "cyclic:6"}) {
    GroupAnalysis a(make_builtin(sel));
    const EtaData d = eta_invariants(a);
    CHECK(d.definitional_identity);
    CHECK(d.residue_identity);
    CHECK(d.special_unitary);
  }
}

TEST_CASE("Cohen-Macaulay data") {
  GroupAnalysis z2(make_cyclic_su2(2));
  const CMData& c = z2.cm();
  CHECK(c.hsop_degrees == std::vector<int>{2, 2});
  CHECK(c.dr(0, 0) == P({1, 0, 1}));
  CHECK(c.multiplicities.at(0) == 2);
  for (int m = 2; m <= 8; ++m) {
    GroupAnalysis a(make_cyclic_su2(m));
    CHECK(hsop_search(a) == std::vector<int>{2, m});
    const CMData& cm = a.cm();
    CHECK((cm.nonnegative && cm.mu_relation && cm.reconstruction));
    // D_j^0 = q^j + q^{m-j} for 0 < j < m.
    for (int j = 1; j < m; ++j)
      CHECK(cm.dr(0, j) == QPoly::monomial(Cyclo(1), j) + QPoly::monomial(Cyclo(1), m - j));
  }
  GroupAnalysis bd2(make_binary_dihedral(2));
  const CMData& q = bd2.cm();
  CHECK((q.nonnegative && q.mu_relation && q.reconstruction));
  GroupAnalysis i(make_binary_icosahedral());
  CHECK(hsop_search(i) == std::vector<int>{12, 20});
  CHECK(i.cm().dr(0, 0) == P({1}) + QPoly::monomial(Cyclo(1), 30));
  CHECK_THROWS_AS(cm_data(z2, std::vector<int>{1, 1}), DomainError);
}

TEST_CASE("derivative identities at one") {
  GroupAnalysis z2(make_cyclic_su2(2));
  const CMData& c = z2.cm();
  CycloMatrix d(2, 2, Cyclo(2));
  CHECK(evaluate(c.dr.map([](const QPoly& p) { return RatQ(p); }), Cyclo(1)) == d);
  for (const char* sel : {"cyclic:2", "cyclic:4", "bd:2", "2T", "sym:3"}) {
    GroupAnalysis a(make_builtin(sel));
    INFO(sel);
    const auto checks = prop3_check(a, a.cm());
    CHECK(checks.size() == static_cast<std::size_t>(2 * a.group().dim + 2));
    CHECK(all_pass(checks));
    if (a.group().is_su2_family()) CHECK_FALSE(prop3_power_variant(a, a.cm()).pass);
  }
}

TEST_CASE("Weyl vectors") {
  GroupAnalysis z2(make_cyclic_su2(2));
  CHECK(weyl_vector(z2) == std::vector<Rational>{1});
  GroupAnalysis z3(make_cyclic_su2(3));
  CHECK(weyl_vector(z3) == std::vector<Rational>{2, 2});
  CHECK(positive_roots(affine_dynkin("E8").finite_cartan).size() == 120);
  CHECK(positive_roots(affine_dynkin("E7").finite_cartan).size() == 63);
  CHECK(positive_roots(affine_dynkin("E6").finite_cartan).size() == 36);
  CHECK(positive_roots(affine_dynkin("D5").finite_cartan).size() == 20);
  for (const char* sel : {"cyclic:6", "bd:4", "2T", "2O", "2I"}) {
    GroupAnalysis a(make_builtin(sel));
    const auto oracle = weyl_oracle(dynkin_for_group(a.group()).finite_cartan);
    const auto r = weyl_vector(a);
    for (std::size_t i = 0; i < r.size(); ++i) CHECK(r[i] == Rational(oracle[i]));
  }
  // A_n: r_i = i (n + 1 - i).
  const auto a5 = weyl_oracle(affine_dynkin('A', 5).finite_cartan);
  for (int i = 1; i <= 5; ++i) CHECK(a5[i - 1] == i * (6 - i));
  CHECK_THROWS_AS(positive_roots(affine_dynkin("E8").affine_cartan, 60), DomainError);
}

TEST_CASE("second derivative of the cyclic numerators") {
  for (int m = 2; m <= 8; ++m) CHECK(all_pass(an_dprime_check(m)));
}

TEST_CASE("calibration constants are stable") {
  std::vector<std::unique_ptr<GroupAnalysis>> fit;
  std::vector<GroupAnalysis*> ptrs;
  for (int m = 2; m <= 6; ++m) {
    fit.push_back(std::make_unique<GroupAnalysis>(make_cyclic_su2(m)));
    ptrs.push_back(fit.back().get());
  }
  for (const auto& frozen : frozen_calibration()) {
    INFO(frozen.formula);
    const auto fitted = fit_calibration(frozen.formula, ptrs);
    REQUIRE(fitted.has_value());
    CHECK(fitted->coefficient == frozen.coefficient);
    CHECK(fitted->exponent == frozen.exponent);
  }
  for (const char* sel : {"bd:3", "2T", "2I"}) {
    GroupAnalysis a(make_builtin(sel));
    for (const auto& c : frozen_calibration()) CHECK(check_calibration(a, c));
  }
}

}
