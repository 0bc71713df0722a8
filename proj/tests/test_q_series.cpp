#include <doctest.h>

#include <random>

#include "cgseries/errors.hpp"
#include "cgseries/ratq.hpp"
#include "cgseries/tree_fraction.hpp"

using namespace cgs;

namespace {

QPoly P(std::initializer_list<long> c) { return QPoly::from_ints(c); }
RatQ R(std::initializer_list<long> n, std::initializer_list<long> d) { return RatQ(P(n), P(d)); }

std::vector<Cyclo> ints(std::initializer_list<long> v) {
  std::vector<Cyclo> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

QPoly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<long> coef(-4, 4);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Cyclo> c;
  const int d = deg(rng);
  for (int k = 0; k <= d; ++k) c.emplace_back(coef(rng));
  return QPoly(c);
}

}  // namespace

TEST_SUITE("q-series") {

TEST_CASE("arithmetic examples") {
  const RatQ inv = R({1}, {1, -1});
  CHECK(inv * RatQ(P({1, -1})) == RatQ(1));
  CHECK(inv + R({1}, {1, 1}) == R({2}, {1, 0, -1}));
  const RatQ a = R({1, 0, 1}, {1, 0, -2, 0, 1});
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(a / RatQ(0), DivisionByZero);
}

TEST_CASE("canonical form") {
  const RatQ a = R({2, -2}, {4, -4});
  CHECK(a == RatQ(Cyclo(Rational(1, 2))));
  const RatQ b = R({1, 0, -1}, {2, -2});
  CHECK(b.den().lead() == Cyclo(1));
  CHECK(b == RatQ(P({1, 1}).scaled(Cyclo(Rational(1, 2)))));
}

TEST_CASE("derivatives") {
  CHECK(RatQ(P({0, 0, 1})).derivative() == RatQ(P({0, 2})));
  CHECK(RatQ(P({1, 0, 1})).derivative(2).evaluate(Cyclo(1)) == Cyclo(2));
  CHECK(R({1}, {1, -1}).derivative() == R({1}, {1, -2, 1}));
}

TEST_CASE("order at one and strip") {
  CHECK(R({1, 0, -2, 0, 1}, {1, 0, 1}).order_at_one() == 2);
  const RatQ b = R({2, -4, 2}, {1, 2, 1});
  CHECK(b.strip_factor(2).evaluate(Cyclo(1)) == Cyclo(Rational(1, 2)));
  CHECK(b.limit_at_one() == Cyclo(0));
  CHECK(R({1}, {1, -1}).order_at_one() == -1);
  CHECK_THROWS_AS(b.strip_factor(3), DomainError);
}

TEST_CASE("residue examples") {
  CHECK(R({1}, {1, -1}).residue_at_one() == Cyclo(-1));
  CHECK(R({1, 1}, {1, -1}).residue_at_one() == Cyclo(-2));
  CHECK(R({1}, {1, 0, -1}).residue_at_one() == Cyclo(Rational(-1, 2)));
}

TEST_CASE("residue of a constructed simple pole") {
  // a = p / ((1 - q) r) with p(1), r(1) nonzero has residue -p(1)/r(1).
  std::mt19937 rng(11);
  int tested = 0;
  while (tested < 25) {
    const QPoly p = random_poly(rng, 4), r = random_poly(rng, 4);
    const Cyclo p1 = p.evaluate(Cyclo(1)), r1 = r.evaluate(Cyclo(1));
    if (p1.is_zero() || r1.is_zero()) continue;
    const RatQ a(p, P({1, -1}) * r);
    CHECK(a.order_at_one() == -1);
    CHECK(a.residue_at_one() == -p1 / r1);
    ++tested;
  }
}

TEST_CASE("series prefix examples") {
  CHECK(R({1}, {1, -1}).series_prefix(3) == ints({1, 1, 1, 1}));
  CHECK(R({1, 0, 1}, {1, 0, -2, 0, 1}).series_prefix(4) == ints({1, 0, 3, 0, 5}));
  CHECK(RatQ(P({0, 0, 1})).series_prefix(1) == ints({0, 0}));
}

TEST_CASE("series prefix is multiplicative") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    QPoly d1 = random_poly(rng, 3), d2 = random_poly(rng, 3);
    if (d1.coefficient(0).is_zero() || d2.coefficient(0).is_zero()) continue;
    const RatQ a(random_poly(rng, 3), d1), b(random_poly(rng, 3), d2);
    const auto sa = a.series_prefix(8), sb = b.series_prefix(8), sab = (a * b).series_prefix(8);
    for (int n = 0; n <= 8; ++n) {
      Cyclo c;
      for (int k = 0; k <= n; ++k) c += sa[k] * sb[n - k];
      CHECK(c == sab[n]);
    }
  }
}

TEST_CASE("tree continued fraction examples") {
  CHECK(tree_continued_fraction(RootedTree::from_edges(1, {}, 0)) == R({0, 1}, {1, 0, 1}));
  CHECK(tree_continued_fraction(RootedTree::from_edges(2, {{0, 1}}, 0)) == R({0, 1, 0, 1}, {1, 0, 1, 0, 1}));
  CHECK_THROWS_AS(RootedTree::from_edges(3, {{0, 1}}, 0), DomainError);
  CHECK_THROWS_AS(RootedTree::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}, 0), DomainError);
}

TEST_CASE("polynomial helpers") {
  CHECK(QPoly::gcd(P({1, 0, -1}), P({-1, 1})) == P({-1, 1}));
  CHECK(P({1, -2, 1}).multiplicity_at_one() == 2);
  CHECK(P({1, 2}).negate_variable() == P({1, -2}));
  CHECK_THROWS_AS(QPoly::exact_div(P({1, 1}), P({1, 0, 1})), DomainError);
  CHECK(P({1, -1, 0, 2}).to_string() == "1 - q + 2*q^3");
}

}
