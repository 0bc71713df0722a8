#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "cgseries/cyclo.hpp"
#include "cgseries/errors.hpp"

using namespace cgs;

namespace {

// Independent floating-point value of a Cyclo from its power-basis terms.
std::complex<double> numeric(const Cyclo& c) {
  std::complex<double> z = 0;
  const double m = static_cast<double>(c.conductor());
  for (const auto& [k, r] : c.terms()) z += r.get_d() * std::polar(1.0, 2 * M_PI * k / m);
  return z;
}

Cyclo random_cyclo(std::mt19937& rng) {
  std::uniform_int_distribution<long> cond(1, 24), coef(-5, 5), den(1, 4);
  const long m = cond(rng);
  std::vector<std::pair<long, Rational>> terms;
  for (long k = 0; k < m; ++k) terms.push_back({k, Rational(coef(rng), den(rng))});
  return Cyclo::from_terms(m, terms);
}

}  // namespace

TEST_SUITE("exact-num") {

TEST_CASE("arithmetic examples") {
  const Cyclo z3 = Cyclo::zeta(3), z4 = Cyclo::zeta(4);
  CHECK((z4 + Cyclo::zeta(4, 3)).is_zero());
  CHECK(z3 * z3 == Cyclo(-1) - z3);
  CHECK(Cyclo(1) / (Cyclo(1) + z3) == -z3);
  CHECK_THROWS_AS(Cyclo(1) / Cyclo(0), DivisionByZero);
}

TEST_CASE("conjugation examples") {
  CHECK(Cyclo::zeta(5).conj() == Cyclo::zeta(5, 4));
  CHECK(Cyclo(Rational(3, 7)).conj() == Cyclo(Rational(3, 7)));
  const Cyclo real = Cyclo::zeta(3) + Cyclo::zeta(3, 2);
  CHECK(real.conj() == real);
}

TEST_CASE("approximation examples") {
  CHECK(Cyclo::zeta(4).approx(4) == "0.0000+1.0000i");
  CHECK((Cyclo::zeta(5) + Cyclo::zeta(5, 4)).approx(4).rfind("0.6180", 0) == 0);
  CHECK(Cyclo(Rational(1, 2)).approx(4) == "0.5000");
  CHECK(std::abs(numeric(Cyclo::zeta(5) + Cyclo::zeta(5, 4)) - 2 * std::cos(2 * M_PI / 5)) < 1e-12);
}

TEST_CASE("canonical forms") {
  CHECK(Cyclo::zeta(6).conductor() == 3);
  CHECK(Cyclo::zeta(6) == -Cyclo::zeta(3, 2));
  CHECK(Cyclo::zeta(12, 3) == Cyclo::zeta(4));
  CHECK(Cyclo::zeta(7, 7) == Cyclo(1));
  CHECK((Cyclo::zeta(8) * Cyclo::zeta(8, 7)).is_rational());
  CHECK(normalized_conductor(10) == 5);
  CHECK(euler_phi(24) == 8);
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
}

TEST_CASE("sum of m-th roots of unity vanishes") {
  for (long m = 2; m <= 30; ++m) {
    Cyclo s;
    for (long k = 0; k < m; ++k) s += Cyclo::zeta(m, k);
    CHECK(s.is_zero());
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Cyclo a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyclo(1));
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(a.conj().conj() == a);
    CHECK(std::abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-8);
    CHECK(std::abs(numeric(a.conj()) - std::conj(numeric(a))) < 1e-8);
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("4/2")) == "2");
}

}
