#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m).
//
// A Cyclo stores its conductor m and the coefficient vector of the power
// basis {zeta_m^k : 0 <= k < phi(m)}, reduced modulo the m-th cyclotomic
// polynomial. The representation is canonical for a fixed conductor.
// Values that happen to be rational always collapse to conductor 1, and
// conductors congruent to 2 mod 4 are replaced by m/2 (same field).
// Equality across conductors lifts both sides to the lcm.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cgs {

using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

long euler_phi(long m);
long lcm_conductor(long a, long b);
// Q(zeta_m) = Q(zeta_{m/2}) when m = 2 (mod 4); returns the smaller index.
long normalized_conductor(long m);

// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
// Computed once per m by dividing x^m - 1 by Phi_d for the proper divisors d.
const std::vector<long>& cyclotomic_polynomial(long m);

class Cyclo {
 public:
  Cyclo() : m_(1), c_(1) {}
  Cyclo(long v) : m_(1), c_{Rational(v)} {}  // NOLINT(implicit)
  Cyclo(const Rational& v) : m_(1), c_{v} { c_[0].canonicalize(); }  // NOLINT(implicit)

  // zeta_m^k for any integer k.
  static Cyclo zeta(long m, long k = 1);
  // Sum of r * zeta_m^k over the given (k, r) terms; k may be any integer.
  static Cyclo from_terms(long m, const std::vector<std::pair<long, Rational>>& terms);

  long conductor() const { return m_; }
  // Dense power-basis coefficients, length phi(conductor()).
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return m_ == 1; }
  const Rational& rational_value() const;  // requires is_rational()
  bool is_integer() const;

  // The same value expressed over Q(zeta_L); L must be a multiple of conductor().
  Cyclo lifted(long L) const;
  // Nonzero (k, coefficient) pairs of the power-basis expansion over Q(zeta_L).
  std::vector<std::pair<long, Rational>> terms(long L) const;
  std::vector<std::pair<long, Rational>> terms() const { return terms(m_); }

  // Complex conjugation zeta -> zeta^{-1}.
  Cyclo conj() const;
  // Galois automorphism zeta_m -> zeta_m^a, gcd(a, m) = 1.
  Cyclo galois(long a) const;
  Cyclo inverse() const;

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o);
  Cyclo operator-() const;

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  // Human readable, e.g. "1/2 - z5^2 + 3*z5^3".
  std::string to_string() const;
  // Decimal approximation of the complex value with `digits` fractional
  // digits; purely a formatter, never used in computation.
  std::string approx(int digits) const;
  // Deterministic key of the value over Q(zeta_L), used for hashing.
  std::string key(long L) const;

 private:
  Cyclo(long m, std::vector<Rational> c) : m_(m), c_(std::move(c)) { normalize(); }
  void normalize();

  long m_;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyclo& c);

}  // namespace cgs
