#pragma once

#include <string>
#include <vector>

#include "cgseries/qpoly.hpp"

namespace cgs {

// Exact rational function num(q)/den(q) over a cyclotomic coefficient field.
// Canonical form: gcd(num, den) = 1, den monic, zero is 0/1.
class RatQ {
 public:
  RatQ() : num_(), den_(Cyclo(1)) {}
  RatQ(const Cyclo& c) : num_(c), den_(Cyclo(1)) {}  // NOLINT(implicit)
  RatQ(long c) : RatQ(Cyclo(c)) {}  // NOLINT(implicit)
  RatQ(const QPoly& p) : num_(p), den_(Cyclo(1)) {}  // NOLINT(implicit)
  RatQ(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  Cyclo constant_value() const;  // requires is_constant()

  RatQ& operator+=(const RatQ& o);
  RatQ& operator-=(const RatQ& o);
  RatQ& operator*=(const RatQ& o);
  RatQ& operator/=(const RatQ& o);
  RatQ operator-() const;
  friend RatQ operator+(RatQ a, const RatQ& b) { return a += b; }
  friend RatQ operator-(RatQ a, const RatQ& b) { return a -= b; }
  friend RatQ operator*(RatQ a, const RatQ& b) { return a *= b; }
  friend RatQ operator/(RatQ a, const RatQ& b) { return a /= b; }
  friend bool operator==(const RatQ& a, const RatQ& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatQ& a, const RatQ& b) { return !(a == b); }

  RatQ inverse() const;
  RatQ pow(int e) const;
  RatQ derivative(int order = 1) const;
  RatQ negate_variable() const;  // a(-q)
  // Value at x; DomainError when the denominator vanishes there.
  Cyclo evaluate(const Cyclo& x) const;

  // Exponent of (1 - q) in the factorisation (negative for poles); a != 0.
  int order_at_one() const;
  // a * (1 - q)^{-k}; DomainError when k exceeds order_at_one().
  RatQ strip_factor(int k) const;
  // lim_{q->1} (q - 1) a(q); requires a simple pole at 1.
  Cyclo residue_at_one() const;
  // lim_{q->1} a(q) via (1 - q)-cancellation; requires order_at_one() >= 0.
  Cyclo limit_at_one() const;
  // First n+1 Taylor coefficients at q = 0.
  std::vector<Cyclo> series_prefix(int n) const;

  // "num(q) / den(q)" with integer-normalised coefficients when rational.
  std::string to_string() const;
  std::string to_latex() const;
  // num and den rescaled by a common rational factor so that, when all
  // coefficients are rational, they are coprime integers with the lowest
  // nonzero coefficient of den positive. Value is unchanged.
  void display_form(QPoly& num, QPoly& den) const;

 private:
  void normalize();
  QPoly num_;
  QPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatQ& r);

}  // namespace cgs
