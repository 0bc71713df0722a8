#pragma once

#include <climits>
#include <initializer_list>
#include <string>
#include <vector>

#include "cgseries/cyclo.hpp"

namespace cgs {

// Dense univariate polynomial in q with Cyclo coefficients; no trailing zeros.
class QPoly {
 public:
  static constexpr int kZeroDegree = INT_MIN;  // degree of the zero polynomial

  QPoly() = default;
  QPoly(const Cyclo& c);  // NOLINT(implicit)
  QPoly(long c) : QPoly(Cyclo(c)) {}  // NOLINT(implicit)
  explicit QPoly(std::vector<Cyclo> coeffs);
  static QPoly from_ints(std::initializer_list<long> coeffs);
  static QPoly monomial(const Cyclo& c, int degree);
  static QPoly q() { return monomial(Cyclo(1), 1); }
  // 1 - q^n
  static QPoly one_minus_q_pow(int n);

  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Cyclo coefficient(int k) const;
  const Cyclo& lead() const;
  const std::vector<Cyclo>& coefficients() const { return c_; }

  bool all_rational() const;
  bool nonnegative_integer_coefficients() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  QPoly operator-() const;
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  QPoly scaled(const Cyclo& s) const;
  QPoly pow(int e) const;
  QPoly derivative() const;
  Cyclo evaluate(const Cyclo& x) const;
  // p(-q)
  QPoly negate_variable() const;
  QPoly shifted(int k) const;  // q^k * p
  QPoly monic() const;

  // Euclidean division; divisor nonzero.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& quotient, QPoly& remainder);
  // a / b, throws DomainError when b does not divide a.
  static QPoly exact_div(const QPoly& a, const QPoly& b);
  // Monic gcd (monic Euclidean algorithm); gcd(0, 0) = 0.
  static QPoly gcd(const QPoly& a, const QPoly& b);

  // Largest k with (q - 1)^k dividing p; p nonzero.
  int multiplicity_at_one() const;

  // "1 + 2*q - q^3"; Cyclo coefficients are parenthesised when not rational.
  std::string to_string(const std::string& var = "q") const;
  std::string to_latex() const;

 private:
  void trim();
  std::vector<Cyclo> c_;
};

}  // namespace cgs
