#include "cgseries/ratq.hpp"

#include <ostream>

#include "cgseries/errors.hpp"

namespace cgs {

RatQ::RatQ(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void RatQ::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(Cyclo(1));
    return;
  }
  if (den_.degree() > 0) {
    const QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = QPoly::exact_div(num_, g);
      den_ = QPoly::exact_div(den_, g);
    }
  }
  const Cyclo& lead = den_.lead();
  if (lead != Cyclo(1)) {
    const Cyclo inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Cyclo RatQ::constant_value() const {
  if (!is_constant()) throw DomainError("rational function is not constant: " + to_string());
  return num_.coefficient(0);
}

RatQ& RatQ::operator+=(const RatQ& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  if (den_.degree() == 0 && o.den_.degree() == 0) {
    num_ += o.num_;
    return *this;
  }
  const QPoly g = QPoly::gcd(den_, o.den_);
  if (g.degree() <= 0) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = QPoly(Cyclo(1));
    return *this;
  }
  const QPoly b1 = QPoly::exact_div(den_, g);
  const QPoly d1 = QPoly::exact_div(o.den_, g);
  num_ = num_ * d1 + o.num_ * b1;
  den_ = b1 * o.den_;
  if (num_.is_zero()) {
    den_ = QPoly(Cyclo(1));
    return *this;
  }
  const QPoly g2 = QPoly::gcd(num_, g);
  if (g2.degree() > 0) {
    num_ = QPoly::exact_div(num_, g2);
    den_ = QPoly::exact_div(den_, g2);
  }
  return *this;
}

RatQ& RatQ::operator-=(const RatQ& o) { return *this += -o; }

RatQ RatQ::operator-() const {
  RatQ out = *this;
  out.num_ = -out.num_;
  return out;
}

RatQ& RatQ::operator*=(const RatQ& o) {
  if (is_zero() || o.is_zero()) return *this = RatQ();
  if (den_.degree() == 0 && o.den_.degree() == 0) {
    num_ = num_ * o.num_;
    return *this;
  }
  const QPoly g1 = QPoly::gcd(num_, o.den_);
  const QPoly g2 = QPoly::gcd(o.num_, den_);
  const QPoly a = g1.degree() > 0 ? QPoly::exact_div(num_, g1) : num_;
  const QPoly d = g1.degree() > 0 ? QPoly::exact_div(o.den_, g1) : o.den_;
  const QPoly c = g2.degree() > 0 ? QPoly::exact_div(o.num_, g2) : o.num_;
  const QPoly b = g2.degree() > 0 ? QPoly::exact_div(den_, g2) : den_;
  num_ = a * c;
  den_ = b * d;
  return *this;
}

RatQ& RatQ::operator/=(const RatQ& o) { return *this *= o.inverse(); }

RatQ RatQ::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RatQ(den_, num_);
}

RatQ RatQ::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatQ out;
  out.num_ = num_.pow(e);
  out.den_ = den_.pow(e);
  return out;
}

RatQ RatQ::derivative(int order) const {
  RatQ cur = *this;
  for (int k = 0; k < order; ++k) {
    if (cur.den_.degree() == 0) {
      cur.num_ = cur.num_.derivative();
      if (cur.num_.is_zero()) cur.den_ = QPoly(Cyclo(1));
      continue;
    }
    cur = RatQ(cur.num_.derivative() * cur.den_ - cur.num_ * cur.den_.derivative(), cur.den_ * cur.den_);
  }
  return cur;
}

RatQ RatQ::negate_variable() const { return RatQ(num_.negate_variable(), den_.negate_variable()); }

Cyclo RatQ::evaluate(const Cyclo& x) const {
  const Cyclo d = den_.evaluate(x);
  if (d.is_zero()) throw DomainError("rational function has a pole at " + x.to_string());
  return num_.evaluate(x) / d;
}

int RatQ::order_at_one() const {
  if (is_zero()) throw DomainError("order at q = 1 of the zero function");
  return num_.multiplicity_at_one() - den_.multiplicity_at_one();
}

RatQ RatQ::strip_factor(int k) const {
  if (k == 0 || is_zero()) return *this;
  const QPoly one_minus_q = QPoly::from_ints({1, -1});
  if (k > 0) {
    if (k > order_at_one()) throw DomainError("cannot strip more factors of (1 - q) than present");
    RatQ out = *this;
    out.num_ = QPoly::exact_div(num_, one_minus_q.pow(k));
    return out;
  }
  return RatQ(num_ * one_minus_q.pow(-k), den_);
}

Cyclo RatQ::residue_at_one() const {
  if (order_at_one() != -1) throw DomainError("residue at q = 1 requires a simple pole");
  const QPoly reduced_den = QPoly::exact_div(den_, QPoly::from_ints({-1, 1}));
  return num_.evaluate(Cyclo(1)) / reduced_den.evaluate(Cyclo(1));
}

Cyclo RatQ::limit_at_one() const {
  if (is_zero()) return Cyclo();
  const int order = order_at_one();
  if (order < 0) throw DomainError("limit at q = 1 does not exist (pole)");
  if (order > 0) return Cyclo();
  return strip_factor(order).evaluate(Cyclo(1));
}

std::vector<Cyclo> RatQ::series_prefix(int n) const {
  const Cyclo d0 = den_.coefficient(0);
  if (d0.is_zero()) throw DomainError("rational function has a pole at q = 0");
  const Cyclo d0_inv = d0.inverse();
  std::vector<Cyclo> s(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Cyclo acc = num_.coefficient(k);
    const int top = std::min(k, den_.degree());
    for (int i = 1; i <= top; ++i) acc -= den_.coefficient(i) * s[k - i];
    s[k] = acc * d0_inv;
  }
  return s;
}

void RatQ::display_form(QPoly& num, QPoly& den) const {
  num = num_;
  den = den_;
  if (!num_.all_rational() || !den_.all_rational()) return;
  mpz_class l = 1, g = 0;
  auto scan = [&](const QPoly& p) {
    for (const auto& c : p.coefficients()) {
      if (c.is_zero()) continue;
      const Rational& r = c.rational_value();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den().get_mpz_t());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.get_num().get_mpz_t());
    }
  };
  scan(num_);
  scan(den_);
  Rational factor(l, g);
  factor.canonicalize();
  for (const auto& c : den_.coefficients()) {
    if (c.is_zero()) continue;
    if (c.rational_value() < 0) factor = -factor;
    break;
  }
  num = num_.scaled(Cyclo(factor));
  den = den_.scaled(Cyclo(factor));
}

std::string RatQ::to_string() const {
  QPoly n, d;
  display_form(n, d);
  if (d == QPoly(Cyclo(1))) return n.to_string();
  if (d.degree() == 0) return "(" + n.to_string() + ") / " + d.to_string();
  return "(" + n.to_string() + ") / (" + d.to_string() + ")";
}

std::string RatQ::to_latex() const {
  QPoly n, d;
  display_form(n, d);
  if (d == QPoly(Cyclo(1))) return n.to_latex();
  return "\\frac{" + n.to_latex() + "}{" + d.to_latex() + "}";
}

std::ostream& operator<<(std::ostream& os, const RatQ& r) { return os << r.to_string(); }

}  // namespace cgs
