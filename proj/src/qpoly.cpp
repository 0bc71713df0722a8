#include "cgseries/qpoly.hpp"

#include <sstream>

#include "cgseries/errors.hpp"

namespace cgs {

QPoly::QPoly(const Cyclo& c) {
  if (!c.is_zero()) c_.push_back(c);
}

QPoly::QPoly(std::vector<Cyclo> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Cyclo> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return QPoly(std::move(c));
}

QPoly QPoly::monomial(const Cyclo& c, int degree) {
  if (c.is_zero()) return QPoly();
  std::vector<Cyclo> v(static_cast<std::size_t>(degree) + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

QPoly QPoly::one_minus_q_pow(int n) {
  std::vector<Cyclo> v(static_cast<std::size_t>(n) + 1);
  v[0] = Cyclo(1);
  v[n] += Cyclo(-1);
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Cyclo QPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Cyclo();
  return c_[k];
}

const Cyclo& QPoly::lead() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

bool QPoly::all_rational() const {
  for (const auto& c : c_) {
    if (!c.is_rational()) return false;
  }
  return true;
}

bool QPoly::nonnegative_integer_coefficients() const {
  for (const auto& c : c_) {
    if (!c.is_integer() || c.rational_value() < 0) return false;
  }
  return true;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Cyclo> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return QPoly(std::move(out));
}

QPoly QPoly::scaled(const Cyclo& s) const {
  if (s.is_zero()) return QPoly();
  QPoly out = *this;
  for (auto& c : out.c_) c *= s;
  return out;
}

QPoly QPoly::pow(int e) const {
  if (e < 0) throw DomainError("negative polynomial power");
  QPoly result(Cyclo(1));
  QPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return QPoly();
  std::vector<Cyclo> out(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * Cyclo(static_cast<long>(k));
  return QPoly(std::move(out));
}

Cyclo QPoly::evaluate(const Cyclo& x) const {
  Cyclo acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

QPoly QPoly::negate_variable() const {
  QPoly out = *this;
  for (std::size_t k = 1; k < out.c_.size(); k += 2) out.c_[k] = -out.c_[k];
  return out;
}

QPoly QPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k < 0) throw DomainError("negative shift");
  std::vector<Cyclo> out(c_.size() + k);
  for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
  return QPoly(std::move(out));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  if (lead() == Cyclo(1)) return *this;
  return scaled(lead().inverse());
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quotient, QPoly& remainder) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<Cyclo> r = a.c_;
  const std::size_t db = b.c_.size() - 1;
  if (r.size() < b.c_.size()) {
    quotient = QPoly();
    remainder = a;
    return;
  }
  std::vector<Cyclo> q(r.size() - db);
  const bool monic_divisor = b.lead() == Cyclo(1);
  const Cyclo lead_inv = monic_divisor ? Cyclo(1) : b.lead().inverse();
  for (std::size_t t = r.size(); t-- > db;) {
    if (r[t].is_zero()) continue;
    const Cyclo c = monic_divisor ? r[t] : r[t] * lead_inv;
    q[t - db] = c;
    for (std::size_t s = 0; s < db; ++s) {
      if (!b.c_[s].is_zero()) r[t - db + s] -= c * b.c_[s];
    }
    r[t] = Cyclo();
  }
  r.resize(db);
  quotient = QPoly(std::move(q));
  remainder = QPoly(std::move(r));
}

QPoly QPoly::exact_div(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

QPoly QPoly::gcd(const QPoly& x, const QPoly& y) {
  if (x.is_zero()) return y.monic();
  if (y.is_zero()) return x.monic();
  if (x.is_constant() || y.is_constant()) return QPoly(Cyclo(1));
  QPoly a = x.degree() >= y.degree() ? x.monic() : y.monic();
  QPoly b = x.degree() >= y.degree() ? y.monic() : x.monic();
  while (!b.is_zero()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a;
}

int QPoly::multiplicity_at_one() const {
  if (is_zero()) throw DomainError("multiplicity of a root of the zero polynomial");
  int k = 0;
  QPoly p = *this;
  const QPoly q_minus_1 = QPoly::from_ints({-1, 1});
  while (p.evaluate(Cyclo(1)).is_zero()) {
    p = exact_div(p, q_minus_1);
    ++k;
  }
  return k;
}

namespace {

std::string coeff_text(const Cyclo& c, bool& negative) {
  if (c.is_rational()) {
    const Rational& r = c.rational_value();
    negative = r < 0;
    return Rational(abs(r)).get_str();
  }
  negative = false;
  return "(" + c.to_string() + ")";
}

}  // namespace

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    bool neg = false;
    std::string mag = coeff_text(c_[k], neg);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != "1") os << mag << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::string QPoly::to_latex() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    bool neg = false;
    std::string mag = coeff_text(c_[k], neg);
    if (c_[k].is_rational() && c_[k].rational_value().get_den() != 1) {
      const Rational a = abs(c_[k].rational_value());
      mag = "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    }
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != "1") os << mag << " ";
    os << "q";
    if (k > 1) os << "^{" << k << "}";
  }
  return os.str();
}

}  // namespace cgs
