#include "cgseries/cyclo.hpp"

#include <mpfr.h>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "cgseries/errors.hpp"

namespace cgs {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: '" + text + "'");
  r.canonicalize();
  if (r.get_den() == 0) throw DivisionByZero();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

long euler_phi(long m) {
  long result = m;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

long lcm_conductor(long a, long b) { return std::lcm(a, b); }

long normalized_conductor(long m) { return m % 4 == 2 ? m / 2 : m; }

namespace {

std::vector<long> compute_cyclotomic(long m) {
  // x^m - 1
  std::vector<long> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    const long dd = static_cast<long>(div.size()) - 1;
    std::vector<long> q(p.size() - dd, 0);
    for (long t = static_cast<long>(p.size()) - 1; t >= dd; --t) {
      const long c = p[t];
      q[t - dd] = c;
      if (c == 0) continue;
      for (long s = 0; s <= dd; ++s) p[t - dd + s] -= c * div[s];
    }
    p = std::move(q);
  }
  return p;
}

struct CyclotomicCache {
  std::shared_mutex mutex;
  std::map<long, std::unique_ptr<const std::vector<long>>> table;
};

CyclotomicCache& cache() {
  static CyclotomicCache c;
  return c;
}

// Reduce a polynomial in zeta_m (arbitrary length) to the canonical
// power-basis vector of length phi(m).
std::vector<Rational> reduce(std::vector<Rational> p, long m) {
  if (static_cast<long>(p.size()) > m) {
    for (std::size_t k = m; k < p.size(); ++k) {
      if (p[k] != 0) p[k % m] += p[k];
    }
    p.resize(m);
  }
  const auto& phi = cyclotomic_polynomial(m);
  const long deg = static_cast<long>(phi.size()) - 1;
  for (long t = static_cast<long>(p.size()) - 1; t >= deg; --t) {
    if (p[t] == 0) continue;
    const Rational c = p[t];
    for (long s = 0; s <= deg; ++s) {
      if (phi[s] != 0) p[t - deg + s] -= c * phi[s];
    }
  }
  p.resize(deg);
  return p;
}

using RPoly = std::vector<Rational>;

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder over Q; divisor must be nonzero and trimmed.
std::pair<RPoly, RPoly> divmod(RPoly a, const RPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {RPoly{}, a};
  RPoly q(a.size() - db, Rational(0));
  const Rational lead_inv = 1 / b.back();
  for (std::size_t t = a.size(); t-- > db;) {
    if (a[t] == 0) continue;
    const Rational c = a[t] * lead_inv;
    q[t - db] = c;
    for (std::size_t s = 0; s <= db; ++s) a[t - db + s] -= c * b[s];
  }
  a.resize(db);
  trim(a);
  trim(q);
  return {q, a};
}

RPoly sub_mul(const RPoly& s0, const RPoly& q, const RPoly& s1) {
  RPoly out(std::max(s0.size(), q.size() + s1.size()), Rational(0));
  for (std::size_t i = 0; i < s0.size(); ++i) out[i] = s0[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < s1.size(); ++j) out[i + j] -= q[i] * s1[j];
  trim(out);
  return out;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(long m) {
  if (m < 1) throw DomainError("cyclotomic polynomial of non-positive index");
  auto& c = cache();
  {
    std::shared_lock lock(c.mutex);
    auto it = c.table.find(m);
    if (it != c.table.end()) return *it->second;
  }
  std::vector<long> poly;
  if (m == 1) {
    poly = {-1, 1};
  } else {
    poly = compute_cyclotomic(m);
  }
  std::unique_lock lock(c.mutex);
  auto [it, inserted] = c.table.emplace(m, std::make_unique<const std::vector<long>>(std::move(poly)));
  return *it->second;
}

Cyclo Cyclo::zeta(long m, long k) { return from_terms(m, {{k, Rational(1)}}); }

Cyclo Cyclo::from_terms(long m, const std::vector<std::pair<long, Rational>>& terms) {
  if (m < 1) throw DomainError("conductor must be positive");
  long target = m;
  long half_factor = 0;
  if (m % 4 == 2) {
    target = m / 2;
    half_factor = (target + 1) / 2;
  }
  std::vector<Rational> p(target, Rational(0));
  for (const auto& [k, r] : terms) {
    long e = k;
    Rational coeff = r;
    coeff.canonicalize();
    if (half_factor != 0) {
      // zeta_m = -zeta_{m/2}^{(m/2+1)/2} for m = 2 (mod 4)
      if (((e % 2) + 2) % 2 == 1) coeff = -coeff;
      e = e * half_factor;
    }
    e %= target;
    if (e < 0) e += target;
    p[e] += coeff;
  }
  return Cyclo(target, reduce(std::move(p), target));
}

void Cyclo::normalize() {
  if (m_ == 1) return;
  for (std::size_t k = 1; k < c_.size(); ++k) {
    if (c_[k] != 0) return;
  }
  Rational r = c_[0];
  m_ = 1;
  c_.assign(1, r);
}

bool Cyclo::is_zero() const { return m_ == 1 && c_[0] == 0; }

const Rational& Cyclo::rational_value() const {
  if (m_ != 1) throw DomainError("cyclotomic value is not rational: " + to_string());
  return c_[0];
}

bool Cyclo::is_integer() const { return m_ == 1 && c_[0].get_den() == 1; }

Cyclo Cyclo::lifted(long L) const {
  if (L % 4 == 2) L /= 2;
  if (L % m_ != 0) throw DomainError("cannot lift conductor " + std::to_string(m_) + " to " + std::to_string(L));
  if (L == m_) return *this;
  Cyclo out;
  out.m_ = L;
  const long step = L / m_;
  std::vector<Rational> p(L, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) p[k * step] = c_[k];
  out.c_ = reduce(std::move(p), L);
  return out;  // deliberately not normalized: caller asked for conductor L
}

std::vector<std::pair<long, Rational>> Cyclo::terms(long L) const {
  const Cyclo l = lifted(L);
  std::vector<std::pair<long, Rational>> out;
  for (std::size_t k = 0; k < l.c_.size(); ++k) {
    if (l.c_[k] != 0) out.emplace_back(static_cast<long>(k), l.c_[k]);
  }
  return out;
}

Cyclo Cyclo::conj() const { return galois(-1); }

Cyclo Cyclo::galois(long a) const {
  if (m_ == 1) return *this;
  if (std::gcd(a, m_) != 1) throw DomainError("Galois exponent must be coprime to the conductor");
  std::vector<Rational> p(m_, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    long e = (static_cast<long>(k) * a) % m_;
    if (e < 0) e += m_;
    p[e] += c_[k];
  }
  return Cyclo(m_, reduce(std::move(p), m_));
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (m_ == 1) return Cyclo(Rational(1 / c_[0]));
  const auto& phi_int = cyclotomic_polynomial(m_);
  RPoly r0(phi_int.begin(), phi_int.end());
  RPoly r1 = c_;
  trim(r1);
  RPoly s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    RPoly s2 = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_m is irreducible.
  const Rational g = 1 / r0[0];
  for (auto& v : s0) v *= g;
  s0.resize(std::max<std::size_t>(s0.size(), 1), Rational(0));
  return Cyclo(m_, reduce(std::move(s0), m_));
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (o.m_ == 1) {
    c_[0] += o.c_[0];
    normalize();
    return *this;
  }
  if (m_ == o.m_) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
  }
  const long L = std::lcm(m_, o.m_);
  Cyclo a = lifted(L);
  const Cyclo b = o.lifted(L);
  for (std::size_t k = 0; k < a.c_.size(); ++k) a.c_[k] += b.c_[k];
  a.normalize();
  *this = std::move(a);
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo Cyclo::operator-() const {
  Cyclo out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  *this = *this * o;
  return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& o) {
  *this = *this * o.inverse();
  return *this;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  if (a.m_ == 1) {
    if (a.c_[0] == 0) return Cyclo();
    Cyclo out = b;
    for (auto& v : out.c_) v *= a.c_[0];
    return out;
  }
  if (b.m_ == 1) {
    if (b.c_[0] == 0) return Cyclo();
    Cyclo out = a;
    for (auto& v : out.c_) v *= b.c_[0];
    return out;
  }
  const long L = std::lcm(a.m_, b.m_);
  const Cyclo x = a.lifted(L);
  const Cyclo y = b.lifted(L);
  std::vector<Rational> p(x.c_.size() + y.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) {
      if (y.c_[j] == 0) continue;
      p[i + j] += x.c_[i] * y.c_[j];
    }
  }
  return Cyclo(L, reduce(std::move(p), L));
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  if (a.m_ == 1 || b.m_ == 1) return false;  // rational values always collapse
  const long L = std::lcm(a.m_, b.m_);
  return a.lifted(L).c_ == b.lifted(L).c_;
}

std::string Cyclo::to_string() const {
  if (m_ == 1) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& r = c_[k];
    if (r == 0) continue;
    Rational mag = abs(r);
    if (first) {
      if (r < 0) os << "-";
    } else {
      os << (r < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z" << m_;
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

std::string Cyclo::approx(int digits) const {
  if (digits < 0) digits = 0;
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 4 + 96);
  mpfr_t re, im, angle, s, c, coeff, tmp, pi;
  mpfr_inits2(prec, re, im, angle, s, c, coeff, tmp, pi, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(re, 1);
  mpfr_set_zero(im, 1);
  mpfr_const_pi(pi, MPFR_RNDN);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    mpfr_set_q(coeff, c_[k].get_mpq_t(), MPFR_RNDN);
    mpfr_mul_ui(angle, pi, 2 * k, MPFR_RNDN);
    mpfr_div_ui(angle, angle, static_cast<unsigned long>(m_), MPFR_RNDN);
    mpfr_sin_cos(s, c, angle, MPFR_RNDN);
    mpfr_mul(tmp, coeff, c, MPFR_RNDN);
    mpfr_add(re, re, tmp, MPFR_RNDN);
    mpfr_mul(tmp, coeff, s, MPFR_RNDN);
    mpfr_add(im, im, tmp, MPFR_RNDN);
  }
  // Values below half an ulp of the output are printed as zero (no "-0.000").
  mpfr_set_ui(tmp, 10, MPFR_RNDN);
  mpfr_pow_si(tmp, tmp, -digits, MPFR_RNDN);
  mpfr_div_ui(tmp, tmp, 2, MPFR_RNDN);
  auto clean = [&](mpfr_t v) {
    mpfr_abs(coeff, v, MPFR_RNDN);
    if (mpfr_cmp(coeff, tmp) < 0) mpfr_set_zero(v, 1);
  };
  clean(re);
  clean(im);
  auto fmt = [&](mpfr_t v) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", digits, v);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  };
  const bool real = (*this == conj());
  std::string out = fmt(re);
  if (!real) {
    std::string imag = fmt(im);
    if (imag[0] != '-') imag = "+" + imag;
    out += imag + "i";
  }
  mpfr_clears(re, im, angle, s, c, coeff, tmp, pi, static_cast<mpfr_ptr>(nullptr));
  return out;
}

std::string Cyclo::key(long L) const {
  const Cyclo l = lifted(L);
  std::string out;
  for (const auto& v : l.c_) {
    out += v.get_str();
    out += ',';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Cyclo& c) { return os << c.to_string(); }

}  // namespace cgs
