#include "cgseries/cm_data.hpp"

#include <cstdlib>

#include "cgseries/analysis.hpp"
#include "cgseries/errors.hpp"

namespace cgs {

namespace {

QPoly degrees_product(const std::vector<int>& degrees) {
  QPoly p(1);
  for (int n : degrees) p *= QPoly::one_minus_q_pow(n);
  return p;
}

long integer_value(const Cyclo& c) { return c.rational_value().get_num().get_si(); }

// Row 0 numerators over prod (1 - q^{n_k}), or nullopt when they are not
// nonnegative integer polynomials.
std::optional<std::vector<QPoly>> row0_numerators(const SeriesMatrix& s, const QPoly& prod) {
  std::vector<QPoly> out;
  for (std::size_t j = 0; j < s.cols(); ++j) {
    const RatQ& e = s(0, j);
    QPoly quo, rem;
    QPoly::divmod(prod, e.den(), quo, rem);
    if (!rem.is_zero()) return std::nullopt;
    QPoly num = e.num() * quo;
    if (!num.nonnegative_integer_coefficients()) return std::nullopt;
    out.push_back(std::move(num));
  }
  return out;
}

long coefficient_sum(const QPoly& p) {
  long s = 0;
  for (const auto& c : p.coefficients()) s += integer_value(c);
  return s;
}

}  // namespace

std::vector<int> default_hsop_degrees(GroupAnalysis& a) {
  const GroupModel& g = a.group();
  switch (g.family) {
    case Family::Cyclic:
      return {2, g.param};
    case Family::Symmetric: {
      std::vector<int> out;
      for (int k = 1; k <= g.dim; ++k) out.push_back(k);
      return out;
    }
    default:
      if (g.dim == 2) return hsop_search(a);
      throw DomainError(g.name + ": no default system of parameters; pass the degrees explicitly");
  }
}

std::vector<int> hsop_search(GroupAnalysis& a) {
  const GroupModel& g = a.group();
  if (g.dim != 2) throw DomainError("hsop search needs a two-dimensional representation");
  long bound = 2 * g.order;
  if (const char* env = std::getenv("CGSERIES_HSOP_BOUND")) bound = std::atol(env);
  const SeriesMatrix& s = a.series(SeriesKind::S, Sign::Plus);
  const auto& dims = a.dims();
  QPoly den_lcm(1);
  for (std::size_t j = 0; j < s.cols(); ++j) {
    const QPoly& den = s(0, j).den();
    den_lcm = QPoly::exact_div(den_lcm * den, QPoly::gcd(den_lcm, den));
  }
  for (long x = 1; x <= bound; ++x) {
    for (long y = x; y <= bound; ++y) {
      if ((x * y) % g.order != 0) continue;
      const QPoly prod = QPoly::one_minus_q_pow(static_cast<int>(x)) * QPoly::one_minus_q_pow(static_cast<int>(y));
      QPoly quo, rem;
      QPoly::divmod(prod, den_lcm, quo, rem);
      if (!rem.is_zero()) continue;
      const auto nums = row0_numerators(s, prod);
      if (!nums) continue;
      bool ok = true;
      for (std::size_t j = 0; j < nums->size() && ok; ++j)
        ok = coefficient_sum((*nums)[j]) * g.order == dims[j] * x * y;
      if (ok) return {static_cast<int>(x), static_cast<int>(y)};
    }
  }
  throw DomainError(g.name + ": no system of parameters found within the degree bound");
}

CMData cm_data(GroupAnalysis& a, const std::optional<std::vector<int>>& degrees) {
  const GroupModel& g = a.group();
  CMData cm;
  cm.hsop_degrees = degrees ? *degrees : default_hsop_degrees(a);
  if (static_cast<int>(cm.hsop_degrees.size()) != g.dim)
    throw DomainError("expected " + std::to_string(g.dim) + " degrees");
  for (int n : cm.hsop_degrees)
    if (n < 1) throw DomainError("degrees must be positive");

  const QPoly prod = degrees_product(cm.hsop_degrees);
  QPoly d_r(1);
  for (int n : cm.hsop_degrees) d_r *= QPoly::exact_div(QPoly::one_minus_q_pow(n), QPoly::one_minus_q_pow(1));
  cm.d_r = d_r;

  const SeriesMatrix& s = a.series(SeriesKind::S, Sign::Plus);
  const auto row0 = row0_numerators(s, prod);
  if (!row0) throw DomainError(g.name + ": degrees do not clear the denominators with nonnegative integer numerators");

  const int n = g.num_classes();
  cm.dr = PolyMatrix(n, n);
  for (int j = 0; j < n; ++j) cm.dr(0, j) = (*row0)[j];
  for (int i = 1; i < n; ++i) {
    const CycloMatrix& cg = a.irrep_cg(i);
    for (int j = 0; j < n; ++j) {
      QPoly acc;
      for (int k = 0; k < n; ++k)
        if (!cg(k, j).is_zero()) acc += (*row0)[k].scaled(cg(k, j));
      cm.dr(i, j) = acc;
    }
  }

  long prod_degrees = 1;
  for (int d : cm.hsop_degrees) prod_degrees *= d;
  cm.mu_relation = true;
  for (int j = 0; j < n; ++j) {
    std::vector<int> ex;
    const auto& c = cm.dr(0, j).coefficients();
    for (std::size_t e = 0; e < c.size(); ++e)
      for (long r = integer_value(c[e]); r > 0; --r) ex.push_back(static_cast<int>(e));
    cm.multiplicities.push_back(static_cast<long>(ex.size()));
    cm.exponents.push_back(std::move(ex));
    if (cm.multiplicities.back() * g.order != a.dims()[j] * prod_degrees) cm.mu_relation = false;
  }

  cm.nonnegative = true;
  cm.reconstruction = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!cm.dr(i, j).nonnegative_integer_coefficients()) cm.nonnegative = false;
      if (RatQ(cm.dr(i, j), prod) != s(i, j)) cm.reconstruction = false;
    }
  return cm;
}

}  // namespace cgs
