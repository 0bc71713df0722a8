#include "cgseries/cartan_eta.hpp"

#include "cgseries/dynkin.hpp"
#include "cgseries/errors.hpp"

namespace cgs {

namespace {

void require_free(GroupAnalysis& a) {
  if (!a.free_action()) throw NonFreeAction(a.group().name + ": the action is not free");
}

Cyclo rat(long v) { return Cyclo(Rational(v)); }
Cyclo frac(long num, long den) { return Cyclo(Rational(num, den)); }

CycloMatrix to_cyclo(const IntMatrix& m) { return m.map([](long v) { return rat(v); }); }

CycloMatrix power(const CycloMatrix& m, int e) {
  CycloMatrix out = CycloMatrix::identity(m.rows());
  for (int k = 0; k < e; ++k) out = out * m;
  return out;
}

IdentityCheck zero_check(const std::string& name, const CycloMatrix& m) {
  return {name, first_difference(m, CycloMatrix(m.rows(), m.cols())) == std::make_pair(-1, -1),
          first_difference(m, CycloMatrix(m.rows(), m.cols()))};
}

IdentityCheck equal_check(const std::string& name, const CycloMatrix& a, const CycloMatrix& b) {
  const auto w = first_difference(a, b);
  return {name, w.first < 0, w};
}

// d_i d_j (B(0,0) - B(i,0)/d_i - B(0,j)/d_j + B(i,j)/(d_i d_j)) over nodes 1..n.
template <class T, class F>
Matrix<T> bracket(const std::vector<long>& dims, F&& entry) {
  const std::size_t n = dims.size() - 1;
  Matrix<T> out(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const T di = T(dims[i]), dj = T(dims[j]);
      out(i - 1, j - 1) = di * dj * entry(0, 0) - dj * entry(i, 0) - di * entry(0, j) + entry(i, j);
    }
  return out;
}

long factorial_long(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

SeriesMatrix euclidean_cg(GroupAnalysis& a) { return a.series(SeriesKind::A, Sign::Minus).minor_matrix(0, 0); }

CycloMatrix euclidean_cartan(GroupAnalysis& a) { return evaluate(euclidean_cg(a), Cyclo(1)); }

std::vector<IdentityCheck> mckay_check(GroupAnalysis& a) {
  const GroupModel& g = a.group();
  const CycloMatrix at_one = evaluate(a.series(SeriesKind::A, Sign::Minus), Cyclo(1));
  const std::size_t n = at_one.rows();
  std::vector<IdentityCheck> out;
  out.push_back(equal_check("M[R_A(-1)] = 2E - M[R]", at_one,
                            rat(2) * CycloMatrix::identity(n) - a.defining_cg()));
  const DynkinData dyn = dynkin_for_group(g);
  out.push_back(equal_check("M[R_A(-1)] = affine Cartan " + dyn.name(), at_one, to_cyclo(dyn.affine_cartan)));
  CycloMatrix v(n, 1);
  for (std::size_t i = 0; i < n; ++i) v(i, 0) = rat(a.dims()[i]);
  out.push_back(zero_check("M[R_A(-1)] v = 0", at_one * v));
  return out;
}

CycloMatrix inverse_char_table(const GroupModel& g) {
  const auto dims = g.irrep_dims();
  const int n = g.num_classes() - 1;
  CycloMatrix x(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      x(i - 1, j - 1) = frac(g.class_sizes[i], g.order) * (g.char_table(j, i).conj() - rat(dims[j]));
  return x;
}

CycloMatrix euclidean_char_table(const GroupModel& g) {
  const int n = g.num_classes() - 1;
  CycloMatrix x(n, n);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) x(i - 1, k - 1) = g.char_table(i, k);
  return x;
}

std::string method_name(InverseMethod m) {
  switch (m) {
    case InverseMethod::Direct: return "direct";
    case InverseMethod::Characters: return "characters";
    case InverseMethod::Eta: return "eta";
    case InverseMethod::Limit: return "limit";
    case InverseMethod::SylvesterLimit: return "sylvester-limit";
  }
  return "";
}

InverseMethod parse_method(const std::string& text) {
  for (auto m : all_inverse_methods())
    if (method_name(m) == text) return m;
  throw std::invalid_argument("unknown method '" + text + "'");
}

std::vector<InverseMethod> all_inverse_methods() {
  return {InverseMethod::Direct, InverseMethod::Characters, InverseMethod::Eta, InverseMethod::Limit,
          InverseMethod::SylvesterLimit};
}

CycloMatrix cartan_inverse(GroupAnalysis& a, InverseMethod method) {
  const GroupModel& g = a.group();
  const auto& dims = a.dims();
  if (method == InverseMethod::Direct) return inverse(euclidean_cartan(a));
  require_free(a);
  switch (method) {
    case InverseMethod::Characters: {
      const auto& ker = a.kernels();
      const int n = g.num_classes() - 1;
      CycloMatrix out(n, n);
      for (int k = 1; k <= n; ++k) {
        const Cyclo w = frac(g.class_sizes[k], g.order) / ker.det_at_one(k);
        for (int i = 1; i <= n; ++i) {
          const Cyclo left = w * (g.char_table(i, k) - rat(dims[i]));
          for (int j = 1; j <= n; ++j) out(i - 1, j - 1) += left * (g.char_table(j, k).conj() - rat(dims[j]));
        }
      }
      return out;
    }
    case InverseMethod::Eta: {
      const CycloMatrix k = eta_invariants(a).unsigned_sums;
      return bracket<Cyclo>(dims, [&](std::size_t i, std::size_t j) { return k(i, j); });
    }
    case InverseMethod::Limit: {
      const SeriesMatrix& s = a.series(SeriesKind::S, Sign::Plus);
      const auto b = bracket<RatQ>(dims, [&](std::size_t i, std::size_t j) { return s(i, j); });
      return limit_at_one(b);
    }
    case InverseMethod::SylvesterLimit: {
      const CMData& cm = a.cm();
      const QPoly base = QPoly::from_ints({1, -1}).pow(g.dim) * cm.d_r * cm.dr(0, 0);
      const std::size_t n = dims.size() - 1;
      SeriesMatrix e(n, n);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
          e(i - 1, j - 1) = RatQ(cm.dr(0, 0) * cm.dr(i, j) - cm.dr(0, j) * cm.dr(i, 0), base);
      return limit_at_one(e);
    }
    default:
      break;
  }
  throw std::logic_error("unhandled method");
}

Rational an_closed_form(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("indices must lie in 1..n");
  Rational r(i * j, n + 1);
  r.canonicalize();
  return Rational(std::min(i, j)) - r;
}

std::vector<Cyclo> det_character(GroupAnalysis& a) {
  const auto& ker = a.kernels();
  std::vector<Cyclo> out;
  const Cyclo sign = rat(ker.dim % 2 == 0 ? 1 : -1);
  for (const auto& c : ker.charpoly) out.push_back(sign * c.lead());
  return out;
}

EtaData eta_invariants(GroupAnalysis& a) {
  require_free(a);
  const GroupModel& g = a.group();
  const auto& ker = a.kernels();
  const auto& dims = a.dims();
  const int n = g.num_classes();
  EtaData e;
  e.sigma = (g.dim % 2 == 0 && (g.dim / 2) % 2 == 1) ? -1 : 1;
  e.unsigned_sums = CycloMatrix(n, n);
  for (int k = 1; k < n; ++k) {
    const Cyclo det = ker.det_at_one(k);
    if (det.is_zero()) continue;
    const Cyclo w = frac(g.class_sizes[k], g.order) / det;
    for (int i = 0; i < n; ++i) {
      const Cyclo left = w * g.char_table(i, k);
      for (int j = 0; j < n; ++j) e.unsigned_sums(i, j) += left * g.char_table(j, k).conj();
    }
  }
  e.eta = rat(e.sigma) * e.unsigned_sums;
  for (int j = 0; j < n; ++j) e.eta0.push_back(e.eta(0, j));

  e.special_unitary = true;
  for (const auto& v : det_character(a))
    if (v != Cyclo(1)) e.special_unitary = false;

  const SeriesMatrix& s = a.series(SeriesKind::S, Sign::Plus);
  const QPoly pole_den = QPoly::from_ints({1, -1}).pow(g.dim);
  const RatQ one_minus_q(QPoly::from_ints({1, -1}));
  e.residue_identity = true;
  for (int i = 0; i < n && e.residue_identity; ++i)
    for (int j = 0; j < n && e.residue_identity; ++j) {
      const RatQ f = (s(i, j) - RatQ(QPoly(frac(dims[i] * dims[j], g.order)), pole_den)) / one_minus_q;
      Cyclo res;
      if (!f.is_zero() && f.order_at_one() < 0) res = f.residue_at_one();
      if (-res != e.unsigned_sums(i, j)) e.residue_identity = false;
    }

  e.definitional_identity = true;
  for (int i = 0; i < n && e.definitional_identity; ++i) {
    const CycloMatrix& cg = a.irrep_cg(i);
    for (int j = 0; j < n; ++j) {
      Cyclo acc;
      for (int k = 0; k < n; ++k) acc += cg(k, j) * e.eta0[k];
      if (acc != e.eta(i, j)) {
        e.definitional_identity = false;
        break;
      }
    }
  }
  return e;
}

namespace {

struct Prop3Data {
  int d = 0;
  std::vector<CycloMatrix> dd;  // derivatives of D at 1, orders 0..d
  std::vector<CycloMatrix> ad;  // derivatives of M_A at 1, orders 0..d
  Cyclo mu0_g;                  // mu_0 |G|
  CycloMatrix det_cg;
};

Prop3Data prop3_data(GroupAnalysis& a, const CMData& cm) {
  Prop3Data p;
  p.d = a.group().dim;
  const SeriesMatrix dser = cm.dr.map([](const QPoly& q) { return RatQ(q); });
  const SeriesMatrix& ma = a.series(SeriesKind::A, Sign::Minus);
  for (int k = 0; k <= p.d; ++k) {
    p.dd.push_back(evaluate(derivative(dser, k), Cyclo(1)));
    p.ad.push_back(evaluate(derivative(ma, k), Cyclo(1)));
  }
  p.mu0_g = rat(cm.multiplicities.at(0) * a.group().order);
  p.det_cg = cg_matrix(a.group(), det_character(a));
  return p;
}

}  // namespace

std::vector<IdentityCheck> prop3_check(GroupAnalysis& a, const CMData& cm) {
  const Prop3Data p = prop3_data(a, cm);
  const int d = p.d;
  std::vector<IdentityCheck> out;
  for (int i = 0; i < d; ++i)
    out.push_back(zero_check("D^(" + std::to_string(i) + ") M_A^" + std::to_string(i + 1) + " = 0",
                             p.dd[i] * power(p.ad[0], i + 1)));
  for (int i = 0; i < d; ++i)
    out.push_back(zero_check("D^" + std::to_string(i + 1) + " M_A^(" + std::to_string(i) + ") = 0",
                             power(p.dd[0], i + 1) * p.ad[i]));
  const Cyclo sign_fact = rat((d % 2 == 0 ? 1 : -1) * factorial_long(d));
  out.push_back(equal_check("D^(" + std::to_string(d) + ") M_A^" + std::to_string(d + 1) +
                                " = (-1)^d d! mu_0 |G| M_A(1)^d",
                            p.dd[d] * power(p.ad[0], d + 1), (sign_fact * p.mu0_g) * power(p.ad[0], d)));
  const std::size_t n = a.dims().size();
  CycloMatrix vvt(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) vvt(i, j) = rat(a.dims()[i] * a.dims()[j]);
  Cyclo scale = sign_fact * rat(cm.multiplicities.at(0));
  for (int k = 0; k < d; ++k) scale *= p.mu0_g;
  out.push_back(equal_check("D^" + std::to_string(d + 1) + " M_A^(" + std::to_string(d) +
                                ") = (-1)^d d! (mu_0 |G|)^d mu_0 v v^T M[det R]",
                            power(p.dd[0], d + 1) * p.ad[d], scale * (vvt * p.det_cg)));
  return out;
}

IdentityCheck prop3_power_variant(GroupAnalysis& a, const CMData& cm) {
  const Prop3Data p = prop3_data(a, cm);
  const int d = p.d;
  return equal_check("D^" + std::to_string(d + 1) + " M_A^" + std::to_string(d + 1) +
                         " = mu_0 |G| M[det R] M_A(1)^d",
                     power(p.dd[0], d + 1) * power(p.ad[0], d + 1), p.mu0_g * (p.det_cg * power(p.ad[0], d)));
}

std::vector<IdentityCheck> an_dprime_check(int m) {
  if (m < 2) throw std::out_of_range("an_dprime_check needs m >= 2");
  GroupAnalysis a(make_cyclic_su2(m));
  const CMData& cm = a.cm();
  const CycloMatrix inv = cartan_inverse(a, InverseMethod::Direct);
  const int n = m - 1;
  const Rational top(n * (n + 1), 2);
  IdentityCheck by_index{"D_j^0''(1)/2 = n(n+1)/2 - j(n-j+1)", true, {-1, -1}};
  IdentityCheck by_inverse{"D_j^0''(1)/2 = n(n+1)/2 - (n+1) inv_jj", true, {-1, -1}};
  for (int j = 0; j <= n; ++j) {
    const Cyclo lhs = cm.dr(0, j).derivative().derivative().evaluate(Cyclo(1)) / rat(2);
    if (by_index.pass && lhs != Cyclo(top - Rational(j * (n - j + 1)))) {
      by_index.pass = false;
      by_index.witness = {0, j};
    }
    const Cyclo inv_jj = j == 0 ? Cyclo() : inv(j - 1, j - 1);
    if (by_inverse.pass && lhs != Cyclo(top) - rat(n + 1) * inv_jj) {
      by_inverse.pass = false;
      by_inverse.witness = {0, j};
    }
  }
  return {by_index, by_inverse};
}

std::vector<Rational> weyl_vector(GroupAnalysis& a) {
  require_free(a);
  const CycloMatrix inv = cartan_inverse(a, InverseMethod::Direct);
  std::vector<Rational> r;
  for (std::size_t i = 0; i < inv.rows(); ++i) {
    Cyclo s;
    for (std::size_t j = 0; j < inv.cols(); ++j) s += inv(i, j);
    if (!s.is_rational()) throw DomainError("inverse Cartan row sum is not rational");
    r.push_back(2 * s.rational_value());
  }
  return r;
}

}  // namespace cgs
