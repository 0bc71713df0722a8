#include "cgseries/cg_engine.hpp"

#include <omp.h>

#include <exception>
#include <mutex>

#include "cgseries/errors.hpp"

namespace cgs {

namespace {

// w[k] * chi_i(g_k) * conj chi_j(g_k) with w[k] = |C_k| / |G|.
struct ClassWeights {
  std::vector<Cyclo> w;
  CycloMatrix table;
  CycloMatrix conj_table;

  explicit ClassWeights(const GroupModel& g) : table(g.char_table), conj_table(g.char_table.map([](const Cyclo& c) {
                                                                       return c.conj();
                                                                     })) {
    for (long s : g.class_sizes) w.push_back(Cyclo(Rational(s, g.order)));
  }
  Cyclo coefficient(int i, int j, int k) const { return w[k] * table(i, k) * conj_table(j, k); }
};

QPoly poly_lcm(const QPoly& a, const QPoly& b) {
  if (a.degree() <= 0) return b.monic();
  if (b.degree() <= 0) return a.monic();
  return (a * QPoly::exact_div(b, QPoly::gcd(a, b))).monic();
}

// Runs body(idx) for idx in [0, count) on the OpenMP team, rethrowing the
// first exception on the calling thread.
template <class F>
void parallel_for(long count, F&& body) {
  std::exception_ptr err;
  std::mutex mu;
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < count; ++idx) {
    try {
      body(idx);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

Cyclo small_det(const CycloMatrix& m) {
  if (m.rows() == 1) return m(0, 0);
  if (m.rows() == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return determinant(m);
}

}  // namespace

CycloMatrix cg_matrix(const GroupModel& g, const std::vector<Cyclo>& x) {
  const int n = g.num_classes();
  if (static_cast<int>(x.size()) != n)
    throw DomainError("class function has " + std::to_string(x.size()) + " values, expected " + std::to_string(n));
  const ClassWeights cw(g);
  CycloMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Cyclo acc;
      for (int k = 0; k < n; ++k) acc += cw.coefficient(i, j, k) * x[k];
      out(i, j) = acc;
    }
  return out;
}

SeriesMatrix class_function_matrix(const GroupModel& g, const std::vector<RatQ>& f) {
  const int n = g.num_classes();
  if (static_cast<int>(f.size()) != n) throw DomainError("class function length differs from the class count");
  const ClassWeights cw(g);
  QPoly L(Cyclo(1));
  for (const auto& v : f) L = poly_lcm(L, v.den());
  std::vector<QPoly> cleared(n);
  for (int k = 0; k < n; ++k) cleared[k] = f[k].num() * QPoly::exact_div(L, f[k].den());

  SeriesMatrix out(n, n);
  parallel_for(static_cast<long>(n) * n, [&](long idx) {
    const int i = static_cast<int>(idx / n), j = static_cast<int>(idx % n);
    QPoly num;
    for (int k = 0; k < n; ++k) {
      if (cleared[k].is_zero()) continue;
      const Cyclo c = cw.coefficient(i, j, k);
      if (!c.is_zero()) num += cleared[k].scaled(c);
    }
    out(i, j) = RatQ(num, L);
  });
  return out;
}

std::vector<RatQ> kernel_values(const ClassKernels& k, SeriesKind kind, Sign sign) {
  std::vector<RatQ> out;
  out.reserve(k.charpoly.size());
  for (int c = 0; c < static_cast<int>(k.charpoly.size()); ++c) out.push_back(k.kernel(c, kind, sign));
  return out;
}

SeriesMatrix series_matrix(const GroupModel& g, SeriesKind kind, Sign sign) {
  return class_function_matrix(g, kernel_values(class_kernels(g), kind, sign));
}

SeriesMatrix to_series(const CycloMatrix& m) {
  return m.map([](const Cyclo& c) { return RatQ(c); });
}

SeriesMatrix derivative(const SeriesMatrix& m, int order) {
  return m.map([order](const RatQ& r) { return r.derivative(order); });
}

SeriesMatrix shift_by_q(const SeriesMatrix& m) {
  const RatQ q(QPoly::q());
  return m.map([&q](const RatQ& r) { return q * r; });
}

CycloMatrix evaluate(const SeriesMatrix& m, const Cyclo& x) {
  return m.map([&x](const RatQ& r) { return r.evaluate(x); });
}

CycloMatrix limit_at_one(const SeriesMatrix& m) {
  return m.map([](const RatQ& r) { return r.limit_at_one(); });
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int a = 0; a < k; ++a) cur[a] = a;
  while (true) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int a = pos + 1; a < k; ++a) cur[a] = cur[a - 1] + 1;
  }
  return out;
}

MinorEngine::MinorEngine(const GroupModel& g, SeriesKind kind, Sign sign, int k) : g_(&g), k_(k) {
  const int n = g.num_classes();
  if (k < 1 || k > n) throw DomainError("minor size out of range");
  const auto kernels = kernel_values(class_kernels(g), kind, sign);
  matrix_ = class_function_matrix(g, kernels);
  subsets_ = k_subsets(n, k);
  std::vector<QPoly> nums(subsets_.size()), dens(subsets_.size());
  denominator_ = QPoly(Cyclo(1));
  for (std::size_t s = 0; s < subsets_.size(); ++s) {
    QPoly num(Cyclo(1)), den(Cyclo(1));
    Cyclo w(1);
    for (int p : subsets_[s]) {
      num = num * kernels[p].num();
      den = den * kernels[p].den();
      w *= Cyclo(Rational(g.class_sizes[p], g.order));
    }
    nums[s] = num.scaled(w);
    dens[s] = den;
    denominator_ = poly_lcm(denominator_, den);
  }
  numerators_.resize(subsets_.size());
  for (std::size_t s = 0; s < subsets_.size(); ++s) numerators_[s] = nums[s] * QPoly::exact_div(denominator_, dens[s]);
}

void MinorEngine::check_indices(const std::vector<int>& rows, const std::vector<int>& cols) const {
  const int n = g_->num_classes();
  if (static_cast<int>(rows.size()) != k_ || static_cast<int>(cols.size()) != k_)
    throw DomainError("minor index lists must have length " + std::to_string(k_));
  for (const auto* list : {&rows, &cols}) {
    for (std::size_t a = 0; a < list->size(); ++a) {
      if ((*list)[a] < 0 || (*list)[a] >= n) throw DomainError("minor index out of range");
      for (std::size_t b = 0; b < a; ++b)
        if ((*list)[a] == (*list)[b]) throw DomainError("minor indices must be distinct");
    }
  }
}

RatQ MinorEngine::character_formula(const std::vector<int>& rows, const std::vector<int>& cols) const {
  check_indices(rows, cols);
  const CycloMatrix& table = g_->char_table;
  QPoly num;
  CycloMatrix x(k_, k_), y(k_, k_);
  for (std::size_t s = 0; s < subsets_.size(); ++s) {
    const auto& p = subsets_[s];
    for (int a = 0; a < k_; ++a)
      for (int b = 0; b < k_; ++b) {
        x(a, b) = table(rows[a], p[b]);
        y(a, b) = table(cols[b], p[a]).conj();
      }
    const Cyclo c = small_det(x) * small_det(y);
    if (!c.is_zero()) num += numerators_[s].scaled(c);
  }
  return RatQ(num, denominator_);
}

RatQ MinorEngine::direct(const std::vector<int>& rows, const std::vector<int>& cols) const {
  check_indices(rows, cols);
  std::vector<std::size_t> r(rows.begin(), rows.end()), c(cols.begin(), cols.end());
  const SeriesMatrix sub = matrix_.submatrix(r, c);
  if (k_ == 1) return sub(0, 0);
  if (k_ == 2) return sub(0, 0) * sub(1, 1) - sub(0, 1) * sub(1, 0);
  return determinant(sub);
}

MinorResult MinorEngine::minor(const std::vector<int>& rows, const std::vector<int>& cols) const {
  MinorResult r;
  r.character_formula = character_formula(rows, cols);
  r.direct = direct(rows, cols);
  r.agree = r.character_formula == r.direct;
  return r;
}

MinorResult minor_series(const GroupModel& g, SeriesKind kind, Sign sign, const std::vector<int>& rows,
                         const std::vector<int>& cols) {
  const MinorEngine engine(g, kind, sign, static_cast<int>(rows.size()));
  return engine.minor(rows, cols);
}

MinorSweep check_all_minors(const GroupModel& g, SeriesKind kind, Sign sign, int k) {
  const MinorEngine engine(g, kind, sign, k);
  const auto subsets = k_subsets(g.num_classes(), k);
  const long s = static_cast<long>(subsets.size());
  MinorSweep sweep;
  sweep.checked = s * s;
  long agreed = 0;
  long first_bad = -1;
  std::mutex mu;
  parallel_for(s * s, [&](long idx) {
    const auto& rows = subsets[idx / s];
    const auto& cols = subsets[idx % s];
    const bool ok = engine.character_formula(rows, cols) == engine.direct(rows, cols);
    std::lock_guard<std::mutex> lock(mu);
    if (ok) ++agreed;
    else if (first_bad < 0 || idx < first_bad) first_bad = idx;
  });
  sweep.agreed = agreed;
  if (first_bad >= 0) sweep.first_disagreement = std::make_pair(subsets[first_bad / s], subsets[first_bad % s]);
  return sweep;
}

std::vector<RatQ> row_via_first(const GroupModel& g, SeriesKind kind, Sign sign, int i) {
  const int n = g.num_classes();
  if (i < 0 || i >= n) throw DomainError("irreducible index out of range");
  const SeriesMatrix m = series_matrix(g, kind, sign);
  const SeriesMatrix cg = to_series(cg_matrix(g, g.char_table.row(i)));
  std::vector<RatQ> out(n);
  for (int j = 0; j < n; ++j) {
    RatQ acc;
    for (int k = 0; k < n; ++k) acc += m(0, k) * cg(k, j);
    out[j] = acc;
  }
  return out;
}

IdentityCheck compare_matrices(const std::string& name, const SeriesMatrix& a, const SeriesMatrix& b) {
  IdentityCheck c;
  c.identity = name;
  c.witness = first_difference(a, b);
  c.pass = c.witness.first < 0;
  return c;
}

namespace {

struct RelationInputs {
  SeriesMatrix e, a_minus, a_plus, s_plus, t_plus, p_plus, p_minus, r;
  RatQ d;
  explicit RelationInputs(const GroupModel& g) {
    const int n = g.num_classes();
    e = SeriesMatrix::identity(n);
    const ClassKernels k = class_kernels(g);
    auto series = [&](SeriesKind kind, Sign sign) { return class_function_matrix(g, kernel_values(k, kind, sign)); };
    a_minus = series(SeriesKind::A, Sign::Minus);
    a_plus = series(SeriesKind::A, Sign::Plus);
    s_plus = series(SeriesKind::S, Sign::Plus);
    t_plus = series(SeriesKind::T, Sign::Plus);
    p_plus = series(SeriesKind::P, Sign::Plus);
    p_minus = series(SeriesKind::P, Sign::Minus);
    r = to_series(cg_matrix(g, g.defining_row));
    d = RatQ(Cyclo(g.dim));
  }
};

}  // namespace

std::vector<IdentityCheck> relation_suite(const GroupModel& g) {
  const RelationInputs in(g);
  const RatQ q(QPoly::q());
  std::vector<IdentityCheck> out;
  out.push_back(compare_matrices("M[A(-q)] M[S(q)] = E", in.a_minus * in.s_plus, in.e));
  out.push_back(compare_matrices("(E - q M[R]) M[T(q)] = E", (in.e - q * in.r) * in.t_plus, in.e));
  out.push_back(compare_matrices("M[A(q)] (d E - M[P(-q)]) = q d/dq M[A(q)]", in.a_plus * (in.d * in.e - in.p_minus),
                                 shift_by_q(derivative(in.a_plus))));
  out.push_back(compare_matrices("M[S(q)] (M[P(q)] - d E) = q d/dq M[S(q)]", in.s_plus * (in.p_plus - in.d * in.e),
                                 shift_by_q(derivative(in.s_plus))));
  return out;
}

std::vector<IdentityCheck> printed_relation_variants(const GroupModel& g) {
  const RelationInputs in(g);
  std::vector<IdentityCheck> out;
  out.push_back(compare_matrices("M[A(q)] (M[P(-q)] - E) = q d/dq M[A(q)]", in.a_plus * (in.p_minus - in.e),
                                 shift_by_q(derivative(in.a_plus))));
  out.push_back(compare_matrices("M[S(q)] (M[P(q)] - E) = q d/dq M[S(q)]", in.s_plus * (in.p_plus - in.e),
                                 shift_by_q(derivative(in.s_plus))));
  return out;
}

}  // namespace cgs
