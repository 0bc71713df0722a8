#include "cgseries/calibration.hpp"

#include "cgseries/cartan_eta.hpp"
#include "cgseries/errors.hpp"

namespace cgs {

namespace {

Cyclo rat(long v) { return Cyclo(Rational(v)); }

Cyclo residue_over_one_minus_q(const RatQ& f) {
  const RatQ g = f / RatQ(QPoly::from_ints({1, -1}));
  if (g.is_zero() || g.order_at_one() >= 0) return Cyclo();
  return g.residue_at_one();
}

// Bracket B_j^i over nodes 1..n, without the d_i d_j factor.
template <class T, class F>
Matrix<T> raw_bracket(const std::vector<long>& dims, F&& x) {
  const std::size_t n = dims.size() - 1;
  Matrix<T> out(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      out(i - 1, j - 1) = x(0, 0) - x(i, 0) / T(dims[i]) - x(0, j) / T(dims[j]) + x(i, j) / T(dims[i] * dims[j]);
  return out;
}

CycloMatrix weighted_row_sums(const CycloMatrix& m, const std::vector<long>& dims, const Cyclo& scale) {
  CycloMatrix out(m.rows(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, 0) += scale * rat(dims[i + 1] * dims[j + 1]) * m(i, j);
  return out;
}

CycloMatrix weighted(const CycloMatrix& m, const std::vector<long>& dims, const Cyclo& scale) {
  CycloMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = scale * rat(dims[i + 1] * dims[j + 1]) * m(i, j);
  return out;
}

CycloMatrix character_sum(GroupAnalysis& a) {
  const GroupModel& g = a.group();
  const auto& dims = a.dims();
  const int n = g.num_classes() - 1;
  CycloMatrix out(n, n);
  for (int k = 1; k <= n; ++k) {
    const Cyclo w = rat(g.class_sizes[k]) / a.kernels().det_at_one(k);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        out(i - 1, j - 1) += w * (g.char_table(i, k) - rat(dims[i])) * (g.char_table(j, k).conj() - rat(dims[j]));
  }
  return out;
}

CycloMatrix s_residues(GroupAnalysis& a) {
  const SeriesMatrix& s = a.series(SeriesKind::S, Sign::Plus);
  const auto b = raw_bracket<RatQ>(a.dims(), [&](std::size_t i, std::size_t j) { return s(i, j); });
  return b.map(residue_over_one_minus_q);
}

CycloMatrix cm_residues(GroupAnalysis& a) {
  const CMData& cm = a.cm();
  const QPoly den = QPoly::from_ints({1, -1}).pow(a.group().dim + 1) * cm.d_r;
  const auto b = raw_bracket<RatQ>(a.dims(), [&](std::size_t i, std::size_t j) { return RatQ(cm.dr(i, j)); });
  return b.map([&](const RatQ& r) {
    const RatQ f = r / RatQ(den);
    return (f.is_zero() || f.order_at_one() >= 0) ? Cyclo() : f.residue_at_one();
  });
}

CycloMatrix cm_derivatives(GroupAnalysis& a) {
  const CMData& cm = a.cm();
  const int d = a.group().dim;
  const auto b = raw_bracket<RatQ>(a.dims(), [&](std::size_t i, std::size_t j) { return RatQ(cm.dr(i, j)); });
  return b.map([d](const RatQ& r) { return r.derivative(d).evaluate(Cyclo(1)); });
}

CycloMatrix eta_bracket(GroupAnalysis& a) {
  const CycloMatrix eta = eta_invariants(a).eta;
  return raw_bracket<Cyclo>(a.dims(), [&](std::size_t i, std::size_t j) { return eta(i, j); });
}

}  // namespace

const std::vector<CalibrationConstant>& frozen_calibration() {
  static const std::vector<CalibrationConstant> table = {
      {"inverse/characters", Rational(1), 1},  {"inverse/residue", Rational(-1), 1},
      {"inverse/cm-residue", Rational(-1), 1}, {"inverse/eta", Rational(-2), 1},
      {"inverse/cm-derivative", Rational(1, 2), 0}, {"weyl/eta", Rational(-2), 1},
      {"weyl/cm-derivative", Rational(1, 2), 0},    {"weyl/residue", Rational(-1), 1},
      {"weyl/characters", Rational(1), 1},
  };
  return table;
}

std::vector<std::string> calibration_formulas() {
  std::vector<std::string> out;
  for (const auto& c : frozen_calibration()) out.push_back(c.formula);
  return out;
}

CycloMatrix printed_formula(GroupAnalysis& a, const std::string& formula) {
  if (!a.free_action()) throw NonFreeAction(a.group().name + ": the action is not free");
  const GroupModel& g = a.group();
  const auto& dims = a.dims();
  const Cyclo order = rat(g.order);
  const Cyclo sign = rat(g.dim % 2 == 0 ? 1 : -1);
  if (formula == "inverse/characters") return (Cyclo(1) / (order * order)) * character_sum(a);
  if (formula == "inverse/residue") return weighted(s_residues(a), dims, Cyclo(1) / order);
  if (formula == "inverse/cm-residue") return weighted(cm_residues(a), dims, Cyclo(1) / order);
  if (formula == "inverse/eta") return weighted(eta_bracket(a), dims, sign / (rat(2) * order));
  const Cyclo mu0g = rat(a.cm().multiplicities.at(0) * g.order);
  if (formula == "inverse/cm-derivative") return weighted(cm_derivatives(a), dims, Cyclo(1) / mu0g);
  if (formula == "weyl/eta") return weighted_row_sums(eta_bracket(a), dims, sign / order);
  if (formula == "weyl/cm-derivative") return weighted_row_sums(cm_derivatives(a), dims, rat(2) / mu0g);
  if (formula == "weyl/residue") return weighted_row_sums(s_residues(a), dims, rat(2) / order);
  if (formula == "weyl/characters") {
    const CycloMatrix c = character_sum(a);
    CycloMatrix out(c.rows(), 1);
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) out(i, 0) += rat(2) / (order * order) * c(i, j);
    return out;
  }
  throw std::invalid_argument("unknown formula '" + formula + "'");
}

CycloMatrix calibration_target(GroupAnalysis& a, const std::string& formula) {
  const CycloMatrix inv = cartan_inverse(a, InverseMethod::Direct);
  if (formula.rfind("inverse/", 0) == 0) return inv;
  CycloMatrix out(inv.rows(), 1);
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j) out(i, 0) += rat(2) * inv(i, j);
  return out;
}

std::optional<Rational> observed_ratio(GroupAnalysis& a, const std::string& formula) {
  const CycloMatrix p = printed_formula(a, formula);
  const CycloMatrix t = calibration_target(a, formula);
  std::optional<Cyclo> ratio;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) {
      if (p(i, j).is_zero()) {
        if (!t(i, j).is_zero()) return std::nullopt;
        continue;
      }
      const Cyclo r = t(i, j) / p(i, j);
      if (ratio && *ratio != r) return std::nullopt;
      ratio = r;
    }
  if (!ratio || !ratio->is_rational()) return std::nullopt;
  return ratio->rational_value();
}

std::optional<CalibrationConstant> fit_calibration(const std::string& formula, std::vector<GroupAnalysis*> groups) {
  std::vector<std::pair<Rational, long>> samples;
  for (auto* a : groups) {
    const auto r = observed_ratio(*a, formula);
    if (!r) return std::nullopt;
    samples.emplace_back(*r, a->group().order);
  }
  if (samples.empty()) return std::nullopt;
  for (int e = -3; e <= 3; ++e) {
    std::optional<Rational> c;
    bool ok = true;
    for (const auto& [r, order] : samples) {
      Rational scale(1);
      for (int k = 0; k < std::abs(e); ++k) scale *= order;
      const Rational cand = e >= 0 ? Rational(r / scale) : Rational(r * scale);
      if (c && *c != cand) {
        ok = false;
        break;
      }
      c = cand;
    }
    if (ok) return CalibrationConstant{formula, *c, e};
  }
  return std::nullopt;
}

bool check_calibration(GroupAnalysis& a, const CalibrationConstant& c) {
  Rational scale = c.coefficient;
  for (int k = 0; k < std::abs(c.exponent); ++k) {
    if (c.exponent > 0) scale *= a.group().order;
    else scale /= a.group().order;
  }
  return calibration_target(a, c.formula) == Cyclo(scale) * printed_formula(a, c.formula);
}

}  // namespace cgs
