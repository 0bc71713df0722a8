#include "cgseries/cg_engine.hpp"
#include "cgseries/errors.hpp"

namespace cgs {

SeriesMatrix class_function_matrix_serial(const GroupModel& g, const std::vector<RatQ>& f) {
  const int n = g.num_classes();
  if (static_cast<int>(f.size()) != n) throw DomainError("class function length differs from the class count");
  SeriesMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatQ acc;
      for (int k = 0; k < n; ++k) {
        const Cyclo c = Cyclo(Rational(g.class_sizes[k], g.order)) * g.char_table(i, k) * g.char_table(j, k).conj();
        if (!c.is_zero()) acc += RatQ(c) * f[k];
      }
      out(i, j) = acc;
    }
  return out;
}

SeriesMatrix series_matrix_serial(const GroupModel& g, SeriesKind kind, Sign sign) {
  return class_function_matrix_serial(g, kernel_values(class_kernels(g), kind, sign));
}

RatQ minor_character_formula_serial(const GroupModel& g, const ClassKernels& kernels, SeriesKind kind, Sign sign,
                                    const std::vector<int>& rows, const std::vector<int>& cols) {
  const int k = static_cast<int>(rows.size());
  if (k < 1 || static_cast<int>(cols.size()) != k) throw DomainError("minor index lists must have equal length");
  const auto kv = kernel_values(kernels, kind, sign);
  RatQ total;
  for (const auto& p : k_subsets(g.num_classes(), k)) {
    CycloMatrix x(k, k), y(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        x(a, b) = g.char_table(rows[a], p[b]);
        y(a, b) = g.char_table(cols[b], p[a]).conj();
      }
    Cyclo c = determinant(x) * determinant(y);
    if (c.is_zero()) continue;
    RatQ term(c);
    for (int idx : p) term *= RatQ(Cyclo(Rational(g.class_sizes[idx], g.order))) * kv[idx];
    total += term;
  }
  return total;
}

MinorSweep check_all_minors_serial(const GroupModel& g, SeriesKind kind, Sign sign, int k) {
  const ClassKernels kernels = class_kernels(g);
  const SeriesMatrix m = series_matrix_serial(g, kind, sign);
  const auto subsets = k_subsets(g.num_classes(), k);
  MinorSweep sweep;
  for (const auto& rows : subsets)
    for (const auto& cols : subsets) {
      ++sweep.checked;
      const std::vector<std::size_t> r(rows.begin(), rows.end()), c(cols.begin(), cols.end());
      const RatQ direct = determinant(m.submatrix(r, c));
      if (minor_character_formula_serial(g, kernels, kind, sign, rows, cols) == direct) {
        ++sweep.agreed;
      } else if (!sweep.first_disagreement) {
        sweep.first_disagreement = std::make_pair(rows, cols);
      }
    }
  return sweep;
}

}  // namespace cgs
