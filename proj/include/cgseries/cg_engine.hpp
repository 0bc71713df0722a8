#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgseries/group_model.hpp"
#include "cgseries/kernels.hpp"
#include "cgseries/matrix.hpp"
#include "cgseries/ratq.hpp"

namespace cgs {

// Row i, column j holds M_j^i = (R_X (x) R_i, R_j).
using SeriesMatrix = Matrix<RatQ>;

// Entry (i, j) = (1/|G|) sum_k |C_k| x(g_k) chi_i(g_k) conj chi_j(g_k).
CycloMatrix cg_matrix(const GroupModel& g, const std::vector<Cyclo>& x);

// Same class sum with a RatQ-valued class function f. The parallel version
// clears all class denominators into one lcm and normalises each entry once;
// the serial reference adds canonical RatQ terms one at a time.
SeriesMatrix class_function_matrix(const GroupModel& g, const std::vector<RatQ>& f);
SeriesMatrix class_function_matrix_serial(const GroupModel& g, const std::vector<RatQ>& f);

std::vector<RatQ> kernel_values(const ClassKernels& k, SeriesKind kind, Sign sign);
SeriesMatrix series_matrix(const GroupModel& g, SeriesKind kind, Sign sign);
SeriesMatrix series_matrix_serial(const GroupModel& g, SeriesKind kind, Sign sign);

SeriesMatrix to_series(const CycloMatrix& m);
SeriesMatrix derivative(const SeriesMatrix& m, int order = 1);
SeriesMatrix shift_by_q(const SeriesMatrix& m);  // q * m
// Entrywise value at x; DomainError at a pole.
CycloMatrix evaluate(const SeriesMatrix& m, const Cyclo& x);
// Entrywise q -> 1 limit via (1 - q)-cancellation.
CycloMatrix limit_at_one(const SeriesMatrix& m);

// Minors by the character-table (Cauchy-Binet) formula and by the
// determinant of the submatrix.
struct MinorResult {
  RatQ character_formula;
  RatQ direct;
  bool agree = false;
};

class MinorEngine {
 public:
  // Precomputes the series matrix and, for every k-subset of classes, the
  // kernel product over a common denominator.
  MinorEngine(const GroupModel& g, SeriesKind kind, Sign sign, int k);

  RatQ character_formula(const std::vector<int>& rows, const std::vector<int>& cols) const;
  RatQ direct(const std::vector<int>& rows, const std::vector<int>& cols) const;
  MinorResult minor(const std::vector<int>& rows, const std::vector<int>& cols) const;
  const SeriesMatrix& matrix() const { return matrix_; }
  int k() const { return k_; }

 private:
  void check_indices(const std::vector<int>& rows, const std::vector<int>& cols) const;
  const GroupModel* g_;
  int k_;
  SeriesMatrix matrix_;
  std::vector<std::vector<int>> subsets_;
  std::vector<QPoly> numerators_;  // per subset, over denominator_
  QPoly denominator_;
};

MinorResult minor_series(const GroupModel& g, SeriesKind kind, Sign sign, const std::vector<int>& rows,
                         const std::vector<int>& cols);
// Character formula summed term by term in canonical RatQ arithmetic.
RatQ minor_character_formula_serial(const GroupModel& g, const ClassKernels& kernels, SeriesKind kind, Sign sign,
                                    const std::vector<int>& rows, const std::vector<int>& cols);

struct MinorSweep {
  long checked = 0;
  long agreed = 0;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> first_disagreement;
  bool ok() const { return checked == agreed; }
};

// Every k x k minor of one series matrix; parallel over minors.
MinorSweep check_all_minors(const GroupModel& g, SeriesKind kind, Sign sign, int k);
MinorSweep check_all_minors_serial(const GroupModel& g, SeriesKind kind, Sign sign, int k);

std::vector<std::vector<int>> k_subsets(int n, int k);

// Row 0 of the series matrix times the integer CG matrix of R_i.
std::vector<RatQ> row_via_first(const GroupModel& g, SeriesKind kind, Sign sign, int i);

struct IdentityCheck {
  std::string identity;
  bool pass = false;
  std::pair<int, int> witness{-1, -1};  // first differing entry on failure
};

// M_A(-q) M_S(q) = E;  (E - q M[R]) M_T(q) = E;
// M_A(q) (d E - M_P(-q)) = q M_A'(q);  M_S(q) (M_P(q) - d E) = q M_S'(q).
std::vector<IdentityCheck> relation_suite(const GroupModel& g);
// The two differential relations with E in place of d E and the exterior one
// with the opposite sign. They do not hold; kept for the regression tests.
std::vector<IdentityCheck> printed_relation_variants(const GroupModel& g);

IdentityCheck compare_matrices(const std::string& name, const SeriesMatrix& a, const SeriesMatrix& b);

}  // namespace cgs
