#pragma once

#include <string>
#include <vector>

#include "cgseries/analysis.hpp"

namespace cgs {

// Literal closed forms for the inverse Euclidean Cartan matrix and the Weyl
// vector, with their printed scalar prefactors. Each differs from the exact
// value by a constant c |G|^e.
//
//   formula               printed form
//   inverse/characters    1/|G|^2 sum_k |C_k| (chi_i - d_i)(conj chi_j - d_j) / det(E - R(g_k))
//   inverse/residue       d_i d_j/|G| Res_{q=1} [S-bracket / (1 - q)]
//   inverse/cm-residue    d_i d_j/|G| Res_{q=1} [D-bracket / ((1 - q)^{d+1} D(R))]
//   inverse/eta           (-1)^d d_i d_j/(2|G|) eta-bracket
//   inverse/cm-derivative d_i d_j/(mu_0 |G|) d^d/dq^d [D-bracket] at 1
//   weyl/eta              (-1)^d/|G| sum_j d_i d_j eta-bracket
//   weyl/cm-derivative    2/(mu_0 |G|) sum_j d_i d_j d^d/dq^d [D-bracket] at 1
//   weyl/residue          2/|G| sum_j d_i d_j Res_{q=1} [S-bracket / (1 - q)]
//   weyl/characters       2/|G|^2 sum_j sum_k |C_k| (chi_i - d_i)(conj chi_j - d_j) / det(E - R(g_k))
//
// X-bracket = X_0^0 - X_0^i/d_i - X_j^0/d_j + X_j^i/(d_i d_j).
struct CalibrationConstant {
  std::string formula;
  Rational coefficient;  // c
  int exponent = 0;      // e
};

// Frozen after fitting on cyclic m = 2..6 (d = 2):
//   inverse/characters     |G|      weyl/characters     |G|
//   inverse/residue       -|G|      weyl/residue       -|G|
//   inverse/cm-residue    -|G|      weyl/cm-derivative  1/2
//   inverse/eta          -2|G|      weyl/eta          -2|G|
//   inverse/cm-derivative  1/2
const std::vector<CalibrationConstant>& frozen_calibration();
std::vector<std::string> calibration_formulas();

// Printed value (n x n for inverse/*, n x 1 for weyl/*).
CycloMatrix printed_formula(GroupAnalysis& a, const std::string& formula);
// Exact value the formula should give: the direct inverse or 2 * its row sums.
CycloMatrix calibration_target(GroupAnalysis& a, const std::string& formula);

// target = c * printed with one rational c, when it exists.
std::optional<Rational> observed_ratio(GroupAnalysis& a, const std::string& formula);

// Fit c |G|^e, e in [-3, 3], from the given groups; nullopt when no e fits.
std::optional<CalibrationConstant> fit_calibration(const std::string& formula, std::vector<GroupAnalysis*> groups);

// target == c |G|^e * printed exactly.
bool check_calibration(GroupAnalysis& a, const CalibrationConstant& c);

}  // namespace cgs
