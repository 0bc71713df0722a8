#pragma once

#include <optional>
#include <vector>

#include "cgseries/matrix.hpp"
#include "cgseries/qpoly.hpp"

namespace cgs {

class GroupAnalysis;

using PolyMatrix = Matrix<QPoly>;

// Cohen-Macaulay data of the isotypic components over a homogeneous system
// of parameters of degrees n_1..n_d.
struct CMData {
  std::vector<int> hsop_degrees;
  QPoly d_r;       // D(R) = prod_k (1 - q^{n_k}) / (1 - q)
  PolyMatrix dr;   // dr(i, j) = D[R]_j^i
  std::vector<std::vector<int>> exponents;  // m_{1j} <= ... <= m_{mu_j j}, read off dr(0, j)
  std::vector<long> multiplicities;         // mu_j
  bool nonnegative = false;     // every dr(i, j) has nonnegative integer coefficients
  bool mu_relation = false;     // mu_j |G| = d_j n_1 ... n_d
  bool reconstruction = false;  // M_S(q)(i, j) = dr(i, j) / ((1 - q)^d D(R))
};

// Degrees default to (2, m) for cyclic groups, (1, ..., d) for S_d and the
// hsop_search result for other two-dimensional groups. Throws DomainError
// when the degrees do not clear the denominators of row 0 of M_S(q) or leave
// negative coefficients.
CMData cm_data(GroupAnalysis& a, const std::optional<std::vector<int>>& degrees = std::nullopt);

// Lexicographically smallest (a, b), a <= b <= bound (default 2|G|, env
// CGSERIES_HSOP_BOUND), for which every M_S(q)(0, j) (1 - q^a)(1 - q^b) is a
// polynomial with nonnegative integer coefficients and mu_j |G| = d_j a b.
std::vector<int> hsop_search(GroupAnalysis& a);

std::vector<int> default_hsop_degrees(GroupAnalysis& a);

}  // namespace cgs
