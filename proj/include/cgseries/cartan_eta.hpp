#pragma once

#include <string>
#include <vector>

#include "cgseries/analysis.hpp"
#include "cgseries/cg_engine.hpp"

namespace cgs {

// Series matrix of A(-q) with row and column 0 removed.
SeriesMatrix euclidean_cg(GroupAnalysis& a);
// The same at q = 1 (the Euclidean Cartan matrix).
CycloMatrix euclidean_cartan(GroupAnalysis& a);

// M[A(-1)] = 2E - M[R], equality with the affine Cartan matrix of the
// McKay diagram, and the dimension vector in its kernel.
std::vector<IdentityCheck> mckay_check(GroupAnalysis& a);

// (i, j) entry, 1 <= i, j <= n, stored 0-based:
// (|C_i| / |G|) (conj chi_j(g_i) - d_j).
CycloMatrix inverse_char_table(const GroupModel& g);
// chi~ with rows irreducibles 1..n and columns classes 1..n.
CycloMatrix euclidean_char_table(const GroupModel& g);

enum class InverseMethod { Direct, Characters, Eta, Limit, SylvesterLimit };
std::string method_name(InverseMethod m);
InverseMethod parse_method(const std::string& text);
std::vector<InverseMethod> all_inverse_methods();

// Inverse Euclidean Cartan matrix (0-based over nodes 1..n).
//   Direct:         Gaussian elimination of euclidean_cartan.
//   Characters:     (1/|G|) sum_{k>=1} |C_k| (chi_i - d_i)(conj chi_j - d_j) / det(E - R(g_k)).
//   Eta:            d_i d_j (K_0^0 - K_0^i/d_i - K_j^0/d_j + K_j^i/(d_i d_j)).
//   Limit:          d_i d_j lim_{q->1} of the same bracket in M_S(q).
//   SylvesterLimit: lim_{q->1} det2(D) / ((1 - q)^d D(R) D[R]_0^0).
// Analytic methods throw NonFreeAction; Direct throws SingularMatrix.
CycloMatrix cartan_inverse(GroupAnalysis& a, InverseMethod method);

// min(i, j) - ij/(n + 1)
Rational an_closed_form(int n, int i, int j);

struct EtaData {
  CycloMatrix unsigned_sums;  // K(i, j) = K_j^i
  CycloMatrix eta;            // sigma * K
  std::vector<Cyclo> eta0;    // eta_j^0 = eta(0, j)
  int sigma = 1;              // (-1)^{d/2} for even d, 1 otherwise
  bool special_unitary = false;  // det R trivial
  bool residue_identity = false;  // K = -Res_{q=1} (M_S - d_i d_j/(|G|(1-q)^d)) / (1 - q)
  bool definitional_identity = false;  // eta(i, j) = sum_k M[R_i](k, j) eta(0, k)
};

EtaData eta_invariants(GroupAnalysis& a);

// Identities at q = 1 between D = D[R] and M_A = M[R_A(-q)], d = dim R:
//   D^{(i)} M_A^{i+1} = 0 and D^{i+1} M_A^{(i)} = 0 for i = 0..d-1,
//   D^{(d)} M_A^{d+1} = (-1)^d d! mu_0 |G| M_A(1)^d,
//   D^{d+1} M_A^{(d)} = (-1)^d d! (mu_0 |G|)^d mu_0 v v^T M[det R], v the dimension vector.
// Superscript (i) is the entrywise derivative, a plain exponent the matrix power.
std::vector<IdentityCheck> prop3_check(GroupAnalysis& a, const CMData& cm);
// D^{d+1} M_A^{d+1} = mu_0 |G| M[det R] M_A(1)^d with both exponents read as
// powers. The left side is always 0 since v^T M_A(1) = 0, so this fails.
IdentityCheck prop3_power_variant(GroupAnalysis& a, const CMData& cm);

// Character of det R, from the class kernels.
std::vector<Cyclo> det_character(GroupAnalysis& a);

// Cyclic m: D[R]_j^0''(1)/2 = n(n+1)/2 - j(n-j+1) = n(n+1)/2 - (n+1) inv_jj.
std::vector<IdentityCheck> an_dprime_check(int m);

// 2 * row sums of the direct inverse.
std::vector<Rational> weyl_vector(GroupAnalysis& a);

}  // namespace cgs
