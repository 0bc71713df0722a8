#pragma once

#include <optional>
#include <vector>

#include "cgseries/partition.hpp"
#include "cgseries/ratq.hpp"

namespace cgs {

// g_{lambda mu nu} = (1/d!) sum over classes |C| chi^lambda chi^mu chi^nu, d <= 8.
long kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// s_lambda(1, q, q^2, ...) when n_vars is empty, else s_lambda(1, q, ..., q^{N-1});
// zero when lambda has more than N parts.
RatQ principal_specialization(const Partition& lambda, std::optional<int> n_vars = std::nullopt);

// (s_lambda * s_mu) under the same specialization.
RatQ kron_specialized(const Partition& lambda, const Partition& mu, std::optional<int> n_vars = std::nullopt);

// Semistandard tableaux of shape lambda and content mu, rows left to right.
using Tableau = std::vector<std::vector<int>>;
std::vector<Tableau> semistandard_tableaux(const Partition& lambda, const Partition& mu);
// Rows bottom to top, each left to right.
std::vector<int> reading_word(const Tableau& t);
// Lascoux-Schutzenberger charge of a word with partition content.
int charge(const std::vector<int>& word);

// sum_T q^{charge(T)}
QPoly kostka_foulkes(const Partition& lambda, const Partition& mu);
// K_{lambda mu} = <chi^lambda, Ind_{S_mu}^{S_d} 1>.
long kostka_number(const Partition& lambda, const Partition& mu);

struct SymCheck {
  bool pass = false;
  RatQ lhs;
  RatQ rhs;
};

// (s_lambda * s_mu)(1, q, ...) = sum_nu K_{lambda nu}(q) K_{mu nu}(q) / prod_i (q;q)_{nu'_i - nu'_{i+1}}
SymCheck kf_identity_check(const Partition& lambda, const Partition& mu);

// (s_lambda * s_mu)(1, q, ...) prod_{cells of mu} (1 - q^h); DomainError unless
// a polynomial with nonnegative integer coefficients.
QPoly kostka_macdonald_qq(const Partition& lambda, const Partition& mu);

// (1/d!) sum |C_k| chi^mu(g_k) det(E + t R(g_k)) / det(E - q R(g_k)) over S_d with
// its permutation representation, against prod_{(i,j) in mu} (q^i + t q^j) / (1 - q^{h(i,j)}).
SymCheck supersym_check(const Partition& mu, const Rational& t);

struct FakeDegreeRow {
  Partition lambda;
  QPoly cm_numerator;  // D[R]_lambda^0 for degrees (1, ..., d)
  QPoly kostka;        // K_{lambda', (1^d)}(q)
  bool pass = false;
};

std::vector<FakeDegreeRow> fake_degree_check(int d);

}  // namespace cgs
