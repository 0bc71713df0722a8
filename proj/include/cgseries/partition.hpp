#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cgs {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

int partition_size(const Partition& p);
// All partitions of n, (n) first, reverse lexicographic.
std::vector<Partition> partitions_of(int n);
Partition conjugate(const Partition& p);
// n(lambda) = sum (i - 1) lambda_i
long partition_n(const Partition& p);
// Hook length and content of cell (i, j), 0-based.
int hook_length(const Partition& p, int i, int j);
int content(const Partition& p, int i, int j);
// Dominance order lambda >= mu (same size).
bool dominates(const Partition& lambda, const Partition& mu);
// z_mu = prod_i i^{m_i} m_i!
mpz_class centralizer_order(const Partition& mu);
mpz_class factorial(int n);

// "3,2,1" <-> {3,2,1}; throws DomainError on malformed input.
Partition parse_partition(const std::string& text);
std::string partition_to_string(const Partition& p);

// chi^lambda(mu) by the Murnaghan-Nakayama rule on beta-sets.
long mn_character(const Partition& lambda, const Partition& mu);

}  // namespace cgs
