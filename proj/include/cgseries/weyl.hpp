#pragma once

#include <vector>

#include "cgseries/dynkin.hpp"

namespace cgs {

// Positive roots of a finite-type Cartan matrix as coefficient vectors in
// the simple roots, by root strings; throws DomainError past max_height.
std::vector<std::vector<long>> positive_roots(const IntMatrix& cartan, int max_height = 1000);
// Coefficients of the sum of all positive roots.
std::vector<long> weyl_oracle(const IntMatrix& cartan);

}  // namespace cgs
