#include <algorithm>

#include "cgseries/errors.hpp"
#include "cgseries/group_model.hpp"
#include "cgseries/partition.hpp"

namespace cgs {

namespace {

// Permutation matrix of the standard element of cycle type mu
// (cycles on consecutive points).
CycloMatrix cycle_type_matrix(const Partition& mu, int d) {
  CycloMatrix m(d, d);
  int start = 0;
  for (int len : mu) {
    for (int k = 0; k < len; ++k) {
      const int from = start + k;
      const int to = start + (k + 1) % len;
      m(to, from) = Cyclo(1);
    }
    start += len;
  }
  return m;
}

}  // namespace

GroupModel make_symmetric(int d) {
  const int limit = symmetric_degree_limit();
  if (d < 1 || d > limit)
    throw DomainError("symmetric group degree " + std::to_string(d) + " outside 1.." + std::to_string(limit));
  GroupModel g;
  g.name = "sym:" + std::to_string(d);
  g.family = Family::Symmetric;
  g.param = d;
  g.order = factorial(d).get_si();
  g.dim = d;
  g.conductor = 1;

  const std::vector<Partition> irreps = partitions_of(d);
  std::vector<Partition> classes = irreps;
  std::reverse(classes.begin(), classes.end());
  const std::size_t n = irreps.size();

  g.char_table = CycloMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g.irrep_labels.push_back(partition_to_string(irreps[i]));
    for (std::size_t k = 0; k < n; ++k) g.char_table(i, k) = Cyclo(mn_character(irreps[i], classes[k]));
  }
  std::vector<CycloMatrix> reps;
  for (const auto& mu : classes) {
    const mpz_class size = factorial(d) / centralizer_order(mu);
    g.class_sizes.push_back(size.get_si());
    g.class_labels.push_back(partition_to_string(mu));
    g.defining_row.push_back(Cyclo(static_cast<long>(std::count(mu.begin(), mu.end(), 1))));
    reps.push_back(cycle_type_matrix(mu, d));
  }
  g.class_reps = std::move(reps);
  require_valid(g);
  return g;
}

}  // namespace cgs
