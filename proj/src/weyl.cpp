#include "cgseries/weyl.hpp"

#include <set>

#include "cgseries/errors.hpp"

namespace cgs {

std::vector<std::vector<long>> positive_roots(const IntMatrix& cartan, int max_height) {
  const int n = static_cast<int>(cartan.rows());
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> roots, layer;
  for (int i = 0; i < n; ++i) {
    std::vector<long> r(n, 0);
    r[i] = 1;
    layer.push_back(r);
    seen.insert(r);
  }
  int height = 1;
  while (!layer.empty()) {
    if (height > max_height) throw DomainError("root enumeration exceeded the height bound; not of finite type?");
    std::vector<std::vector<long>> next;
    for (const auto& beta : layer) {
      roots.push_back(beta);
      for (int i = 0; i < n; ++i) {
        long pairing = 0;  // <beta, alpha_i^vee>
        for (int j = 0; j < n; ++j) pairing += beta[j] * cartan(j, i);
        long p = 0;
        std::vector<long> down = beta;
        while (true) {
          --down[i];
          if (down[i] < 0 || !seen.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          std::vector<long> up = beta;
          ++up[i];
          if (seen.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
    ++height;
  }
  return roots;
}

std::vector<long> weyl_oracle(const IntMatrix& cartan) {
  std::vector<long> sum(cartan.rows(), 0);
  for (const auto& r : positive_roots(cartan))
    for (std::size_t i = 0; i < r.size(); ++i) sum[i] += r[i];
  return sum;
}

}  // namespace cgs
