#include "cgseries/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "cgseries/errors.hpp"

namespace cgs {

int partition_size(const Partition& p) {
  int s = 0;
  for (int v : p) s += v;
  return s;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(rest - part, part);
      cur.pop_back();
    }
  };
  if (n == 0) return {Partition{}};
  rec(n, n);
  return out;
}

Partition conjugate(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  for (int j = 0; j < p[0]; ++j) {
    int count = 0;
    for (int v : p) {
      if (v > j) ++count;
    }
    out.push_back(count);
  }
  return out;
}

long partition_n(const Partition& p) {
  long s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<long>(i) * p[i];
  return s;
}

int hook_length(const Partition& p, int i, int j) {
  const Partition c = conjugate(p);
  return (p[i] - j - 1) + (c[j] - i - 1) + 1;
}

int content(const Partition&, int i, int j) { return j - i; }

bool dominates(const Partition& lambda, const Partition& mu) {
  long a = 0, b = 0;
  const std::size_t len = std::max(lambda.size(), mu.size());
  for (std::size_t k = 0; k < len; ++k) {
    a += k < lambda.size() ? lambda[k] : 0;
    b += k < mu.size() ? mu[k] : 0;
    if (a < b) return false;
  }
  return true;
}

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

mpz_class centralizer_order(const Partition& mu) {
  std::map<int, int> mult;
  for (int v : mu) ++mult[v];
  mpz_class z = 1;
  for (const auto& [part, m] : mult) {
    for (int k = 0; k < m; ++k) z *= part;
    z *= factorial(m);
  }
  return z;
}

Partition parse_partition(const std::string& text) {
  Partition p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v <= 0) throw DomainError("");
      p.push_back(v);
    } catch (const std::exception&) {
      throw DomainError("malformed partition: '" + text + "'");
    }
  }
  if (p.empty()) throw DomainError("empty partition");
  if (!std::is_sorted(p.rbegin(), p.rend())) throw DomainError("partition parts must be weakly decreasing: " + text);
  return p;
}

std::string partition_to_string(const Partition& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(p[k]);
  }
  return out;
}

namespace {

long mn_rec(std::set<int>& beta, const Partition& mu, std::size_t pos) {
  if (pos == mu.size()) return 1;
  const int r = mu[pos];
  long total = 0;
  const std::vector<int> beads(beta.begin(), beta.end());
  for (int b : beads) {
    const int target = b - r;
    if (target < 0 || beta.count(target)) continue;
    int between = 0;
    for (int x : beads) {
      if (x > target && x < b) ++between;
    }
    beta.erase(b);
    beta.insert(target);
    const long sub = mn_rec(beta, mu, pos + 1);
    beta.erase(target);
    beta.insert(b);
    total += (between % 2 ? -sub : sub);
  }
  return total;
}

}  // namespace

long mn_character(const Partition& lambda, const Partition& mu) {
  if (partition_size(lambda) != partition_size(mu)) throw DomainError("partition sizes differ");
  std::set<int> beta;
  const int len = static_cast<int>(lambda.size());
  for (int i = 0; i < len; ++i) beta.insert(lambda[i] + (len - 1 - i));
  return mn_rec(beta, mu, 0);
}

}  // namespace cgs
