#include "cgseries/sym_functions.hpp"

#include <algorithm>
#include <functional>

#include "cgseries/analysis.hpp"
#include "cgseries/errors.hpp"

namespace cgs {

namespace {

constexpr int kMaxDegree = 8;

void require_same_size(const std::vector<const Partition*>& ps, int max_degree = kMaxDegree) {
  const int d = partition_size(*ps.front());
  for (const auto* p : ps)
    if (partition_size(*p) != d) throw DomainError("partitions of different sizes");
  if (d > max_degree) throw DomainError("degree " + std::to_string(d) + " exceeds " + std::to_string(max_degree));
}

std::vector<std::pair<Partition, mpz_class>> classes_with_sizes(int d) {
  std::vector<std::pair<Partition, mpz_class>> out;
  const mpz_class fact = factorial(d);
  for (const auto& rho : partitions_of(d)) out.emplace_back(rho, fact / centralizer_order(rho));
  return out;
}

// Number of ways to distribute the cycles of rho into blocks of sizes mu:
// the permutation character of S_d on S_d / S_mu.
long young_permutation_character(const Partition& mu, const Partition& rho) {
  std::vector<int> remaining(mu.begin(), mu.end());
  std::function<long(std::size_t)> go = [&](std::size_t k) -> long {
    if (k == rho.size()) return 1;
    long total = 0;
    for (auto& r : remaining)
      if (r >= rho[k]) {
        r -= rho[k];
        total += go(k + 1);
        r += rho[k];
      }
    return total;
  };
  return go(0);
}

QPoly q_pochhammer(int m) {
  QPoly p(1);
  for (int j = 1; j <= m; ++j) p *= QPoly::one_minus_q_pow(j);
  return p;
}

}  // namespace

long kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  require_same_size({&lambda, &mu, &nu});
  const int d = partition_size(lambda);
  mpz_class total = 0;
  for (const auto& [rho, size] : classes_with_sizes(d))
    total += size * mn_character(lambda, rho) * mn_character(mu, rho) * mn_character(nu, rho);
  return mpz_class(total / factorial(d)).get_si();
}

RatQ principal_specialization(const Partition& lambda, std::optional<int> n_vars) {
  if (n_vars && static_cast<int>(lambda.size()) > *n_vars) return RatQ();
  QPoly num = QPoly::monomial(Cyclo(1), static_cast<int>(partition_n(lambda)));
  QPoly den(1);
  for (int i = 0; i < static_cast<int>(lambda.size()); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      den *= QPoly::one_minus_q_pow(hook_length(lambda, i, j));
      if (n_vars) num *= QPoly::one_minus_q_pow(*n_vars + content(lambda, i, j));
    }
  return RatQ(num, den);
}

RatQ kron_specialized(const Partition& lambda, const Partition& mu, std::optional<int> n_vars) {
  require_same_size({&lambda, &mu});
  RatQ total;
  for (const auto& nu : partitions_of(partition_size(lambda))) {
    const long g = kronecker_coefficient(lambda, mu, nu);
    if (g != 0) total += RatQ(g) * principal_specialization(nu, n_vars);
  }
  return total;
}

std::vector<Tableau> semistandard_tableaux(const Partition& lambda, const Partition& mu) {
  std::vector<Tableau> out;
  if (partition_size(lambda) != partition_size(mu)) return out;
  Tableau t(lambda.size());
  // Place value v + 1 as a horizontal strip of size mu[v] on top of the current shape.
  std::function<void(std::size_t)> place = [&](std::size_t v) {
    if (v == mu.size()) {
      out.push_back(t);
      return;
    }
    const int value = static_cast<int>(v) + 1;
    std::function<void(std::size_t, int)> row = [&](std::size_t r, int left) {
      if (r == lambda.size()) {
        if (left == 0) place(v + 1);
        return;
      }
      const int len = static_cast<int>(t[r].size());
      // Cells added in row r must sit below filled cells of row r - 1 that hold smaller values.
      int cap = lambda[r] - len;
      if (r > 0) {
        int above = 0;
        for (int x : t[r - 1])
          if (x < value) ++above;
        cap = std::min(cap, above - len);
      }
      for (int k = std::min(cap, left); k >= 0; --k) {
        t[r].insert(t[r].end(), k, value);
        row(r + 1, left - k);
        t[r].resize(len);
      }
    };
    row(0, mu[v]);
  };
  place(0);
  return out;
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (auto it = t.rbegin(); it != t.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

int charge(const std::vector<int>& word) {
  std::vector<int> w = word;
  int total = 0;
  while (!w.empty()) {
    const int top = *std::max_element(w.begin(), w.end());
    const int n = static_cast<int>(w.size());
    std::vector<bool> used(n, false);
    int pos = -1, index = 0;
    for (int letter = 1; letter <= top; ++letter) {
      int start = pos < 0 ? n - 1 : pos - 1;
      bool wrapped = pos < 0;
      int found = -1;
      for (int step = 0; step < n; ++step) {
        int p = start - step;
        if (p < 0) {
          p += n;
          wrapped = true;
        }
        if (!used[p] && w[p] == letter) {
          found = p;
          break;
        }
      }
      if (found < 0) throw DomainError("charge needs a word of partition content");
      if (letter > 1 && (wrapped || found > pos)) ++index;
      total += letter > 1 ? index : 0;
      used[found] = true;
      pos = found;
    }
    std::vector<int> rest;
    for (int p = 0; p < n; ++p)
      if (!used[p]) rest.push_back(w[p]);
    w = std::move(rest);
  }
  return total;
}

QPoly kostka_foulkes(const Partition& lambda, const Partition& mu) {
  require_same_size({&lambda, &mu});
  QPoly k;
  for (const auto& t : semistandard_tableaux(lambda, mu)) k += QPoly::monomial(Cyclo(1), charge(reading_word(t)));
  return k;
}

long kostka_number(const Partition& lambda, const Partition& mu) {
  require_same_size({&lambda, &mu});
  const int d = partition_size(lambda);
  mpz_class total = 0;
  for (const auto& [rho, size] : classes_with_sizes(d))
    total += size * mn_character(lambda, rho) * young_permutation_character(mu, rho);
  return mpz_class(total / factorial(d)).get_si();
}

SymCheck kf_identity_check(const Partition& lambda, const Partition& mu) {
  require_same_size({&lambda, &mu}, 6);
  SymCheck c;
  c.lhs = kron_specialized(lambda, mu);
  for (const auto& nu : partitions_of(partition_size(lambda))) {
    const QPoly num = kostka_foulkes(lambda, nu) * kostka_foulkes(mu, nu);
    if (num.is_zero()) continue;
    const Partition conj = conjugate(nu);
    QPoly den(1);
    for (std::size_t i = 0; i < conj.size(); ++i)
      den *= q_pochhammer(conj[i] - (i + 1 < conj.size() ? conj[i + 1] : 0));
    c.rhs += RatQ(num, den);
  }
  c.pass = c.lhs == c.rhs;
  return c;
}

QPoly kostka_macdonald_qq(const Partition& lambda, const Partition& mu) {
  require_same_size({&lambda, &mu}, 6);
  QPoly hooks(1);
  for (int i = 0; i < static_cast<int>(mu.size()); ++i)
    for (int j = 0; j < mu[i]; ++j) hooks *= QPoly::one_minus_q_pow(hook_length(mu, i, j));
  const RatQ v = kron_specialized(lambda, mu) * RatQ(hooks);
  if (!v.is_polynomial() || !v.num().nonnegative_integer_coefficients())
    throw DomainError("K(q, q) is not a polynomial with nonnegative integer coefficients");
  return v.num();
}

SymCheck supersym_check(const Partition& mu, const Rational& t) {
  const int d = partition_size(mu);
  if (d > 6) throw DomainError("supersymmetric check limited to d <= 6");
  GroupAnalysis a(make_symmetric(d));
  const GroupModel& g = a.group();
  const auto& ker = a.kernels();
  const auto labels = g.irrep_labels;
  const auto it = std::find(labels.begin(), labels.end(), partition_to_string(mu));
  if (it == labels.end()) throw DomainError("unknown partition");
  const int row = static_cast<int>(it - labels.begin());
  SymCheck c;
  for (int k = 0; k < g.num_classes(); ++k)
    c.lhs += RatQ(Cyclo(Rational(g.class_sizes[k], g.order)) * g.char_table(row, k)) * ker.supersymmetric(k, Cyclo(t));
  QPoly num(1), den(1);
  for (int i = 0; i < static_cast<int>(mu.size()); ++i)
    for (int j = 0; j < mu[i]; ++j) {
      num *= QPoly::monomial(Cyclo(1), i) + QPoly::monomial(Cyclo(t), j);
      den *= QPoly::one_minus_q_pow(hook_length(mu, i, j));
    }
  c.rhs = RatQ(num, den);
  c.pass = c.lhs == c.rhs;
  return c;
}

std::vector<FakeDegreeRow> fake_degree_check(int d) {
  if (d < 1 || d > 6) throw DomainError("fake degree check limited to 1 <= d <= 6");
  GroupAnalysis a(make_symmetric(d));
  std::vector<int> degrees;
  for (int k = 1; k <= d; ++k) degrees.push_back(k);
  const CMData cm = cm_data(a, degrees);
  const Partition ones(d, 1);
  std::vector<FakeDegreeRow> rows;
  for (int j = 0; j < a.group().num_classes(); ++j) {
    FakeDegreeRow r;
    r.lambda = parse_partition(a.group().irrep_labels[j]);
    r.cm_numerator = cm.dr(0, j);
    r.kostka = kostka_foulkes(conjugate(r.lambda), ones);
    r.pass = r.cm_numerator == r.kostka;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace cgs
