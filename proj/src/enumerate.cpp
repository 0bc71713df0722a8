#include "cgseries/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "cgseries/errors.hpp"

namespace cgs {

namespace {

long common_conductor(const std::vector<CycloMatrix>& mats) {
  long L = 1;
  for (const auto& m : mats)
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = 0; b < m.cols(); ++b) L = lcm_conductor(L, m(a, b).conductor());
  return normalized_conductor(L);
}

std::string matrix_key(const CycloMatrix& m, long L) {
  std::string key;
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = 0; b < m.cols(); ++b) {
      key += m(a, b).key(L);
      key += '|';
    }
  return key;
}

Cyclo trace(const CycloMatrix& m) {
  Cyclo t;
  for (std::size_t a = 0; a < m.rows(); ++a) t += m(a, a);
  return t;
}

}  // namespace

std::vector<long> EnumeratedGroup::class_sizes() const {
  std::vector<long> out;
  for (const auto& c : classes) out.push_back(static_cast<long>(c.size()));
  return out;
}

EnumeratedGroup enumerate_from_generators(const std::vector<CycloMatrix>& gens, long cap) {
  if (gens.empty()) throw DomainError("no generators given");
  const std::size_t d = gens[0].rows();
  for (const auto& g : gens) {
    if (g.rows() != d || g.cols() != d) throw DomainError("generators must be square matrices of one size");
  }
  const long L = common_conductor(gens);
  EnumeratedGroup out;
  std::unordered_map<std::string, int> index;
  auto add = [&](const CycloMatrix& m) {
    const std::string key = matrix_key(m, L);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    if (static_cast<long>(out.elements.size()) >= cap)
      throw DomainError("closure exceeds the cap of " + std::to_string(cap) + " elements");
    const int id = static_cast<int>(out.elements.size());
    index.emplace(key, id);
    out.elements.push_back(m);
    return id;
  };
  add(CycloMatrix::identity(d));
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      const std::size_t before = out.elements.size();
      const int id = add(out.elements[cur] * g);
      if (out.elements.size() > before) queue.push_back(id);
    }
  }

  // Generator inverses lie in the finite closure; conjugate by generators.
  std::vector<CycloMatrix> gen_inv;
  for (const auto& g : gens) gen_inv.push_back(inverse(g));
  std::vector<int> class_of(out.elements.size(), -1);
  for (std::size_t start = 0; start < out.elements.size(); ++start) {
    if (class_of[start] >= 0) continue;
    const int cid = static_cast<int>(out.classes.size());
    out.classes.emplace_back();
    std::deque<int> q{static_cast<int>(start)};
    class_of[start] = cid;
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      out.classes[cid].push_back(x);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const int y = index.at(matrix_key(gen_inv[k] * out.elements[x] * gens[k], L));
        if (class_of[y] < 0) {
          class_of[y] = cid;
          q.push_back(y);
        }
      }
    }
    out.class_traces.push_back(trace(out.elements[start]));
  }
  return out;
}

EnumerationComparison compare_with_model(const EnumeratedGroup& e, const GroupModel& g) {
  EnumerationComparison r;
  auto fail = [&](const std::string& msg) {
    r.pass = false;
    r.detail = msg;
    return r;
  };
  if (e.order() != g.order) return fail("order " + std::to_string(e.order()) + " vs " + std::to_string(g.order));
  if (static_cast<int>(e.classes.size()) != g.num_classes())
    return fail("class count " + std::to_string(e.classes.size()) + " vs " + std::to_string(g.num_classes()));

  long L = g.conductor;
  for (const auto& t : e.class_traces) L = lcm_conductor(L, t.conductor());
  for (const auto& t : g.defining_row) L = lcm_conductor(L, t.conductor());
  L = normalized_conductor(L);
  auto pair_key = [&](long size, const Cyclo& tr) { return std::to_string(size) + ":" + tr.key(L); };
  std::vector<std::string> enumerated, model;
  for (std::size_t c = 0; c < e.classes.size(); ++c)
    enumerated.push_back(pair_key(static_cast<long>(e.classes[c].size()), e.class_traces[c]));
  for (int k = 0; k < g.num_classes(); ++k) model.push_back(pair_key(g.class_sizes[k], g.defining_row[k]));
  std::sort(enumerated.begin(), enumerated.end());
  std::sort(model.begin(), model.end());
  if (enumerated != model) return fail("multiset of (class size, trace) differs");

  if (g.class_reps) {
    std::vector<bool> used(e.classes.size(), false);
    for (int k = 0; k < g.num_classes(); ++k) {
      const CycloMatrix& rep = (*g.class_reps)[k];
      int found = -1;
      for (std::size_t c = 0; c < e.classes.size() && found < 0; ++c) {
        for (int idx : e.classes[c]) {
          if (e.elements[idx] == rep) {
            found = static_cast<int>(c);
            break;
          }
        }
      }
      if (found < 0) return fail("class representative " + std::to_string(k) + " is not in the closure");
      if (used[found]) return fail("class representatives " + std::to_string(k) + " share a conjugacy class");
      used[found] = true;
      if (static_cast<long>(e.classes[found].size()) != g.class_sizes[k])
        return fail("class " + std::to_string(k) + " has size " + std::to_string(e.classes[found].size()));
    }
  }
  return r;
}

}  // namespace cgs
