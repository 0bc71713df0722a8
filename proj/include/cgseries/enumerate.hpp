#pragma once

#include <string>
#include <vector>

#include "cgseries/group_model.hpp"

namespace cgs {

struct EnumeratedGroup {
  std::vector<CycloMatrix> elements;  // elements[0] is the identity
  std::vector<std::vector<int>> classes;  // indices into elements; class of the identity first
  std::vector<Cyclo> class_traces;

  long order() const { return static_cast<long>(elements.size()); }
  std::vector<long> class_sizes() const;
};

// Closure of the generators under multiplication, split into conjugacy
// classes. Throws DomainError when more than `cap` elements appear.
EnumeratedGroup enumerate_from_generators(const std::vector<CycloMatrix>& gens, long cap);

struct EnumerationComparison {
  bool pass = true;
  std::string detail;
};

// Order, class count, the multiset of (class size, trace) pairs and, when the
// model has class representatives, membership of each one in a class of the
// recorded size and trace.
EnumerationComparison compare_with_model(const EnumeratedGroup& e, const GroupModel& g);

}  // namespace cgs
