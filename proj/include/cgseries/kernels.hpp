#pragma once

#include <string>
#include <vector>

#include "cgseries/group_model.hpp"
#include "cgseries/ratq.hpp"

namespace cgs {

// S: symmetric powers, A: exterior powers, T: tensor powers, P: Adams operations.
enum class SeriesKind { S, A, T, P };
// Evaluate the generating series at q (Plus) or at -q (Minus).
enum class Sign { Plus, Minus };

std::string kind_name(SeriesKind k, Sign s);  // "S(q)", "A(-q)", ...
SeriesKind parse_kind(const std::string& text);
Sign parse_sign(const std::string& text);

// Per-class data of the defining representation.
struct ClassKernels {
  int dim = 0;
  std::vector<QPoly> charpoly;  // c_k(q) = det(E - q R(g_k))
  std::vector<Cyclo> traces;

  // Class function of the requested series at class k:
  //   A(q) = c(-q), S(q) = 1/c(q), T(q) = 1/(1 - q tr), P(q) = (d c - q c') / c
  RatQ kernel(int k, SeriesKind kind, Sign sign) const;
  // det(E + t R(g_k)) / det(E - q R(g_k)) for a scalar t.
  RatQ supersymmetric(int k, const Cyclo& t) const;
  // det(E - R(g_k))
  Cyclo det_at_one(int k) const { return charpoly[k].evaluate(Cyclo(1)); }
};

// From class representatives (Newton's identities on traces of powers) or,
// when only the character is known and d = 2, c(q) = 1 - tr q + q^2.
ClassKernels class_kernels(const GroupModel& g);

}  // namespace cgs
