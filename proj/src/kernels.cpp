#include "cgseries/kernels.hpp"

#include "cgseries/errors.hpp"

namespace cgs {

std::string kind_name(SeriesKind k, Sign s) {
  std::string base;
  switch (k) {
    case SeriesKind::S: base = "S"; break;
    case SeriesKind::A: base = "A"; break;
    case SeriesKind::T: base = "T"; break;
    case SeriesKind::P: base = "P"; break;
  }
  return base + (s == Sign::Plus ? "(q)" : "(-q)");
}

SeriesKind parse_kind(const std::string& text) {
  if (text == "S" || text == "s") return SeriesKind::S;
  if (text == "A" || text == "a") return SeriesKind::A;
  if (text == "T" || text == "t") return SeriesKind::T;
  if (text == "P" || text == "p") return SeriesKind::P;
  throw DomainError("unknown series kind: " + text);
}

Sign parse_sign(const std::string& text) {
  if (text == "q" || text == "+q" || text == "+" || text == "plus") return Sign::Plus;
  if (text == "-q" || text == "-" || text == "minus") return Sign::Minus;
  throw DomainError("unknown sign: " + text);
}

RatQ ClassKernels::kernel(int k, SeriesKind kind, Sign sign) const {
  const QPoly& c = charpoly[k];
  RatQ out;
  switch (kind) {
    case SeriesKind::A: out = RatQ(c.negate_variable()); break;
    case SeriesKind::S: out = RatQ(QPoly(Cyclo(1)), c); break;
    case SeriesKind::T: out = RatQ(QPoly(Cyclo(1)), QPoly(std::vector<Cyclo>{Cyclo(1), -traces[k]})); break;
    case SeriesKind::P: out = RatQ(c.scaled(Cyclo(dim)) - c.derivative().shifted(1), c); break;
  }
  return sign == Sign::Plus ? out : out.negate_variable();
}

RatQ ClassKernels::supersymmetric(int k, const Cyclo& t) const {
  const Cyclo top = charpoly[k].evaluate(-t);
  return RatQ(QPoly(top), charpoly[k]);
}

namespace {

// det(E - qM) from traces of powers via Newton's identities.
QPoly charpoly_from_matrix(const CycloMatrix& m) {
  const int d = static_cast<int>(m.rows());
  std::vector<Cyclo> p(d + 1);
  CycloMatrix power = CycloMatrix::identity(d);
  for (int j = 1; j <= d; ++j) {
    power = power * m;
    Cyclo tr;
    for (int a = 0; a < d; ++a) tr += power(a, a);
    p[j] = tr;
  }
  std::vector<Cyclo> e(d + 1);
  e[0] = Cyclo(1);
  for (int k = 1; k <= d; ++k) {
    Cyclo acc;
    for (int i = 1; i <= k; ++i) {
      const Cyclo term = e[k - i] * p[i];
      if (i % 2 == 1) acc += term;
      else acc -= term;
    }
    e[k] = acc / Cyclo(k);
  }
  std::vector<Cyclo> coeffs(d + 1);
  for (int k = 0; k <= d; ++k) coeffs[k] = k % 2 == 0 ? e[k] : -e[k];
  return QPoly(std::move(coeffs));
}

}  // namespace

ClassKernels class_kernels(const GroupModel& g) {
  ClassKernels out;
  out.dim = g.dim;
  out.traces = g.defining_row;
  if (g.class_reps) {
    for (const auto& m : *g.class_reps) out.charpoly.push_back(charpoly_from_matrix(m));
    return out;
  }
  if (g.dim == 2) {
    for (const auto& tr : g.defining_row) out.charpoly.push_back(QPoly(std::vector<Cyclo>{Cyclo(1), -tr, Cyclo(1)}));
    return out;
  }
  throw MissingRepresentationData(g.name + ": class representatives are required for dim_defining != 2");
}

}  // namespace cgs
