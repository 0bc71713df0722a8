#include "cgseries/group_model.hpp"

#include <cstdlib>
#include <stdexcept>

#include "cgseries/errors.hpp"

namespace cgs {

std::string family_name(Family f) {
  switch (f) {
    case Family::Cyclic: return "cyclic";
    case Family::BinaryDihedral: return "binary-dihedral";
    case Family::Tetrahedral: return "binary-tetrahedral";
    case Family::Octahedral: return "binary-octahedral";
    case Family::Icosahedral: return "binary-icosahedral";
    case Family::Symmetric: return "symmetric";
    case Family::Imported: return "imported";
  }
  return "unknown";
}

std::vector<long> GroupModel::irrep_dims() const {
  std::vector<long> out;
  out.reserve(char_table.rows());
  for (std::size_t i = 0; i < char_table.rows(); ++i) {
    const Cyclo& v = char_table(i, 0);
    if (!v.is_integer() || v.rational_value() <= 0) throw ValidationError("irreducible degree is not a positive integer");
    out.push_back(v.rational_value().get_num().get_si());
  }
  return out;
}

namespace {

Cyclo inner(const GroupModel& g, const std::vector<Cyclo>& a, const std::vector<Cyclo>& b) {
  Cyclo acc;
  for (int k = 0; k < g.num_classes(); ++k) acc += Cyclo(g.class_sizes[k]) * a[k] * b[k].conj();
  return acc / Cyclo(g.order);
}

}  // namespace

std::vector<long> GroupModel::defining_index() const {
  std::vector<long> out;
  for (std::size_t i = 0; i < char_table.rows(); ++i) {
    const Cyclo m = inner(*this, defining_row, char_table.row(i));
    if (!m.is_integer() || m.rational_value() < 0)
      throw ValidationError("defining character is not a nonnegative integer combination of irreducibles");
    out.push_back(m.rational_value().get_num().get_si());
  }
  return out;
}

bool GroupModel::is_su2_family() const {
  switch (family) {
    case Family::Cyclic:
    case Family::BinaryDihedral:
    case Family::Tetrahedral:
    case Family::Octahedral:
    case Family::Icosahedral: return true;
    default: return false;
  }
}

bool same_model(const GroupModel& a, const GroupModel& b) {
  if (a.order != b.order || a.dim != b.dim || a.class_sizes != b.class_sizes) return false;
  if (a.char_table != b.char_table || a.defining_row != b.defining_row) return false;
  if (a.class_reps.has_value() != b.class_reps.has_value()) return false;
  return !a.class_reps || *a.class_reps == *b.class_reps;
}

bool ValidationReport::ok() const { return first_failure() == nullptr; }

const ValidationCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

ValidationReport validate_group(const GroupModel& g) {
  ValidationReport rep;
  auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
    rep.checks.push_back({name, pass, detail});
  };
  const std::size_t n = g.class_sizes.size();
  const bool shapes = n > 0 && g.char_table.rows() == n && g.char_table.cols() == n && g.defining_row.size() == n;
  add("shape", shapes,
      shapes ? "" : "class_sizes, char_table and defining_row must describe the same number of classes");
  if (!shapes) return rep;

  long size_sum = 0;
  for (long s : g.class_sizes) size_sum += s;
  add("class-sizes-sum", size_sum == g.order,
      "sum of class sizes " + std::to_string(size_sum) + " vs order " + std::to_string(g.order));
  add("identity-class", g.class_sizes[0] == 1, "class 0 must be the identity class of size 1");

  bool trivial = true;
  for (std::size_t k = 0; k < n; ++k) trivial = trivial && g.char_table(0, k) == Cyclo(1);
  add("trivial-row", trivial, "row 0 must be the trivial character");

  std::vector<long> dims;
  try {
    dims = g.irrep_dims();
    long sq = 0;
    for (long d : dims) sq += d * d;
    add("degree-squares", sq == g.order, "sum of squared degrees " + std::to_string(sq));
  } catch (const ValidationError& e) {
    add("degree-squares", false, e.what());
  }

  std::vector<std::vector<Cyclo>> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = g.char_table.row(i);
  std::string row_fail;
  for (std::size_t i = 0; i < n && row_fail.empty(); ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Cyclo v = inner(g, rows[i], rows[j]);
      if (v != Cyclo(i == j ? 1 : 0)) {
        row_fail = "rows " + std::to_string(i) + " and " + std::to_string(j) + " give " + v.to_string();
        break;
      }
    }
  }
  add("row-orthogonality", row_fail.empty(), row_fail);

  // |G| (chi^{-1})_j^i = |C_i| conj chi_j(g_i), checked as column sums.
  std::string col_fail;
  for (std::size_t k = 0; k < n && col_fail.empty(); ++k) {
    for (std::size_t l = k; l < n; ++l) {
      Cyclo acc;
      for (std::size_t i = 0; i < n; ++i) acc += g.char_table(i, k) * g.char_table(i, l).conj();
      const Cyclo expect = k == l ? Cyclo(Rational(g.order, g.class_sizes[k])) : Cyclo();
      if (acc != expect) {
        col_fail = "columns " + std::to_string(k) + " and " + std::to_string(l) + " give " + acc.to_string();
        break;
      }
    }
  }
  add("column-orthogonality", col_fail.empty(), col_fail);

  bool def_ok = g.defining_row[0] == Cyclo(g.dim);
  std::string def_detail = def_ok ? "" : "defining character at identity differs from dim_defining";
  if (def_ok) {
    try {
      g.defining_index();
    } catch (const ValidationError& e) {
      def_ok = false;
      def_detail = e.what();
    }
  }
  add("defining-character", def_ok, def_detail);

  if (g.class_reps) {
    const auto& reps = *g.class_reps;
    std::string fail;
    if (reps.size() != n) fail = "class_reps has " + std::to_string(reps.size()) + " entries";
    for (std::size_t k = 0; k < reps.size() && fail.empty(); ++k) {
      const auto& m = reps[k];
      if (m.rows() != static_cast<std::size_t>(g.dim) || m.cols() != static_cast<std::size_t>(g.dim)) {
        fail = "class representative " + std::to_string(k) + " has the wrong shape";
        break;
      }
      Cyclo tr;
      for (int a = 0; a < g.dim; ++a) tr += m(a, a);
      if (tr != g.defining_row[k]) fail = "trace of class representative " + std::to_string(k) + " is " + tr.to_string();
    }
    if (fail.empty() && reps[0] != CycloMatrix::identity(g.dim)) fail = "class representative 0 is not the identity";
    add("class-representatives", fail.empty(), fail);
  }
  return rep;
}

void require_valid(const GroupModel& g) {
  const ValidationReport rep = validate_group(g);
  const ValidationCheck* bad = rep.first_failure();
  if (!bad) return;
  const std::string msg = g.name + ": " + bad->name + " failed: " + bad->detail;
  if (bad->name == "row-orthogonality" || bad->name == "column-orthogonality") throw OrthogonalityError(msg);
  if (bad->name == "shape" || bad->name == "class-sizes-sum" || bad->name == "degree-squares")
    throw SizeMismatchError(msg);
  throw ValidationError(msg);
}

int symmetric_degree_limit() {
  if (const char* env = std::getenv("CGSERIES_SYM_MAX")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 8;
}

GroupModel make_builtin(const std::string& selector) {
  auto number_after = [&](std::size_t pos) {
    const std::string tail = selector.substr(pos);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tail, &used);
    } catch (const std::exception&) {
      throw DomainError("malformed group selector: " + selector);
    }
    if (used != tail.size()) throw DomainError("malformed group selector: " + selector);
    return v;
  };
  if (selector == "2T") return make_binary_tetrahedral();
  if (selector == "2O") return make_binary_octahedral();
  if (selector == "2I") return make_binary_icosahedral();
  if (selector.rfind("cyclic:", 0) == 0) return make_cyclic_su2(number_after(7));
  if (selector.rfind("bd:", 0) == 0) return make_binary_dihedral(number_after(3));
  if (selector.rfind("sym:", 0) == 0) return make_symmetric(number_after(4));
  throw DomainError("unknown group: " + selector);
}

std::vector<Cyclo> det_identity_minus(const GroupModel& g) {
  std::vector<Cyclo> out;
  out.reserve(g.class_sizes.size());
  if (g.class_reps) {
    const CycloMatrix e = CycloMatrix::identity(g.dim);
    for (const auto& m : *g.class_reps) out.push_back(determinant(e - m));
    return out;
  }
  if (g.dim == 2) {
    for (const auto& tr : g.defining_row) out.push_back(Cyclo(2) - tr);
    return out;
  }
  throw MissingRepresentationData(g.name + ": class representatives needed to evaluate det(E - R(g))");
}

bool is_free_action(const GroupModel& g) {
  const auto dets = det_identity_minus(g);
  for (std::size_t k = 1; k < dets.size(); ++k) {
    if (dets[k].is_zero()) return false;
  }
  return true;
}

}  // namespace cgs
