#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgseries/cyclo.hpp"
#include "cgseries/matrix.hpp"

namespace cgs {

using CycloMatrix = Matrix<Cyclo>;

enum class Family { Cyclic, BinaryDihedral, Tetrahedral, Octahedral, Icosahedral, Symmetric, Imported };

std::string family_name(Family f);

// Conjugacy-class data, character table and defining representation of a
// finite group. Row 0 of the table is the trivial character, column 0 the
// identity class. For the SU(2) families the irreducibles are listed in the
// node order of the matching affine Dynkin diagram (see dynkin.hpp).
struct GroupModel {
  std::string name;
  Family family = Family::Imported;
  int param = 0;  // m, n or d for the parametric families
  long order = 0;
  int dim = 0;  // dimension d of the defining representation
  long conductor = 1;
  std::vector<long> class_sizes;
  CycloMatrix char_table;  // rows irreducibles, columns classes
  std::vector<Cyclo> defining_row;
  std::optional<std::vector<CycloMatrix>> class_reps;
  std::vector<std::string> irrep_labels;
  std::vector<std::string> class_labels;

  int num_classes() const { return static_cast<int>(class_sizes.size()); }
  // d_i = chi_i(1); throws when a degree is not a positive integer.
  std::vector<long> irrep_dims() const;
  // Multiplicities a_i with R = sum a_i R_i.
  std::vector<long> defining_index() const;
  bool is_su2_family() const;
};

// Same mathematical content (ignores name, family and labels).
bool same_model(const GroupModel& a, const GroupModel& b);

struct ValidationCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const;
  const ValidationCheck* first_failure() const;
};

ValidationReport validate_group(const GroupModel& g);
// Throws a ValidationError subtype describing the first failed invariant.
void require_valid(const GroupModel& g);

GroupModel make_cyclic_su2(int m);
GroupModel make_binary_dihedral(int n);
GroupModel make_binary_tetrahedral();
GroupModel make_binary_octahedral();
GroupModel make_binary_icosahedral();
// Guarded by CGSERIES_SYM_MAX (default 8).
GroupModel make_symmetric(int d);
int symmetric_degree_limit();

// "cyclic:5", "bd:3", "2T", "2O", "2I", "sym:4".
GroupModel make_builtin(const std::string& selector);

// Generating matrices of the defining representation for a built-in family.
std::vector<CycloMatrix> standard_generators(const GroupModel& g);

// det(E - R(g_k)) for every class, from class representatives or, for d = 2,
// from the trace assuming det R(g) = 1.
std::vector<Cyclo> det_identity_minus(const GroupModel& g);
bool is_free_action(const GroupModel& g);

}  // namespace cgs
