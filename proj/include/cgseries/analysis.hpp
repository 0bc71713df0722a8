#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>

#include "cgseries/cg_engine.hpp"
#include "cgseries/cm_data.hpp"
#include "cgseries/group_model.hpp"
#include "cgseries/kernels.hpp"

namespace cgs {

// Lazily computed, cached derived data of one group. Not thread-safe; the
// parallelism lives inside the individual computations.
class GroupAnalysis {
 public:
  explicit GroupAnalysis(GroupModel g);

  const GroupModel& group() const { return g_; }
  const std::vector<long>& dims() const { return dims_; }
  const ClassKernels& kernels();
  const SeriesMatrix& series(SeriesKind kind, Sign sign);
  // M[R_i], the integer CG matrix of the i-th irreducible.
  const CycloMatrix& irrep_cg(int i);
  // M[R] of the defining representation.
  const CycloMatrix& defining_cg();
  bool free_action();
  // CM data for the default degrees.
  const CMData& cm();

 private:
  GroupModel g_;
  std::vector<long> dims_;
  std::optional<ClassKernels> kernels_;
  std::map<std::pair<int, int>, SeriesMatrix> series_;
  std::map<int, CycloMatrix> irrep_cg_;
  std::optional<CycloMatrix> defining_cg_;
  std::optional<bool> free_;
  std::unique_ptr<CMData> cm_;
};

}  // namespace cgs
