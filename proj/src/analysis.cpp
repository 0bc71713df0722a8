#include "cgseries/analysis.hpp"

namespace cgs {

GroupAnalysis::GroupAnalysis(GroupModel g) : g_(std::move(g)), dims_(g_.irrep_dims()) {}

const ClassKernels& GroupAnalysis::kernels() {
  if (!kernels_) kernels_ = class_kernels(g_);
  return *kernels_;
}

const SeriesMatrix& GroupAnalysis::series(SeriesKind kind, Sign sign) {
  const auto key = std::make_pair(static_cast<int>(kind), static_cast<int>(sign));
  auto it = series_.find(key);
  if (it == series_.end())
    it = series_.emplace(key, class_function_matrix(g_, kernel_values(kernels(), kind, sign))).first;
  return it->second;
}

const CycloMatrix& GroupAnalysis::irrep_cg(int i) {
  auto it = irrep_cg_.find(i);
  if (it == irrep_cg_.end()) it = irrep_cg_.emplace(i, cg_matrix(g_, g_.char_table.row(i))).first;
  return it->second;
}

const CycloMatrix& GroupAnalysis::defining_cg() {
  if (!defining_cg_) defining_cg_ = cg_matrix(g_, g_.defining_row);
  return *defining_cg_;
}

bool GroupAnalysis::free_action() {
  if (!free_) free_ = is_free_action(g_);
  return *free_;
}

const CMData& GroupAnalysis::cm() {
  if (!cm_) cm_ = std::make_unique<CMData>(cm_data(*this));
  return *cm_;
}

}  // namespace cgs
