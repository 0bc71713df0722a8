#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cgseries/calibration.hpp"

namespace cgs {

enum class VerifyLevel { Fast, Full };
VerifyLevel parse_level(const std::string& text);

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = false;
  bool ran = true;
  std::string detail;            // first failure, or a summary
  std::vector<std::string> info;  // informational lines that do not affect pass
  double seconds = 0;
};

// Groups of the McKay checks: cyclic m = 2..12, binary dihedral n = 2..8,
// 2T, 2O, 2I (Full); cyclic 2..6, bd 2..4, 2T (Fast).
std::vector<std::string> mckay_groups(VerifyLevel level);

int criterion_count();
std::string criterion_title(int number);
CriterionResult run_criterion(int number, VerifyLevel level);

// Runs 1..14 in order; a failure of 7 marks the rest as not run.
std::vector<CriterionResult> run_all(VerifyLevel level, const std::function<void(const CriterionResult&)>& on_result = {});

struct CalibrationReport {
  std::vector<CalibrationConstant> fitted;  // from cyclic m = 2..6
  bool fit_matches_frozen = false;
  bool stable = false;  // frozen constants exact on every checked group
  std::string first_failure;
};

CalibrationReport calibration_report(const std::vector<std::string>& groups);

std::string describe(const CalibrationConstant& c);

}  // namespace cgs
