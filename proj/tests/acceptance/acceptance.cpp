#include <CLI11.hpp>
#include <iomanip>
#include <iostream>

#include "cgseries/verify.hpp"

using namespace cgs;

namespace {

// Every criterion is an exact equality test; there is no numeric tolerance.
constexpr const char* kTolerance = "exact";

void print(const CriterionResult& r) {
  std::cout << (r.ran ? (r.pass ? "PASS" : "FAIL") : "SKIP") << " criterion " << r.number << ": " << r.title
            << " (tol=" << kTolerance << ", " << std::fixed << std::setprecision(2) << r.seconds << "s)";
  if (!r.detail.empty()) std::cout << " | " << r.detail;
  std::cout << "\n";
  for (const auto& line : r.info) std::cout << "  info: " << line << "\n";
  std::cout.flush();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria, one line per criterion"};
  int only = 0;
  std::string level = "full";
  app.add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, criterion_count()));
  app.add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  CLI11_PARSE(app, argc, argv);

  const VerifyLevel lv = parse_level(level);
  if (only > 0) {
    const CriterionResult r = run_criterion(only, lv);
    print(r);
    return r.pass ? 0 : 1;
  }
  int failures = 0;
  run_all(lv, [&](const CriterionResult& r) {
    print(r);
    if (!r.pass) ++failures;
  });
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
