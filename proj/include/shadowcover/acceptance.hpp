#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shadowcover {

// One end-to-end acceptance check. A criterion passes only if its checks
// hold and it finishes within its time budget.
struct CriterionResult {
  int id = 0;
  std::string title;
  bool checks_ok = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;

  bool pass() const { return checks_ok && seconds <= budget_seconds; }
  // "criterion N: PASS|FAIL title (detail; 1.23 s of 60 s)"
  std::string line() const;
};

constexpr int kCriterionCount = 10;

// Throws std::out_of_range unless 1 <= id <= kCriterionCount.
CriterionResult run_criterion(int id);

// Runs every criterion in order, writing each line to `log` (if given) as
// soon as it finishes.
std::vector<CriterionResult> run_acceptance(std::ostream* log = nullptr);

}  // namespace shadowcover
