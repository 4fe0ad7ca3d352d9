#pragma once

#include <string>
#include <vector>

namespace abtk {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
};

// Acceptance suite.  `fast` skips the PDE-backed criteria (7 and 8).
// `scratch_dir` receives the determinism-check outputs.
std::vector<CriterionResult> run_acceptance(bool fast, int threads,
                                            const std::string& scratch_dir);

std::string acceptance_report_json(const std::vector<CriterionResult>& results);

}  // namespace abtk
