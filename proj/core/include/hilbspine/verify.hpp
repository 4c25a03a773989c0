#pragma once

#include <string>
#include <vector>

namespace hilbspine {

// Outcome of one acceptance criterion of the verification suite.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;  // counts on success, the first failure site otherwise
  double seconds = 0.0;
};

// Run acceptance criterion 1..10. Exceptions from the checked code are
// caught and reported as failures; unknown ids throw input_error.
CriterionResult run_criterion(int id);

// All ten criteria, in order.
std::vector<CriterionResult> run_all_criteria();

// "PASS  3  universal family ... (12.3s)" — the fixed one-line report format.
std::string to_string(const CriterionResult& r);

}  // namespace hilbspine
