// Runs the ten headline checks and prints one PASS/FAIL line per check.
// Exit status 0 iff all of them pass.

#include <iostream>

#include "hilbspine/verify.hpp"

int main() {
  bool all = true;
  for (int id = 1; id <= 10; ++id) {
    const hilbspine::CriterionResult r = hilbspine::run_criterion(id);
    std::cout << hilbspine::to_string(r) << std::endl;
    all = all && r.pass;
  }
  std::cout << (all ? "ACCEPTED: 10/10" : "REJECTED: at least one criterion failed")
            << std::endl;
  return all ? 0 : 1;
}
