#pragma once

#include <string>
#include <vector>

namespace btmf {

struct CriterionResult {
  int id = 0;
  std::string suite;
  std::string name;
  bool passed = false;
  std::string expected;
  std::string observed;
  double seconds = 0.0;
  std::vector<std::string> details;  // first failures, if any
};

struct VerifyReport {
  std::string suite;
  std::vector<CriterionResult> results;
  bool passed() const;
};

// weyl, norms, vdp, coeff, oracle, all
const std::vector<std::string>& verify_suites();
// Throws InvalidArgument for an unknown suite.
VerifyReport run_verify(const std::string& suite);
// Runs one criterion by id (1..14); throws IndexOutOfRange.
CriterionResult run_criterion(int id);

}  // namespace btmf
