#pragma once

// The full invariant suite behind `phitile verify-all`.

#include <string>
#include <vector>

namespace phitile {

struct VerifyOptions {
  int window = 6;   // AP/EP exponent window [-window, window]
  int months = 12;  // rabbit layouts checked for overlap/containment through this month
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

std::vector<CriterionResult> verify_all(const VerifyOptions& opts = {});

}  // namespace phitile
