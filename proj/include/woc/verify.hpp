#pragma once

// Cross-engine and bijection checks behind `woc verify`.

#include "woc/conditions.hpp"

#include <functional>
#include <string>
#include <vector>

namespace woc::verify {

enum class Scope { Quick, All };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first discrepancy, or a short summary
};

struct Hooks {
  conditions::FormulaHooks formula;
  treesim::Options sim;
  /// Called after each check completes.
  std::function<void(const CheckResult&)> on_result;
};

std::vector<CheckResult> run(Scope scope, const Hooks& hooks = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace woc::verify
