#pragma once

#include <string>
#include <vector>

namespace bgw {

// One line of a check suite: hard items must pass, conjecture items are
// informational unless the caller opts into strict mode.
struct CheckResult {
  std::string name;
  bool conjecture = false;
  bool passed = false;
  std::string detail;
};

using CheckReport = std::vector<CheckResult>;

}  // namespace bgw
