#pragma once

#include <string>

namespace census {

/// Result of an exhaustive verification: pass, or the first counterexample.
struct CheckOutcome {
  bool passed = true;
  std::string counterexample;

  static CheckOutcome pass() { return {}; }
  static CheckOutcome fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return passed; }
};

}  // namespace census
