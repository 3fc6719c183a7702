#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace twinlab {

/// One named pass/fail check with an optional human-readable detail.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckResult> results;

  void add(std::string name, bool passed, std::string detail = {}) {
    results.push_back({std::move(name), passed, std::move(detail)});
  }
  void append(const CheckReport& other) { results.insert(results.end(), other.results.begin(), other.results.end()); }

  bool ok() const {
    for (const auto& r : results) {
      if (!r.passed) return false;
    }
    return true;
  }
  std::size_t failures() const {
    std::size_t count = 0;
    for (const auto& r : results) count += r.passed ? 0 : 1;
    return count;
  }
};

}  // namespace twinlab
