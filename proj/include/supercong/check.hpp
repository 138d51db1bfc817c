#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace supercong {

/// Tally for one named property checked over many inputs. Only the first
/// counterexample is kept; later failures just bump the count.
struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::string first_failure;

  /// `describe` is only invoked on the first failure.
  template <class Describe>
  void record(bool ok, Describe&& describe) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = describe();
  }
  bool passed() const { return failed == 0; }
};

struct SuiteReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed()) return false;
    }
    return true;
  }
  /// Merges a report for the same checks (matched by name) into this one.
  void absorb(const SuiteReport& other);
};

std::string to_string(const SuiteReport& r);

}  // namespace supercong
