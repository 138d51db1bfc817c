#include "supercong/check.hpp"

#include <sstream>

namespace supercong {

void SuiteReport::absorb(const SuiteReport& other) {
  for (const auto& c : other.checks) {
    CheckResult* mine = nullptr;
    for (auto& d : checks) {
      if (d.name == c.name) mine = &d;
    }
    if (mine == nullptr) {
      checks.push_back(c);
      continue;
    }
    if (mine->failed == 0 && c.failed != 0) mine->first_failure = c.first_failure;
    mine->checked += c.checked;
    mine->failed += c.failed;
    mine->skipped += c.skipped;
  }
}

std::string to_string(const SuiteReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << (c.passed() ? "PASS " : "FAIL ") << c.name << ": " << c.checked << " checked, " << c.failed
        << " failed";
    if (c.skipped != 0) out << ", " << c.skipped << " skipped";
    if (!c.passed()) out << " (first: " << c.first_failure << ")";
    out << '\n';
  }
  return out.str();
}

}  // namespace supercong
