#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "supercong/report.hpp"

namespace supercong {

enum class Command { list, verify, identities, series, selftest };

struct RunConfig {
  Command command = Command::list;
  std::string cases = "*";
  u64 p_min = 5;
  u64 p_max = 100;
  std::optional<int> exponent;
  int jobs = 1;
  std::uint64_t seed = 0;
  std::string report_path;
  ReportFormat format = ReportFormat::json;
  bool conjectures_advisory = false;
  bool inject_failure = false;
  // identities
  std::string families = "*";
  std::int64_t max_n = 200;
  bool include_printed = false;
  // series
  int digits = 25;
  // selftest
  int samples = 50;
};

/// "a:b" inclusive. std::invalid_argument unless 5 <= a <= b.
std::pair<u64, u64> parse_prime_range(const std::string& text);

/// Exit codes: 0 all executed checks passed, 1 a check failed, 2 usage or
/// internal error. Output goes to `out`, diagnostics to `err`.
int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int parse_and_dispatch(int argc, const char* const* argv);

/// Runs an already-parsed configuration.
int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace supercong
