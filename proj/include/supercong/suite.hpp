#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "supercong/modular.hpp"

namespace supercong {

inline constexpr const char* kVersion = "0.1.0";

enum class Status { theorem, corollary, remark, conjecture };
std::string to_string(Status s);

enum class Capability { quadratic_form, euler_numbers, bernoulli, sampling, exact_path };
std::string to_string(Capability c);

/// What an evaluator sees for one (case, prime) item.
struct CaseContext {
  u64 p = 0;
  int exponent = 2;
  std::uint64_t seed = 0;
  std::string case_id;
};

/// One congruence claimed by a case. Multi-part cases return several.
struct Claim {
  Residue lhs;
  Residue rhs;
};

struct Evaluation {
  std::vector<Claim> claims;
  std::string note;  // set by cases that test an alternative reading
};

struct CongruenceCase {
  std::string id;
  Status status = Status::theorem;
  int exponent = 2;
  std::string statement;  // human-readable congruence
  std::string note;       // known discrepancies with the printed source
  std::vector<Capability> needs;
  /// Reason to skip p, or nullopt if the case applies. p > 3 is checked by
  /// the runner before this is called.
  std::function<std::optional<std::string>(u64 p)> skip_reason;
  std::function<Evaluation(const CaseContext&)> evaluate;
};

/// Immutable registry, ids unique and sorted.
const std::vector<CongruenceCase>& registry();
const CongruenceCase* find_case(const std::string& id);

struct CaseResult {
  std::string case_id;
  u64 p = 0;
  int exp = 0;
  std::string lhs;  // residues as least nonnegative decimals, ';' between claims
  std::string rhs;
  bool pass = false;
  std::optional<std::string> skipped_reason;
  std::optional<std::string> error;
  std::optional<std::string> note;

  bool skipped() const { return skipped_reason.has_value(); }
  friend bool operator==(const CaseResult&, const CaseResult&) = default;
};

/// Evaluates one case at one prime. Errors from the evaluator are caught and
/// returned as failing results with `error` set.
CaseResult evaluate_case(const CongruenceCase& c, u64 p, std::uint64_t seed,
                         std::optional<int> exponent_override = std::nullopt);

struct RunOptions {
  std::vector<std::string> case_globs{"*"};
  std::vector<Status> statuses;  // empty = all
  u64 p_min = 5;
  u64 p_max = 100;
  std::optional<int> exponent_override;
  int jobs = 1;
  std::uint64_t seed = 0;
  bool inject_failure = false;  // flips the first evaluated comparison
};

struct Summary {
  std::size_t total = 0, passed = 0, failed = 0, skipped = 0;
};

struct Report {
  std::vector<CaseResult> results;  // sorted by (case id, p)
  std::uint64_t seed = 0;
  std::string version = kVersion;
  bool exploratory = false;

  Summary summary() const;
  bool all_passed() const { return summary().failed == 0; }
  friend bool operator==(const Report&, const Report&) = default;
};

/// Comma-separated globs; a case matches if any glob does.
std::vector<std::string> split_globs(const std::string& text);
bool matches_any(const std::string& id, const std::vector<std::string>& globs);

/// Every (selected case, prime) pair in [p_min, p_max]. jobs > 1 spreads the
/// items over OpenMP threads; the result is the same for any jobs value.
/// std::invalid_argument if p_min < 5, p_max < p_min or jobs < 1.
Report run_suite(const RunOptions& opt);

}  // namespace supercong
