#include "supercong/cli.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "supercong/errors.hpp"
#include "supercong/identities.hpp"
#include "supercong/padic_gamma.hpp"

namespace supercong {

std::pair<u64, u64> parse_prime_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("prime range must look like min:max, got " + text);
  u64 lo = 0, hi = 0;
  try {
    std::size_t used = 0;
    lo = std::stoull(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("");
    const std::string rest = text.substr(colon + 1);
    hi = std::stoull(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("prime range must look like min:max, got " + text);
  }
  if (lo < 5) throw std::invalid_argument("prime range must start at 5 or above (p > 3), got " + text);
  if (hi < lo) throw std::invalid_argument("prime range " + text + " is empty");
  return {lo, hi};
}

namespace {

std::string catalog() {
  std::ostringstream out;
  out << "Cases:\n";
  for (const auto& c : registry()) {
    out << "  " << std::left << std::setw(14) << c.id << std::setw(11) << to_string(c.status) << "mod p^"
        << c.exponent << "  " << c.statement << "\n";
  }
  return out.str();
}

int cmd_list(const RunConfig& cfg, std::ostream& out) {
  const auto globs = split_globs(cfg.cases);
  for (const auto& c : registry()) {
    if (!matches_any(c.id, globs)) continue;
    out << c.id << "  [" << to_string(c.status) << ", mod p^" << c.exponent;
    for (const auto cap : c.needs) out << ", " << to_string(cap);
    out << "]\n    " << c.statement << "\n";
    if (!c.note.empty()) out << "    note: " << c.note << "\n";
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  RunOptions opt;
  opt.case_globs = split_globs(cfg.cases);
  opt.p_min = cfg.p_min;
  opt.p_max = cfg.p_max;
  opt.exponent_override = cfg.exponent;
  opt.jobs = cfg.jobs;
  opt.seed = cfg.seed;
  opt.inject_failure = cfg.inject_failure;
  const Report rep = run_suite(opt);

  if (cfg.report_path.empty()) {
    out << format_report(rep, cfg.format);
  } else {
    write_report(rep, cfg.report_path, cfg.format);
    const Summary s = rep.summary();
    out << "total " << s.total << ", passed " << s.passed << ", failed " << s.failed << ", skipped " << s.skipped
        << "; report written to " << cfg.report_path << "\n";
  }

  std::size_t hard = 0;
  for (const auto& r : rep.results) {
    if (r.skipped() || r.pass) continue;
    const CongruenceCase* c = find_case(r.case_id);
    if (cfg.conjectures_advisory && c != nullptr && c->status == Status::conjecture) continue;
    ++hard;
  }
  return hard == 0 ? 0 : 1;
}

int cmd_identities(const RunConfig& cfg, std::ostream& out) {
  const auto globs = split_globs(cfg.families);
  bool ok = true;
  auto show = [&](const CheckResult& r, const std::string& kind) {
    out << (r.passed() ? "pass  " : "FAIL  ") << std::left << std::setw(22) << r.name << std::setw(12) << kind
        << r.checked << " checked";
    if (!r.passed()) out << ", " << r.failed << " failed; first: " << r.first_failure;
    out << "\n";
    ok = ok && r.passed();
  };
  std::size_t families = 0, recs = 0;
  for (const auto& f : identity_families()) {
    if (!matches_any(f.id, globs)) continue;
    show(verify_identity_family(f, cfg.max_n), "identity");
    if (!f.note.empty()) out << "      note: " << f.note << "\n";
    ++families;
  }
  for (const auto& r : recurrences()) {
    if (!matches_any(r.id, globs)) continue;
    show(verify_recurrence(r.id, cfg.max_n), "recurrence");
    ++recs;
  }
  if (matches_any("harmonic-1f0", globs)) {
    show(harmonic_sum_identity_check(std::min<std::int64_t>(cfg.max_n, 100), {}), "polynomial");
  }
  if (cfg.include_printed) {
    for (const auto& f : identity_printed_variants()) {
      const CheckResult r = verify_identity_family(f, cfg.max_n);
      out << (r.passed() ? "unexpected pass  " : "expected fail    ") << f.id << ": " << f.note;
      if (!r.passed()) out << " (first: " << r.first_failure << ")";
      out << "\n";
    }
  }
  out << families << " identities and " << recs << " recurrences checked up to n = " << cfg.max_n << ": "
      << (ok ? "all pass" : "FAILURES") << "\n";
  return ok ? 0 : 1;
}

int cmd_series(const RunConfig& cfg, std::ostream& out) {
  const NumericReport r = series_numeric_check(cfg.digits);
  out << "digits        " << r.digits << "\n"
      << "lhs           " << r.lhs << "\n"
      << "rhs           " << r.rhs << "\n"
      << "|lhs - rhs|   " << r.difference << "\n"
      << "error bound   " << r.error_bound << "\n"
      << "lhs terms     " << r.lhs_terms << "\n"
      << "rhs pairs     " << r.rhs_pairs << " + " << r.em_terms << " Euler-Maclaurin corrections\n"
      << "certificate   " << r.ratio_certificate << "\n"
      << (r.certified ? "certified" : "NOT certified") << ": |LHS - RHS| < 10^-" << r.digits << "\n";
  return r.certified ? 0 : 1;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
  SuiteReport total;
  std::size_t primes = 0;
  for (u64 p = 5; p <= cfg.p_max; ++p) {
    if (!is_prime(p)) continue;
    total.absorb(gamma_identity_suite(p, 2, cfg.samples, cfg.seed));
    ++primes;
  }
  out << "p-adic Gamma identities over " << primes << " primes 5 <= p <= " << cfg.p_max << ", " << cfg.samples
      << " samples each\n"
      << to_string(total);
  return total.passed() ? 0 : 1;
}

}  // namespace

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::list: return cmd_list(cfg, out);
      case Command::verify: return cmd_verify(cfg, out);
      case Command::identities: return cmd_identities(cfg, out);
      case Command::series: return cmd_series(cfg, out);
      case Command::selftest: return cmd_selftest(cfg, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const PrecisionUnreachable& e) {
    err << "error: " << e.what() << "\n";
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
  }
  return 2;
}

int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify supercongruences, p-adic Gamma identities and terminating hypergeometric identities.",
               "supercong"};
  app.set_version_flag("--version", std::string(kVersion));
  app.footer(catalog());
  app.require_subcommand(1);

  RunConfig cfg;
  std::string primes = "5:100";
  std::string format = "json";

  auto* list = app.add_subcommand("list", "List the registered congruence cases");
  list->add_option("--cases", cfg.cases, "Comma-separated id globs");

  auto* verify = app.add_subcommand("verify", "Check congruence cases over a prime range");
  verify->add_option("--cases", cfg.cases, "Comma-separated id globs")->capture_default_str();
  verify->add_option("--primes", primes, "Inclusive prime range min:max, min >= 5")->capture_default_str();
  verify->add_option("--exp", cfg.exponent, "Compare modulo p^N instead of each case's exponent (exploratory)")
      ->check(CLI::Range(1, 12));
  verify->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--seed", cfg.seed, "Seed for sampled cases")->capture_default_str();
  verify->add_option("--report", cfg.report_path, "Write the report to this file");
  verify->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  verify->add_flag("--conjectures-advisory", cfg.conjectures_advisory,
                   "Failures of conjecture cases do not affect the exit code");
  verify->add_flag("--inject-failure", cfg.inject_failure)->group("");

  auto* ids = app.add_subcommand("identities", "Verify the terminating identities and their recurrences");
  ids->add_option("--families", cfg.families, "Comma-separated id globs")->capture_default_str();
  ids->add_option("--max-n", cfg.max_n, "Largest n")->check(CLI::Range(1, 2000))->capture_default_str();
  ids->add_flag("--include-printed", cfg.include_printed, "Also report known-wrong printed readings");

  auto* series = app.add_subcommand("series", "Numerically certify the infinite series identity");
  series->add_option("--digits", cfg.digits, "Decimal digits, at most 60")->capture_default_str();

  auto* self = app.add_subcommand("selftest", "Randomized p-adic Gamma identity checks");
  self->add_option("--p-max", cfg.p_max, "Largest prime")->check(CLI::Range(5, 100000));
  self->add_option("--samples", cfg.samples, "Samples per prime")->check(CLI::PositiveNumber);
  self->add_option("--seed", cfg.seed, "Sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*list) {
      cfg.command = Command::list;
    } else if (*verify) {
      cfg.command = Command::verify;
      std::tie(cfg.p_min, cfg.p_max) = parse_prime_range(primes);
      cfg.format = format == "table" ? ReportFormat::table : ReportFormat::json;
    } else if (*ids) {
      cfg.command = Command::identities;
    } else if (*series) {
      cfg.command = Command::series;
    } else {
      cfg.command = Command::selftest;
      if (self->count("--p-max") == 0) cfg.p_max = 500;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return dispatch(cfg, out, err);
}

int parse_and_dispatch(int argc, const char* const* argv) {
  return parse_and_dispatch(argc, argv, std::cout, std::cerr);
}

}  // namespace supercong
