#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "supercong/cli.hpp"
#include "supercong/errors.hpp"

using namespace supercong;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "supercong");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = parse_and_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("supercong_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("prime range parsing") {
  CHECK(parse_prime_range("5:1000") == std::pair<u64, u64>{5, 1000});
  CHECK(parse_prime_range("7:7") == std::pair<u64, u64>{7, 7});
  CHECK_THROWS_AS(parse_prime_range("3:4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_prime_range("10:5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_prime_range("5-10"), std::invalid_argument);
  CHECK_THROWS_AS(parse_prime_range("5:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_prime_range(":9"), std::invalid_argument);
}

TEST_CASE("exit codes") {
  CHECK(run({"verify", "--primes", "3:4"}).code == 2);
  CHECK(run({"verify", "--primes", "3:4"}).err.find("5 or above") != std::string::npos);
  CHECK(run({"verify", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "--jobs", "0"}).code == 2);
  CHECK(run({"verify", "--format", "xml"}).code == 2);

  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("THM-48") != std::string::npos);
  CHECK(help.out.find("CONJ-48-DUAL") != std::string::npos);

  CHECK(run({"list"}).code == 0);
  CHECK(run({"verify", "--cases", "THM-*", "--primes", "5:60", "--jobs", "2"}).code == 0);
  CHECK(run({"identities", "--max-n", "25"}).code == 0);
  CHECK(run({"series", "--digits", "10"}).code == 0);
  CHECK(run({"series", "--digits", "61"}).code == 2);
  CHECK(run({"selftest", "--p-max", "40", "--samples", "5"}).code == 0);
}

TEST_CASE("injected failures and the advisory flag") {
  CHECK(run({"verify", "--cases", "THM-M1", "--primes", "5:30", "--inject-failure"}).code == 1);
  CHECK(run({"verify", "--cases", "CONJ-S1", "--primes", "5:30", "--inject-failure"}).code == 1);
  CHECK(run({"verify", "--cases", "CONJ-S1", "--primes", "5:30", "--inject-failure", "--conjectures-advisory"})
            .code == 0);
  // advisory does not cover theorems
  CHECK(run({"verify", "--cases", "THM-M1", "--primes", "5:30", "--inject-failure", "--conjectures-advisory"})
            .code == 1);
}

TEST_CASE("report files") {
  const std::string path = temp_path("report.json");
  const Run r = run({"verify", "--cases", "THM-48,COR-X", "--primes", "5:13", "--report", path});
  CHECK(r.code == 0);
  const std::string bytes = slurp(path);
  CHECK(bytes.find(R"("case": "COR-X")") != std::string::npos);
  CHECK(bytes.find(R"x("skipped_reason": "p ≢ 1 (mod 3)")x") != std::string::npos);

  // round trip: parse, re-serialize, same bytes and same results
  const Report back = read_report(path);
  CHECK(report_to_json(back) == bytes);
  RunOptions o;
  o.case_globs = {"THM-48", "COR-X"};
  o.p_min = 5;
  o.p_max = 13;
  CHECK(back == run_suite(o));

  const std::string table = temp_path("report.txt");
  CHECK(run({"verify", "--cases", "THM-48", "--primes", "5:13", "--report", table, "--format", "table"}).code == 0);
  const std::string text = slurp(table);
  CHECK(text.rfind("case", 0) == 0);
  CHECK(text.find("total 4, passed 4, failed 0, skipped 0") != std::string::npos);

  CHECK(run({"verify", "--cases", "THM-48", "--primes", "5:7", "--report", "/nonexistent/dir/r.json"}).code == 2);
  std::remove(path.c_str());
  std::remove(table.c_str());
}

TEST_CASE("report JSON layout") {
  CaseResult x;
  x.case_id = "THM-48";
  x.p = 5;
  x.exp = 2;
  x.lhs = "0";
  x.rhs = "0";
  x.pass = true;
  Report r;
  r.results = {x};
  const std::string j = report_to_json(r);
  CHECK(j.find(R"("case": "THM-48",)") < j.find(R"("p": 5,)"));
  CHECK(j.find(R"("p": 5,)") < j.find(R"("exp": 2,)"));
  CHECK(j.find(R"("pass": true)") != std::string::npos);
  CHECK(j.find("skipped_reason") == std::string::npos);

  const Report empty;
  const std::string e = report_to_json(empty);
  CHECK(e.find(R"("total": 0)") != std::string::npos);
  CHECK(report_from_json(e) == empty);
  CHECK_THROWS_AS(report_from_json("{"), IoError);
  CHECK_THROWS_AS(report_from_json(R"({"results": []})"), IoError);
}

TEST_CASE("round trip keeps optional fields") {
  Report r;
  CaseResult a;
  a.case_id = "X";
  a.p = 7;
  a.exp = 2;
  a.skipped_reason = "why";
  CaseResult b;
  b.case_id = "Y";
  b.p = 11;
  b.exp = 3;
  b.error = "bad";
  b.note = "n";
  r.results = {a, b};
  r.seed = 99;
  r.exploratory = true;
  CHECK(report_from_json(report_to_json(r)) == r);
}
