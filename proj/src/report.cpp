#include "supercong/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "supercong/errors.hpp"

namespace supercong {

using nlohmann::ordered_json;

std::string report_to_json(const Report& r) {
  ordered_json results = ordered_json::array();
  for (const auto& x : r.results) {
    ordered_json row;
    row["case"] = x.case_id;
    row["p"] = x.p;
    row["exp"] = x.exp;
    row["lhs"] = x.lhs;
    row["rhs"] = x.rhs;
    row["pass"] = x.pass;
    if (x.skipped_reason) row["skipped_reason"] = *x.skipped_reason;
    if (x.error) row["error"] = *x.error;
    if (x.note) row["note"] = *x.note;
    results.push_back(std::move(row));
  }
  const Summary s = r.summary();
  ordered_json summary;
  summary["total"] = s.total;
  summary["passed"] = s.passed;
  summary["failed"] = s.failed;
  summary["skipped"] = s.skipped;
  summary["seed"] = r.seed;
  summary["version"] = r.version;
  if (r.exploratory) summary["exploratory"] = true;

  ordered_json doc;
  doc["results"] = std::move(results);
  doc["summary"] = std::move(summary);
  return doc.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  try {
    const auto doc = ordered_json::parse(text);
    Report r;
    for (const auto& row : doc.at("results")) {
      CaseResult x;
      x.case_id = row.at("case").get<std::string>();
      x.p = row.at("p").get<u64>();
      x.exp = row.at("exp").get<int>();
      x.lhs = row.at("lhs").get<std::string>();
      x.rhs = row.at("rhs").get<std::string>();
      x.pass = row.at("pass").get<bool>();
      if (row.contains("skipped_reason")) x.skipped_reason = row["skipped_reason"].get<std::string>();
      if (row.contains("error")) x.error = row["error"].get<std::string>();
      if (row.contains("note")) x.note = row["note"].get<std::string>();
      r.results.push_back(std::move(x));
    }
    const auto& s = doc.at("summary");
    r.seed = s.at("seed").get<std::uint64_t>();
    r.version = s.at("version").get<std::string>();
    r.exploratory = s.value("exploratory", false);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed report: ") + e.what());
  }
}

std::string report_to_table(const Report& r) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"case", "p", "exp", "lhs", "rhs", "result", "detail"});
  for (const auto& x : r.results) {
    std::string result = x.skipped() ? "skip" : x.pass ? "pass" : x.error ? "error" : "FAIL";
    std::string detail = x.skipped_reason.value_or(x.error.value_or(x.note.value_or("")));
    rows.push_back({x.case_id, std::to_string(x.p), std::to_string(x.exp), x.lhs, x.rhs, result, detail});
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows) {
    // the detail column is left ragged
    for (std::size_t i = 0; i + 1 < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  const Summary s = r.summary();
  out << "total " << s.total << ", passed " << s.passed << ", failed " << s.failed << ", skipped " << s.skipped
      << " (seed " << r.seed << ", version " << r.version << (r.exploratory ? ", exploratory" : "") << ")\n";
  return out.str();
}

std::string format_report(const Report& r, ReportFormat f) {
  return f == ReportFormat::json ? report_to_json(r) : report_to_table(r);
}

void write_report(const Report& r, const std::string& path, ReportFormat f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << format_report(r, f);
  out.close();
  if (!out) throw IoError("failed writing " + path);
}

Report read_report(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return report_from_json(buf.str());
}

}  // namespace supercong
