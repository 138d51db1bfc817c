#pragma once

#include <string>

#include "supercong/suite.hpp"

namespace supercong {

enum class ReportFormat { json, table };

/// Canonical JSON: {"results": [...], "summary": {...}} with a fixed field
/// order, residues as decimal strings, two-space indent, trailing newline.
std::string report_to_json(const Report& r);
/// Inverse of report_to_json. IoError on malformed input.
Report report_from_json(const std::string& text);

/// Aligned columns, one row per result, summary footer.
std::string report_to_table(const Report& r);

std::string format_report(const Report& r, ReportFormat f);
/// IoError if the file cannot be written.
void write_report(const Report& r, const std::string& path, ReportFormat f);
Report read_report(const std::string& path);

}  // namespace supercong
