// Report serialization. JSON and CSV are machine formats with parsers that
// round-trip every field exactly; the table format is for terminals and adds
// the pohlig/traceback median ratio per instance.

#ifndef DLOGFP_TOOLS_REPORT_HPP
#define DLOGFP_TOOLS_REPORT_HPP

#include <string>
#include <vector>

#include "bench.hpp"

namespace dlogfp_cli {

enum class ReportFormat { table, json, csv };

/// Maps "table" / "json" / "csv"; throws UsageError otherwise.
ReportFormat parse_format(const std::string& name);

std::string render_table(const BenchReport& report);
std::string render_json(const BenchReport& report);
std::string render_csv(const BenchReport& report);
std::string render_report(const BenchReport& report, ReportFormat format);

/// Inverse of render_json. Throws UsageError on malformed input.
BenchReport parse_json_report(const std::string& text);

/// Inverse of render_csv for the record rows (CSV carries no suite or
/// environment fields). Throws UsageError on malformed input.
std::vector<BenchRecord> parse_csv_records(const std::string& text);

} // namespace dlogfp_cli

#endif
