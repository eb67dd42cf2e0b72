#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <iomanip>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace dlogfp_cli {

namespace {

constexpr const char* kCsvHeader = "p,g,h,method,trials,mean_us,median_us,min_us,x,verified";

// Shortest representation that parses back to the exact same double.
std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string format_fixed(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    return buf;
}

double parse_double_field(const std::string& text, const char* field) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw UsageError(std::string("bad ") + field + " value: " + text);
    }
    return value;
}

std::uint64_t parse_u64_field(const std::string& text, const char* field) {
    std::uint64_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw UsageError(std::string("bad ") + field + " value: " + text);
    }
    return value;
}

} // namespace

ReportFormat parse_format(const std::string& name) {
    if (name == "table") {
        return ReportFormat::table;
    }
    if (name == "json") {
        return ReportFormat::json;
    }
    if (name == "csv") {
        return ReportFormat::csv;
    }
    throw UsageError("unknown format \"" + name + "\" (expected table, json, or csv)");
}

std::string render_table(const BenchReport& report) {
    const std::vector<std::string> header = {
        "p", "g", "h", "method", "trials",
        "mean_us", "median_us", "min_us", "x", "verified",
    };

    std::vector<std::vector<std::string>> rows;
    rows.reserve(report.records.size());
    for (const BenchRecord& r : report.records) {
        rows.push_back({
            std::to_string(r.p), std::to_string(r.g), std::to_string(r.h),
            r.method, std::to_string(r.trials),
            format_fixed(r.mean_us), format_fixed(r.median_us), format_fixed(r.min_us),
            std::to_string(r.x), r.verified ? "yes" : "NO",
        });
    }

    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : rows) {
            width[c] = std::max(width[c], row[c].size());
        }
    }

    std::ostringstream out;
    out << "suite: " << report.suite << '\n';
    out << "environment: " << report.environment << '\n';
    out << '\n';
    auto emit_row = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c == 0 ? "" : "  ") << std::setw(static_cast<int>(width[c])) << row[c];
        }
        out << '\n';
    };
    emit_row(header);
    for (const auto& row : rows) {
        emit_row(row);
    }

    // Per-instance speed ratio, the headline comparison between the two
    // methods. Keyed by (p, g, h) so repeated instances stay separate rows.
    std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>,
             std::map<std::string, double>> medians;
    for (const BenchRecord& r : report.records) {
        medians[{r.p, r.g, r.h}][r.method] = r.median_us;
    }
    std::ostringstream ratios;
    for (const auto& [key, by_method] : medians) {
        const auto tb = by_method.find("traceback");
        const auto ph = by_method.find("pohlig");
        if (tb == by_method.end() || ph == by_method.end() || tb->second <= 0.0) {
            continue;
        }
        ratios << "  p=" << std::get<0>(key) << ": "
               << format_fixed(ph->second / tb->second) << '\n';
    }
    if (const std::string lines = ratios.str(); !lines.empty()) {
        out << '\n' << "median pohlig/traceback ratio:" << '\n' << lines;
    }
    return out.str();
}

std::string render_json(const BenchReport& report) {
    nlohmann::ordered_json doc;
    doc["suite"] = report.suite;
    doc["environment"] = report.environment;
    doc["records"] = nlohmann::ordered_json::array();
    for (const BenchRecord& r : report.records) {
        nlohmann::ordered_json rec;
        rec["p"] = r.p;
        rec["g"] = r.g;
        rec["h"] = r.h;
        rec["method"] = r.method;
        rec["trials"] = r.trials;
        rec["mean_us"] = r.mean_us;
        rec["median_us"] = r.median_us;
        rec["min_us"] = r.min_us;
        rec["x"] = r.x;
        rec["verified"] = r.verified;
        doc["records"].push_back(std::move(rec));
    }
    return doc.dump(2) + "\n";
}

std::string render_csv(const BenchReport& report) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const BenchRecord& r : report.records) {
        out << r.p << ',' << r.g << ',' << r.h << ',' << r.method << ','
            << r.trials << ',' << format_double(r.mean_us) << ','
            << format_double(r.median_us) << ',' << format_double(r.min_us) << ','
            << r.x << ',' << (r.verified ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string render_report(const BenchReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::table: return render_table(report);
        case ReportFormat::json: return render_json(report);
        case ReportFormat::csv: return render_csv(report);
    }
    throw UsageError("unhandled report format");
}

BenchReport parse_json_report(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("report is not valid JSON: ") + e.what());
    }
    try {
        BenchReport report;
        report.suite = doc.at("suite").get<std::string>();
        report.environment = doc.at("environment").get<std::string>();
        for (const auto& rec : doc.at("records")) {
            BenchRecord r;
            r.p = rec.at("p").get<std::uint64_t>();
            r.g = rec.at("g").get<std::uint64_t>();
            r.h = rec.at("h").get<std::uint64_t>();
            r.method = rec.at("method").get<std::string>();
            r.trials = rec.at("trials").get<std::uint64_t>();
            r.mean_us = rec.at("mean_us").get<double>();
            r.median_us = rec.at("median_us").get<double>();
            r.min_us = rec.at("min_us").get<double>();
            r.x = rec.at("x").get<std::uint64_t>();
            r.verified = rec.at("verified").get<bool>();
            report.records.push_back(std::move(r));
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("report JSON has unexpected shape: ") + e.what());
    }
}

std::vector<BenchRecord> parse_csv_records(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw UsageError("CSV header mismatch");
    }

    std::vector<BenchRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::string field;
        std::istringstream row(line);
        while (std::getline(row, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() != 10) {
            throw UsageError("CSV row has " + std::to_string(fields.size()) + " fields, expected 10");
        }
        BenchRecord r;
        r.p = parse_u64_field(fields[0], "p");
        r.g = parse_u64_field(fields[1], "g");
        r.h = parse_u64_field(fields[2], "h");
        r.method = fields[3];
        r.trials = parse_u64_field(fields[4], "trials");
        r.mean_us = parse_double_field(fields[5], "mean_us");
        r.median_us = parse_double_field(fields[6], "median_us");
        r.min_us = parse_double_field(fields[7], "min_us");
        r.x = parse_u64_field(fields[8], "x");
        if (fields[9] == "true") {
            r.verified = true;
        } else if (fields[9] == "false") {
            r.verified = false;
        } else {
            throw UsageError("bad verified value: " + fields[9]);
        }
        records.push_back(std::move(r));
    }
    return records;
}

} // namespace dlogfp_cli
