#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "acphase/check_report.hpp"

namespace acphase::cli {

inline constexpr const char* kReportSchema = "acphase.report/1";

using Table = std::vector<std::vector<std::string>>;

struct RunReport {
    std::string schema = kReportSchema;
    std::string command;
    std::map<std::string, std::string> parameters;
    std::vector<CheckReport> suites;
    std::map<std::string, Table> tables;

    bool passed() const;
    std::size_t record_count() const;

    friend bool operator==(const RunReport& a, const RunReport& b);
};

nlohmann::json to_json(const RunReport& r);
/// Throws ConfigError on a missing field or a schema tag other than kReportSchema.
RunReport run_report_from_json(const nlohmann::json& j);

/// Header and table lines start with '#'; every other line is one record:
/// status, suite, name, measured, expected, tolerance separated by " | ",
/// followed by the detail on fail and skipped records.
std::string to_text(const RunReport& r);

void write_report(const RunReport& r, const std::string& path, const std::string& format);
RunReport read_report(const std::string& path);

}  // namespace acphase::cli
