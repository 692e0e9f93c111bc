#include "acphase/cli/run_report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "acphase/error.hpp"

namespace acphase::cli {

using nlohmann::json;

bool RunReport::passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const CheckReport& s) { return s.passed(); });
}

std::size_t RunReport::record_count() const {
    std::size_t n = 0;
    for (const auto& s : suites) n += s.records.size();
    return n;
}

bool operator==(const RunReport& a, const RunReport& b) {
    if (a.schema != b.schema || a.command != b.command || a.parameters != b.parameters || a.tables != b.tables ||
        a.suites.size() != b.suites.size())
        return false;
    for (std::size_t i = 0; i < a.suites.size(); ++i)
        if (a.suites[i].suite != b.suites[i].suite || a.suites[i].records != b.suites[i].records) return false;
    return true;
}

json to_json(const RunReport& r) {
    json suites = json::array();
    for (const auto& s : r.suites) {
        json records = json::array();
        for (const auto& rec : s.records)
            records.push_back({{"name", rec.name},
                               {"status", to_string(rec.status)},
                               {"measured", rec.measured},
                               {"expected", rec.expected},
                               {"tolerance", rec.tolerance},
                               {"detail", rec.detail}});
        suites.push_back({{"suite", s.suite},
                          {"status", s.passed() ? "pass" : "fail"},
                          {"records", std::move(records)}});
    }
    return {{"schema", r.schema},
            {"command", r.command},
            {"status", r.passed() ? "pass" : "fail"},
            {"record_count", r.record_count()},
            {"parameters", r.parameters},
            {"suites", std::move(suites)},
            {"tables", r.tables}};
}

RunReport run_report_from_json(const json& j) {
    try {
        RunReport r;
        r.schema = j.at("schema").get<std::string>();
        if (r.schema != kReportSchema)
            throw ConfigError("schema", "unsupported report schema '" + r.schema + "', expected " + kReportSchema);
        r.command = j.at("command").get<std::string>();
        r.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
        r.tables = j.at("tables").get<std::map<std::string, Table>>();
        for (const auto& s : j.at("suites")) {
            CheckReport rep;
            rep.suite = s.at("suite").get<std::string>();
            for (const auto& rec : s.at("records"))
                rep.add({rec.at("name").get<std::string>(), check_status_from_string(rec.at("status").get<std::string>()),
                         rec.at("measured").get<std::string>(), rec.at("expected").get<std::string>(),
                         rec.at("tolerance").get<std::string>(), rec.at("detail").get<std::string>()});
            r.suites.push_back(std::move(rep));
        }
        return r;
    } catch (const json::exception& e) {
        throw ConfigError("report", e.what());
    }
}

std::string to_text(const RunReport& r) {
    std::ostringstream out;
    out << "# " << r.schema << " command=" << r.command << " status=" << (r.passed() ? "pass" : "fail")
        << " records=" << r.record_count() << '\n';
    for (const auto& [k, v] : r.parameters) out << "# parameter " << k << " = " << v << '\n';
    for (const auto& s : r.suites)
        for (const auto& rec : s.records)
            out << to_string(rec.status) << " | " << s.suite << " | " << rec.name << " | " << rec.measured << " | "
                << rec.expected << " | " << rec.tolerance << (rec.status == CheckStatus::pass ? "" : " | ")
                << (rec.status == CheckStatus::pass ? "" : rec.detail) << '\n';
    for (const auto& [name, rows] : r.tables) {
        out << "# table " << name << '\n';
        for (const auto& row : rows) {
            out << "#  ";
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " | " : "") << row[i];
            out << '\n';
        }
    }
    return out.str();
}

void write_report(const RunReport& r, const std::string& path, const std::string& format) {
    std::string body;
    if (format == "json") body = to_json(r).dump(2) + "\n";
    else if (format == "text") body = to_text(r);
    else throw ConfigError("format", "expected json or text, got '" + format + "'");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("out", "cannot write report to '" + path + "'");
    out << body;
    if (!out) throw ConfigError("out", "cannot write report to '" + path + "'");
}

RunReport read_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("in", "cannot read report '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError("in", "'" + path + "' is not a report: " + e.what());
    }
    return run_report_from_json(j);
}

}  // namespace acphase::cli
