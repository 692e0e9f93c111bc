#pragma once

#include <string>
#include <vector>

namespace acphase {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string& s);

/// One verified statement. For exact identities `measured` holds a short
/// rendering of the discrepancy (usually "0") and `tolerance` is "exact".
struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string measured;
    std::string expected;
    std::string tolerance;
    std::string detail;

    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckRecord> records;

    void add(CheckRecord r) { records.push_back(std::move(r)); }
    /// Exact check: passes iff `holds`.
    void add_exact(std::string name, bool holds, std::string detail = {},
                   std::string expected = "holds");
    void append(const CheckReport& other);

    bool passed() const;
    std::size_t count(CheckStatus s) const;
    const CheckRecord* find(const std::string& name) const;
};

}  // namespace acphase
