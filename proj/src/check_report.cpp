#include "acphase/check_report.hpp"

#include <algorithm>

#include "acphase/error.hpp"

namespace acphase {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "fail";
}

CheckStatus check_status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "skipped") return CheckStatus::skipped;
    throw ConfigError("status", "unknown check status '" + s + "'");
}

void CheckReport::add_exact(std::string name, bool holds, std::string detail, std::string expected) {
    records.push_back({std::move(name), holds ? CheckStatus::pass : CheckStatus::fail,
                       holds ? expected : "violated", expected, "exact", std::move(detail)});
}

void CheckReport::append(const CheckReport& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
}

bool CheckReport::passed() const {
    return std::none_of(records.begin(), records.end(),
                        [](const CheckRecord& r) { return r.status == CheckStatus::fail; });
}

std::size_t CheckReport::count(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

const CheckRecord* CheckReport::find(const std::string& name) const {
    auto it = std::find_if(records.begin(), records.end(), [&](const CheckRecord& r) { return r.name == name; });
    return it == records.end() ? nullptr : &*it;
}

}  // namespace acphase
