#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "acphase/cli/commands.hpp"
#include "acphase/error.hpp"
#include "acphase/proca_bridge.hpp"

using namespace acphase;
using namespace acphase::cli;

namespace {

Scenario parse(const std::string& text) {
    std::istringstream in(text);
    return parse_scenario(in);
}

std::string key_of(const std::string& text) {
    try {
        parse(text);
    } catch (const ConfigError& e) {
        return e.key();
    }
    return "<no error>";
}

const CheckReport* suite(const RunReport& r, const std::string& name) {
    for (const auto& s : r.suites)
        if (s.suite == name) return &s;
    return nullptr;
}

std::string scenario_path(const std::string& name) { return std::string(ACPHASE_SOURCE_DIR) + "/scenarios/" + name; }

}  // namespace

TEST_CASE("scenario defaults and parsing") {
    const Scenario d = parse("");
    CHECK(d.spin == Spin::one);
    CHECK(d.s == 1);
    CHECK(d.tol == 1e-6);
    CHECK(d.field_kind == FieldKind::line_charge);

    const Scenario s = parse(
        "; comment\n[scenario]\nname = x\nspin = half\ns = -1\nmu = 0.25\nseed = 42\n"
        "[field]\nkind = uniform\nE = 0.1 0.2 0\n"
        "[path]\nshape = polygon\nvertices = 0 0 1 0 1 1\n"
        "[grid]\ncenter = 0 0\nh = 0.02\nn = 11\n"
        "[wave]\nmass = 2\np1 = 0\np2 = 0.5\n");
    CHECK(s.name == "x");
    CHECK(s.spin == Spin::half);
    CHECK(s.s == -1);
    CHECK(s.mu == 0.25);
    CHECK(s.seed == 42);
    CHECK(s.field_kind == FieldKind::uniform_e);
    CHECK(s.E[1] == 0.2);
    CHECK(s.path.vertices.size() == 3);
    CHECK(s.path.build().closed());
    CHECK(s.grid.n == 11);
    CHECK(s.wave.mass == 2.0);
    CHECK(s.field().kind() == FieldKind::uniform_e);
}

TEST_CASE("scenario errors name the key") {
    CHECK(key_of("[scenario]\ncolour = red\n") == "scenario.colour");
    CHECK(key_of("[nonsense]\nx = 1\n") == "nonsense");
    CHECK(key_of("[scenario]\nmu = abc\n") == "scenario.mu");
    CHECK(key_of("[scenario]\nmu = inf\n") == "scenario.mu");
    CHECK(key_of("[scenario]\nspin = two\n") == "scenario.spin");
    CHECK(key_of("[scenario]\nspin = half\ns = 0\n") == "scenario.s");
    CHECK(key_of("[scenario]\ntol = -1\n") == "scenario.tol");
    CHECK(key_of("[field]\nkind = dipole\n") == "field.kind");
    CHECK(key_of("[field]\nE = 1 2\n") == "field.E");
    CHECK(key_of("[path]\nradius = 0\n") == "path.radius");
    CHECK(key_of("[path]\nshape = polygon\nvertices = 0 0 1\n") == "path.vertices");
    CHECK(key_of("[path]\nshape = rectangle\nlower_left = 1 1\nupper_right = 0 2\n") == "path.upper_right");
    CHECK(key_of("[grid]\nn = 3\n") == "grid.n");
    CHECK(key_of("[grid]\nh = 0\n") == "grid.h");
    CHECK(key_of("[wave]\nmass = -1\n") == "wave.mass");
    CHECK(key_of("[scenario]\nseed = 1.5\n") == "scenario.seed");
    CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.cfg"), ConfigError);
}

TEST_CASE("overrides") {
    Scenario s = parse("");
    apply_overrides(s, {1e-8, 9, 0.02});
    CHECK(s.tol == 1e-8);
    CHECK(s.seed == 9);
    CHECK(s.grid.h == 0.02);
    CHECK_THROWS_AS(apply_overrides(s, {0.0, std::nullopt, std::nullopt}), ConfigError);
    CHECK_THROWS_AS(apply_overrides(s, {std::nullopt, std::nullopt, -1.0}), ConfigError);
}

TEST_CASE("transport sampler is reproducible") {
    TransportSampler a(5), b(5), c(6);
    bool differs = false;
    for (int k = 0; k < 20; ++k) {
        const Rational x = a.rational();
        CHECK(x == b.rational());
        differs = differs || x != c.rational();
        const ExactScalar m = a.mass();
        CHECK(m == b.mass());
        c.mass();
        CHECK(m.re() > 0);
        CHECK_NOTHROW(exact_sqrt(m.re()));
    }
    CHECK(differs);
}

TEST_CASE("verify-algebra") {
    const RunReport r = cmd_verify_algebra({1, 100, false});
    CHECK(r.passed());
    CHECK(r.parameters.at("b") == "2i");
    CHECK(suite(r, "kemmer ring")->records.size() == 64);
    CHECK(suite(r, "interaction transport")->records.size() == 100);
    CHECK(suite(r, "projection identities")->records.size() == 80);
    CHECK(r.tables.at("component_layout").size() == 11);
    // Same seed, same report.
    CHECK(r == cmd_verify_algebra({1, 100, false}));

    const RunReport bad = cmd_verify_algebra({1, 3, true});
    CHECK_FALSE(bad.passed());
    CHECK(suite(bad, "kemmer ring")->count(CheckStatus::fail) > 0);
    CHECK(suite(bad, "clifford")->passed());
}

TEST_CASE("report serialization") {
    const RunReport r = cmd_verify_algebra({3, 4, false});
    const nlohmann::json j = to_json(r);
    CHECK(j.at("schema") == kReportSchema);
    CHECK(run_report_from_json(j) == r);

    nlohmann::json wrong = j;
    wrong["schema"] = "acphase.report/0";
    CHECK_THROWS_AS(run_report_from_json(wrong), ConfigError);
    nlohmann::json missing = j;
    missing.erase("suites");
    CHECK_THROWS_AS(run_report_from_json(missing), ConfigError);

    // One text line per record, every other line a comment.
    const std::string text = to_text(r);
    std::istringstream lines(text);
    std::string line;
    std::size_t records = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("#", 0) == 0) continue;
        ++records;
        CHECK((line.rfind("pass | ", 0) == 0 || line.rfind("fail | ", 0) == 0 || line.rfind("skipped | ", 0) == 0));
    }
    CHECK(records == r.record_count());

    const auto dir = std::filesystem::temp_directory_path() / "acphase_test_cli";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "r.json").string();
    write_report(r, path, "json");
    CHECK(read_report(path) == r);
    CHECK_THROWS_AS(write_report(r, path, "xml"), ConfigError);
    CHECK_THROWS_AS(write_report(r, "/nonexistent/dir/r.json", "json"), ConfigError);
    std::ofstream(dir / "junk.json") << "{ not json";
    CHECK_THROWS_AS(read_report((dir / "junk.json").string()), ConfigError);
}

TEST_CASE("verify-phase on the bundled scenarios") {
    const RunReport one = cmd_verify_phase(load_scenario(scenario_path("ac_line_charge_spin1.cfg")));
    CHECK(one.passed());
    const CheckRecord& phase = suite(one, "loop phase")->records.at(0);
    CHECK(std::stod(phase.measured) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(suite(one, "spin ratio")->passed());
    CHECK(suite(one, "detuned control")->passed());

    const RunReport zero = cmd_verify_phase(load_scenario(scenario_path("ac_winding_zero.cfg")));
    CHECK(zero.passed());
    CHECK(suite(zero, "spin ratio")->records.at(0).status == CheckStatus::skipped);

    const RunReport mag = cmd_verify_phase(load_scenario(scenario_path("non_ac_magnetic.cfg")));
    CHECK_FALSE(mag.passed());
    const CheckRecord& err = suite(mag, "loop phase")->records.at(0);
    CHECK(err.status == CheckStatus::fail);
    CHECK(err.detail.find("B != 0") != std::string::npos);
}

TEST_CASE("report directory") {
    setenv("ACPHASE_REPORT_DIR", "/tmp/somewhere", 1);
    CHECK(last_report_path() == "/tmp/somewhere/last_report.json");
    unsetenv("ACPHASE_REPORT_DIR");
    CHECK(report_directory() == ".");
}
