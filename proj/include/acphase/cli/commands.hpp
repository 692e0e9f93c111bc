#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "acphase/cli/run_report.hpp"
#include "acphase/cli/scenario.hpp"

namespace acphase::cli {

struct AlgebraOptions {
    std::uint64_t seed = 1;
    int transport_samples = 100;
    /// Test hook: zero one entry of beta^1 before the checks run.
    bool perturb_beta = false;
};

/// All exact identity suites. Exceptions inside a suite become fail records.
RunReport cmd_verify_algebra(const AlgebraOptions& opts = {});

struct PhaseOverrides {
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
    std::optional<double> grid_h;
};

void apply_overrides(Scenario& sc, const PhaseOverrides& o);

/// Loop phase, spin ratio, ansatz residuals, detuned control and seeded
/// interaction-transport samples for one scenario. AC-condition violations
/// become fail records carrying the engine's message.
RunReport cmd_verify_phase(const Scenario& sc);

/// Exact Gaussian-rational samples for the transport check: integer parts in
/// [-10, 10] over denominators 1..4, drawn as `engine() % n` from std::mt19937_64.
class TransportSampler {
public:
    explicit TransportSampler(std::uint64_t seed) : engine_(seed) {}
    Rational rational();
    ExactScalar scalar() { return {rational(), rational()}; }
    /// Squares of rationals, so the exact sqrt(m) exists.
    ExactScalar mass();

private:
    std::uint64_t draw(std::uint64_t n) { return engine_() % n; }
    std::mt19937_64 engine_;
};

/// Runs `samples` random (F, phi, mu, m) transport checks; one record per sample.
CheckReport transport_suite(std::uint64_t seed, int samples);

/// Directory for last_report.json: $ACPHASE_REPORT_DIR or the working directory.
std::string report_directory();
std::string last_report_path();

}  // namespace acphase::cli
