#include "acphase/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "acphase/dirac.hpp"
#include "acphase/error.hpp"
#include "acphase/kemmer.hpp"
#include "acphase/proca_bridge.hpp"

namespace acphase::cli {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

// Runs one suite; an exception becomes a single failing record.
CheckReport guarded(const std::string& suite, const std::function<CheckReport()>& fn) {
    try {
        CheckReport r = fn();
        if (r.suite.empty()) r.suite = suite;
        return r;
    } catch (const std::exception& e) {
        CheckReport r{suite, {}};
        r.add({suite, CheckStatus::fail, "error", "completed", "", e.what()});
        return r;
    }
}

CheckRecord tolerance_record(std::string name, double measured, double expected, double tol, std::string detail = {}) {
    CheckRecord r;
    r.name = std::move(name);
    r.status = std::abs(measured - expected) <= tol ? CheckStatus::pass : CheckStatus::fail;
    r.measured = fmt(measured);
    r.expected = fmt(expected);
    r.tolerance = fmt(tol);
    r.detail = std::move(detail);
    return r;
}

CheckRecord skipped(std::string name, std::string why) {
    return {std::move(name), CheckStatus::skipped, "", "", "", std::move(why)};
}

}  // namespace

Rational TransportSampler::rational() {
    const long long num = static_cast<long long>(draw(21)) - 10;
    const long long den = 1 + static_cast<long long>(draw(4));
    return Rational(num, den);
}

ExactScalar TransportSampler::mass() {
    const Rational r(1 + static_cast<long long>(draw(4)), 1 + static_cast<long long>(draw(3)));
    return ExactScalar(r * r);
}

CheckReport transport_suite(std::uint64_t seed, int samples) {
    const KemmerAlgebra alg = build_betas();
    const ProjectionOperators ops = build_projections(alg);
    TransportSampler rng(seed);
    CheckReport rep{"interaction transport", {}};
    for (int k = 0; k < samples; ++k) {
        std::array<std::array<ExactScalar, 4>, 4> F;
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = a + 1; b < 4; ++b) {
                F[a][b] = ExactScalar(rng.rational());
                F[b][a] = -F[a][b];
            }
        ExactVector phi(KemmerAlgebra::dim);
        for (auto& c : phi) c = rng.scalar();
        const ExactScalar mu(rng.rational());
        const ExactScalar m = rng.mass();
        const CheckReport one = check_interaction_transport(alg, ops, F, phi, mu, m);
        CheckRecord r;
        r.name = "transport sample " + std::to_string(k);
        r.status = one.passed() ? CheckStatus::pass : CheckStatus::fail;
        r.measured = std::to_string(one.count(CheckStatus::pass)) + "/4 components equal";
        r.expected = "4/4 components equal";
        r.tolerance = "exact";
        r.detail = "mu=" + mu.to_string() + " m=" + m.to_string();
        rep.add(std::move(r));
    }
    return rep;
}

RunReport cmd_verify_algebra(const AlgebraOptions& opts) {
    RunReport out;
    out.command = "verify-algebra";
    out.parameters["seed"] = std::to_string(opts.seed);
    out.parameters["transport_samples"] = std::to_string(opts.transport_samples);
    out.parameters["perturb_beta"] = opts.perturb_beta ? "true" : "false";

    const DiracAlgebra dirac = build_dirac();
    out.suites.push_back(guarded("clifford", [&] { return check_clifford(dirac); }));
    out.suites.push_back(guarded("phase commutation (spin 1/2)", [&] { return check_phase_commutation_spinhalf(dirac); }));
    out.suites.push_back(guarded("phase operator (spin 1/2)", [&] { return check_phase_operator_spinhalf(dirac); }));

    KemmerAlgebra alg = build_betas();
    if (opts.perturb_beta) alg.beta[1](0, 9) = 0;
    out.suites.push_back(guarded("kemmer ring", [&] { return check_ring(alg.beta); }));
    out.suites.push_back(guarded("ring relation on gamma matrices", [&] {
        CheckReport r{"ring relation on gamma matrices", {}};
        const CheckReport g = check_ring(dirac.gamma);
        r.add_exact("three-term ring fails on the Dirac gammas", !g.passed(),
                    std::to_string(g.count(CheckStatus::fail)) + " of 64 triples fail", "fails");
        return r;
    }));

    std::optional<SpinOperators> spin;
    std::optional<ProjectionOperators> proj;
    out.suites.push_back(guarded("kemmer spin operators", [&] {
        spin = build_spin_operators(alg);
        out.parameters["b"] = spin->b.to_string();
        return check_spin_operators(alg, *spin);
    }));
    out.suites.push_back(guarded("xi_3 commutators", [&] {
        if (!spin) throw Error("spin operators unavailable");
        return check_xi_commutators(alg, *spin);
    }));
    out.suites.push_back(guarded("operator identities", [&] {
        if (!spin) throw Error("spin operators unavailable");
        return check_operator_identity_one(alg, *spin);
    }));
    out.suites.push_back(guarded("projection identities", [&] {
        proj = build_projections(alg);
        return check_projection_identities(alg, *proj);
    }));
    out.suites.push_back(guarded("spin correspondence", [&] {
        if (!spin || !proj) throw Error("spin operators or projections unavailable");
        return check_spin_correspondence(alg, *spin, *proj);
    }));
    out.suites.push_back(guarded("eigencolumn structure", [&] {
        if (!proj) throw Error("projections unavailable");
        CheckReport r = check_eigencolumn_structure(alg, *proj, ExactScalar::fraction(9, 4), 1);
        r.append(check_eigencolumn_structure(alg, *proj, ExactScalar::fraction(9, 4), -1));
        return r;
    }));
    out.suites.push_back(
        guarded("interaction transport", [&] { return transport_suite(opts.seed, opts.transport_samples); }));
    if (proj) {
        try {
            out.tables["component_layout"] = derive_component_layout(*proj).table();
        } catch (const std::exception&) {
        }
    }
    return out;
}

void apply_overrides(Scenario& sc, const PhaseOverrides& o) {
    if (o.tol) {
        if (!(*o.tol > 0.0) || !std::isfinite(*o.tol)) throw ConfigError("--tol", "tolerance must be positive");
        sc.tol = *o.tol;
    }
    if (o.seed) sc.seed = *o.seed;
    if (o.grid_h) {
        if (!(*o.grid_h > 0.0) || !std::isfinite(*o.grid_h)) throw ConfigError("--grid-h", "must be positive");
        sc.grid.h = *o.grid_h;
    }
}

RunReport cmd_verify_phase(const Scenario& sc) {
    RunReport out;
    out.command = "verify-phase";
    out.parameters["scenario"] = sc.name;
    out.parameters["spin"] = to_string(sc.spin);
    out.parameters["s"] = std::to_string(sc.s);
    out.parameters["mu"] = fmt(sc.mu);
    out.parameters["seed"] = std::to_string(sc.seed);
    out.parameters["tol"] = fmt(sc.tol);
    out.parameters["grid_h"] = fmt(sc.grid.h);
    out.parameters["grid_n"] = std::to_string(sc.grid.n);
    if (sc.field_kind == FieldKind::line_charge) out.parameters["lambda"] = fmt(sc.lambda);

    const FieldConfig field = sc.field();
    const LoopPath path = sc.path.build();
    const double quad_tol = sc.tol * 1e-2;
    const PhaseAnsatz ansatz{sc.spin, sc.s, sc.mu, field};

    out.suites.push_back(guarded("loop phase", [&] {
        field.require_ac_configuration(path.vertices());
        CheckReport r{"loop phase", {}};
        const double measured = measured_loop_phase(ansatz, path, quad_tol);
        double predicted = 0.0;
        int winding = 0;
        if (const auto axis = field.axis()) {
            winding = path.winding_number(*axis);
            predicted = winding * predicted_phase(sc.spin, sc.mu, sc.lambda, sc.s);
        }
        r.add(tolerance_record("loop phase spin " + to_string(sc.spin) + " s=" + std::to_string(sc.s), measured,
                               predicted, sc.tol, "winding " + std::to_string(winding)));
        if (const auto axis = field.axis()) {
            const GaussCheckResult g = gauss_check(field, path, quad_tol);
            r.add(tolerance_record("enclosed flux", g.flux, g.enclosed_charge, sc.tol));
        }
        return r;
    }));

    out.suites.push_back(guarded("spin ratio", [&] {
        CheckReport r{"spin ratio", {}};
        const auto axis = field.axis();
        if (!axis || sc.lambda == 0.0 || path.winding_number(*axis) == 0) {
            r.add(skipped("phase ratio spin 1 / spin 1/2", "path does not enclose a charge"));
            return r;
        }
        const SpinRatioResult res = spin_ratio_experiment(sc.mu, sc.lambda, path, quad_tol, *axis);
        r.add(tolerance_record("phase ratio spin 1 / spin 1/2", res.ratio, 2.0, sc.tol,
                               "spin 1/2 phase " + fmt(res.phase_half) + ", spin 1 phase " + fmt(res.phase_one)));
        return r;
    }));

    auto run = [&](const PhaseAnsatz& a) {
        std::vector<PhaseReport> reps;
        if (a.spin == Spin::half) {
            reps.push_back(verify_ansatz_dirac(a, sc.grid, sc.wave));
        } else {
            reps.push_back(verify_ansatz_kemmer(a, sc.grid, sc.wave));
            reps.push_back(verify_ansatz_proca(a, sc.grid, sc.wave));
        }
        return reps;
    };
    if (sc.spin == Spin::one && sc.s == 0) {
        CheckReport r{"phase ansatz", {}};
        r.add(skipped("phase ansatz residuals", "s3 = 0 states carry no phase"));
        out.suites.push_back(std::move(r));
    } else {
        const std::string suite = sc.spin == Spin::half ? "dirac-pauli phase ansatz" : "kemmer/proca phase ansatz";
        out.suites.push_back(guarded(suite, [&] {
            CheckReport r{suite, {}};
            for (const auto& rep : run(ansatz)) r.append(rep.to_check_report());
            return r;
        }));
        out.suites.push_back(guarded("detuned control", [&] {
            PhaseAnsatz detuned = ansatz;
            detuned.coupling_scale = 0.9;
            CheckReport r{"detuned control", {}};
            for (const auto& rep : run(detuned)) {
                bool order_fails = false;
                std::string orders;
                for (const auto& p : rep.residuals) {
                    order_fails = order_fails || !p.pass;
                    orders += (orders.empty() ? "" : ", ") + p.equation + " " + fmt(p.order);
                }
                r.add_exact(rep.name + " rejects A' scaled by 0.9", order_fails, orders, "rejected");
            }
            return r;
        }));
    }

    out.suites.push_back(guarded("interaction transport", [&] { return transport_suite(sc.seed, sc.transport_samples); }));
    return out;
}

std::string report_directory() {
    if (const char* d = std::getenv("ACPHASE_REPORT_DIR"); d && *d) return d;
    return ".";
}

std::string last_report_path() { return report_directory() + "/last_report.json"; }

}  // namespace acphase::cli
