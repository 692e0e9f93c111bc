#include <doctest.h>

#include <random>

#include "acphase/proca_bridge.hpp"
#include "oracles.hpp"

using namespace acphase;

namespace {

const ExactScalar I = ExactScalar::i();
using ExactTensor = std::array<std::array<ExactScalar, 4>, 4>;

struct Fixture {
    KemmerAlgebra alg = build_betas();
    ProjectionOperators ops = build_projections(alg);
};

ExactFourMomentum momentum(long long e, long long p1, long long p2, long long m, long long den = 1) {
    return {{ExactScalar::fraction(e, den), ExactScalar::fraction(p1, den), ExactScalar::fraction(p2, den), 0},
            ExactScalar::fraction(m, den)};
}

ExactScalar kron(int a, int b) { return ExactScalar(a == b ? 1 : 0); }
ExactScalar eta(int a, int b) { return ExactScalar(metric(a, b)); }

}  // namespace

TEST_CASE("projection identities") {
    Fixture f;
    const CheckReport r = check_projection_identities(f.alg, f.ops);
    CHECK(r.records.size() == 16 + 64);
    CHECK(r.passed());
    for (int m = 0; m < 4; ++m) {
        CHECK(f.ops.U2[m][m].is_zero());
        // Support confined to the output row.
        for (std::size_t row = 0; row < 10; ++row)
            if (row != f.ops.output_row)
                for (std::size_t c = 0; c < 10; ++c) CHECK(f.ops.U[m](row, c).is_zero());
    }
}

TEST_CASE("Kronecker-delta reading of the second identity fails") {
    // U^m b^n b^s = delta^{ns} U^m - delta^{ms} U^n holds only where the
    // metric and the Kronecker delta agree, i.e. where no spatial index pair
    // meets a sign. Count the failures against the library's eta version.
    Fixture f;
    int kron_fail = 0, eta_fail = 0;
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            for (int s = 0; s < 4; ++s) {
                const ExactMatrix lhs = f.ops.U[m] * f.alg.beta[n] * f.alg.beta[s];
                kron_fail += !(lhs == f.ops.U[m] * kron(n, s) - f.ops.U[n] * kron(m, s));
                eta_fail += !(lhs == f.ops.U[m] * eta(n, s) - f.ops.U[n] * eta(m, s));
            }
    CHECK(eta_fail == 0);
    CHECK(kron_fail == 18);
}

TEST_CASE("component layout") {
    Fixture f;
    const ComponentLayout l = derive_component_layout(f.ops);
    CHECK(l.vector[0].slot == 9);
    CHECK(l.vector[0].coefficient == ExactScalar(-1));
    for (int k = 1; k <= 3; ++k) {
        CHECK(l.vector[k].slot == static_cast<std::size_t>(5 + k));
        CHECK(l.vector[k].coefficient == -I);
    }
    CHECK(l.tensor[0].name == "G^{01}");
    CHECK(l.tensor[0].slot == 0);
    CHECK(l.tensor[0].coefficient == I);
    CHECK(l.tensor[3].name == "G^{12}");
    CHECK(l.tensor[3].slot == 5);
    CHECK(l.tensor[4].coefficient == ExactScalar(1));
    CHECK(l.tensor[5].slot == 3);
    CHECK(l.table().size() == 11);

    // U^0 sees only the psi^0 slot.
    for (std::size_t k = 0; k < 10; ++k) {
        ExactVector e(10);
        e[k] = 1;
        const ExactVector out = mat_vec(f.ops.U[0], e);
        CHECK(out[9].is_zero() == (k != 9));
    }
}

TEST_CASE("exact_sqrt") {
    CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK(exact_sqrt(Rational(0)) == Rational(0));
    CHECK_THROWS_AS(exact_sqrt(Rational(2)), PreconditionError);
    CHECK_THROWS_AS(exact_sqrt(Rational(-4)), PreconditionError);
}

TEST_CASE("plane waves map onto free Proca solutions") {
    Fixture f;
    const ComponentLayout layout = derive_component_layout(f.ops);
    // m = 9/4, (E, p1) = (15/4, 3): sqrt(m) = 3/2.
    for (const auto& p : {momentum(15, 12, 0, 9, 4), momentum(9, 0, 0, 9, 4), momentum(39, 0, 15, 36, 16)}) {
        for (int s3 : {1, -1}) {
            const ExactVector phi = kemmer_amplitude(f.alg, p, s3);
            const ExactProcaState st = kemmer_to_proca(phi, p.mass, f.ops);
            const auto eps = polarization(p, s3);
            const ExactScalar root(exact_sqrt(p.mass.re()));
            ExactScalar lorenz(0);
            for (int n = 0; n < 4; ++n) {
                CHECK(st.psi[n] == eps[n] / root);
                lorenz += p.lower(n) * st.psi[n];
            }
            CHECK(lorenz.is_zero());
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    CHECK(st.G[a][b] == -I * (p.upper[a] * st.psi[b] - p.upper[b] * st.psi[a]));
            // d_mu G^{mu nu} + m^2 psi^nu with d_mu -> -i p_mu
            for (int n = 0; n < 4; ++n) {
                ExactScalar e = p.mass * p.mass * st.psi[n];
                for (int m = 0; m < 4; ++m) e += -I * p.lower(m) * st.G[m][n];
                CHECK(e.is_zero());
            }
            CHECK(kemmer_from_polarization(eps, p, layout) == phi);
        }
    }
    CHECK_THROWS_AS(kemmer_to_proca(ExactVector(10), ExactScalar(2), f.ops), PreconditionError);
}

TEST_CASE("numeric map is linear and invertible on the layout") {
    Fixture f;
    const ComponentLayout layout = derive_component_layout(f.ops);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    NumericVector phi(10);
    for (auto& c : phi) c = {u(rng), u(rng)};
    const ProcaState st = kemmer_to_proca(phi, 1.7, f.ops);
    const NumericVector back = proca_to_kemmer(st, layout);
    for (std::size_t k = 0; k < 10; ++k) CHECK(std::abs(back[k] - phi[k]) < 1e-14);

    const ProcaState zero = kemmer_to_proca(NumericVector(10), 1.7, f.ops);
    for (const auto& c : zero.psi) CHECK(c == Complex(0.0));

    // A global phase passes straight through.
    const Complex g = std::polar(1.0, 0.7);
    NumericVector rotated = phi;
    for (auto& c : rotated) c *= g;
    const ProcaState st2 = kemmer_to_proca(rotated, 1.7, f.ops);
    for (int n = 0; n < 4; ++n) CHECK(std::abs(st2.psi[n] - g * st.psi[n]) < 1e-14);
    CHECK_THROWS_AS(kemmer_to_proca(phi, -1.0, f.ops), PreconditionError);
}

TEST_CASE("Proca plane wave") {
    const ProcaPlaneWave w(FourMomentum::on_shell(1.2, 0.3, 0.4), 1);
    CHECK(w.free_residual(0.1, {0.3, -0.2}) < 1e-13);
    const ProcaState st = w.value(0.0, {0.0, 0.0});
    const auto& p = w.momentum();
    Complex lorenz = 0.0;
    for (int n = 0; n < 4; ++n) lorenz += p.lower(n) * st.psi[n];
    CHECK(std::abs(lorenz) < 1e-14);
    CHECK(std::abs(st.G[1][2] + st.G[2][1]) < 1e-15);
}

TEST_CASE("interaction transport") {
    Fixture f;
    ExactTensor F;
    ExactVector phi(10);
    for (std::size_t k = 0; k < 10; ++k) phi[k] = ExactScalar(Rational(static_cast<long long>(k) - 4, 3), Rational(1, 1 + static_cast<long long>(k)));
    // Zero field: both sides vanish.
    CHECK(check_interaction_transport(f.alg, f.ops, F, phi, ExactScalar(1), ExactScalar(4)).passed());

    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b) {
            F[a][b] = ExactScalar::fraction(static_cast<long long>(2 * a + 3 * b) - 5, 2);
            F[b][a] = -F[a][b];
        }
    const CheckReport r = check_interaction_transport(f.alg, f.ops, F, phi, ExactScalar::fraction(-3, 5), ExactScalar::fraction(25, 9));
    CHECK(r.records.size() == 4);
    CHECK(r.passed());
}

TEST_CASE("spin correspondence and eigencolumns") {
    Fixture f;
    const SpinOperators spin = build_spin_operators(f.alg);
    const CheckReport c = check_spin_correspondence(f.alg, spin, f.ops);
    CHECK(c.passed());
    CHECK(c.records.size() == 6);
    for (int s3 : {1, -1}) {
        const CheckReport e = check_eigencolumn_structure(f.alg, f.ops, ExactScalar::fraction(9, 4), s3);
        CHECK(e.records.size() == 7);
        CHECK(e.passed());
    }
}
