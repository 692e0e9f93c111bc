#include <doctest.h>

#include <cmath>

#include "acphase/dirac.hpp"
#include "oracles.hpp"

using namespace acphase;

namespace {

const ExactScalar I = ExactScalar::i();

ExactMatrix slash(const DiracAlgebra& alg, const ExactFourMomentum& p) {
    ExactMatrix s(4, 4);
    for (int mu = 0; mu < 4; ++mu) s += alg.gamma[static_cast<std::size_t>(mu)] * p.lower(mu);
    return s;
}

// (E, p1, p2, m) / den; the triples below keep E rational.
ExactFourMomentum momentum(long long e_num, long long p1_num, long long p2_num, long long m_num, long long den) {
    return {{ExactScalar::fraction(e_num, den), ExactScalar::fraction(p1_num, den), ExactScalar::fraction(p2_num, den),
             0},
            ExactScalar::fraction(m_num, den)};
}

}  // namespace

TEST_CASE("standard representation") {
    const DiracAlgebra alg = build_dirac();
    const ExactMatrix& g0 = alg.gamma[0];
    CHECK(g0(0, 0) == ExactScalar(1));
    CHECK(g0(2, 2) == ExactScalar(-1));
    CHECK(g0.nonzero_count() == 4);
    // gamma^2 = [[0, sigma_2], [-sigma_2, 0]]
    CHECK(alg.gamma[2](0, 3) == -I);
    CHECK(alg.gamma[2](3, 0) == -I);
    CHECK(alg.gamma_lower(1) == -alg.gamma[1]);
    // gamma_5 = [[0, I], [I, 0]]
    const ExactMatrix g5 = alg.gamma5();
    CHECK(g5(0, 2) == ExactScalar(1));
    CHECK(g5(2, 0) == ExactScalar(1));
    CHECK(g5.nonzero_count() == 4);
}

TEST_CASE("clifford suite") {
    const DiracAlgebra alg = build_dirac();
    const CheckReport r = check_clifford(alg);
    CHECK(r.passed());
    CHECK(r.find("clifford{g1,g2}=2eta") != nullptr);
    std::size_t pairs = 0;
    for (const auto& rec : r.records) pairs += rec.name.rfind("clifford{", 0) == 0;
    CHECK(pairs == 16);

    DiracAlgebra broken = alg;
    broken.gamma[3] = alg.gamma[2];
    CHECK_FALSE(check_clifford(broken).passed());
}

TEST_CASE("sigma tensor") {
    const DiracAlgebra alg = build_dirac();
    // sigma^{12} = diag(s3, s3)
    const ExactMatrix s12 = sigma_munu(alg, 1, 2);
    CHECK(s12(0, 0) == ExactScalar(1));
    CHECK(s12(1, 1) == ExactScalar(-1));
    CHECK(s12(2, 2) == ExactScalar(1));
    CHECK(s12.nonzero_count() == 4);
    CHECK(sigma_munu(alg, 2, 1) == -s12);
    CHECK(sigma_munu(alg, 0, 0).is_zero());
    CHECK(sigma_lower(alg, 1, 2) == s12);
    CHECK(sigma_lower(alg, 0, 1) == -sigma_munu(alg, 0, 1));
}

TEST_CASE("phase operator") {
    const DiracAlgebra alg = build_dirac();
    CHECK(check_phase_commutation_spinhalf(alg).passed());
    const CheckReport c = check_phase_commutation_spinhalf(alg);
    REQUIRE(c.records.size() == 4);
    CHECK(c.find("[g3,g1g2g0]!=0") != nullptr);
    CHECK(check_phase_operator_spinhalf(alg).passed());

    const auto op = build_phase_operator_spinhalf(alg);
    CHECK(op.generator == alg.gamma5() * alg.gamma_lower(3));
    // Spectrum +1, +1, -1, -1.
    const auto c_poly = characteristic_polynomial(op.generator);
    CHECK(root_multiplicity(c_poly, 1) == 2);
    CHECK(root_multiplicity(c_poly, -1) == 2);
    CHECK(oracle::algebraic_multiplicity(op.generator, 1) == 2);
}

TEST_CASE("effective potential") {
    const Vec2 a = effective_potential_spinhalf({3.0, -2.0});
    CHECK(a[0] == 2.0);
    CHECK(a[1] == 3.0);
}

TEST_CASE("pauli term matches the tensor contraction") {
    const DiracAlgebra alg = build_dirac();
    const FieldTensor F = field_tensor({0.4, -0.7, 0.0}, {0.0, 0.0, 0.0});
    const NumericMatrix t = pauli_term(alg, 0.5, F);
    // 1/2 mu sigma_{ab} F^{ab} = mu sum_{a<b} sigma_{ab} F^{ab}; only F^{01}, F^{02} live.
    NumericMatrix expected = to_numeric(sigma_lower(alg, 0, 1)) * Complex(0.5 * 0.4) +
                             to_numeric(sigma_lower(alg, 0, 2)) * Complex(0.5 * -0.7);
    CHECK(max_abs(t - expected) < 1e-15);
}

TEST_CASE("exact amplitudes solve the free equation") {
    const DiracAlgebra alg = build_dirac();
    const auto op = build_phase_operator_spinhalf(alg);
    for (const auto& p : {momentum(5, 3, 0, 4, 4), momentum(13, 5, 0, 12, 1), momentum(13, 0, 5, 12, 1), momentum(3, 1, 2, 2, 1)}) {
        // The kernel of (p-slash - m) is two dimensional: both spin labels fit.
        const ExactMatrix d = slash(alg, p) - ExactMatrix::identity(4) * p.mass;
        CHECK(oracle::nullity(d) == 2);
        for (int s : {1, -1}) {
            const ExactVector u = dirac_amplitude(alg, p, s);
            bool nonzero = false;
            for (const auto& c : u) nonzero = nonzero || !c.is_zero();
            CHECK(nonzero);
            for (const auto& c : mat_vec(d, u)) CHECK(c.is_zero());
            const ExactVector gu = mat_vec(op.generator, u);
            for (std::size_t k = 0; k < 4; ++k) CHECK(gu[k] == ExactScalar(s) * u[k]);
        }
    }
}

TEST_CASE("amplitude preconditions") {
    const DiracAlgebra alg = build_dirac();
    CHECK_THROWS_AS(dirac_amplitude(alg, momentum(5, 3, 1, 4, 4), 1), PreconditionError);
    CHECK_THROWS_AS(dirac_amplitude(alg, momentum(5, 3, 0, 4, 4), 0), PreconditionError);
    CHECK_THROWS_AS(free_plane_wave_dirac(FourMomentum{{1.0, 0.5, 0.0, 0.0}, 1.0}, 1, alg), PreconditionError);
    CHECK_THROWS_AS(free_plane_wave_dirac(FourMomentum::on_shell(1.0, 0.3, 0.4), 2, alg), PreconditionError);
}

TEST_CASE("plane wave") {
    const DiracAlgebra alg = build_dirac();
    const DiracPlaneWave w = free_plane_wave_dirac(FourMomentum::on_shell(1.0, 0.3, 0.4), -1, alg);
    double norm2 = 0.0;
    for (const auto& c : w.amplitude()) norm2 += std::norm(c);
    CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(w.free_residual(alg, 0.3, {0.1, -0.2}) < 1e-14);
    // |psi| is constant along the wave.
    CHECK(max_abs(w.value(1.0, {2.0, 3.0})) == doctest::Approx(max_abs(w.amplitude())).epsilon(1e-14));
}

TEST_CASE("finite-difference residual of a free wave converges at second order") {
    const DiracAlgebra alg = build_dirac();
    const DiracPlaneWave w = free_plane_wave_dirac(FourMomentum::on_shell(1.0, 0.3, 0.4), 1, alg);
    const FieldConfig none = FieldConfig::uniform({0.0, 0.0, 0.0});
    const GridSpec g{{0.2, -0.1}, 0.0, 0.05, 11};
    auto fn = [&](double t, Vec2 x) { return w.value(t, x); };
    const double r1 = dirac_pauli_residual(SampledField::sample(g, 4, fn), none, alg, 0.5, 1.0);
    const double r2 = dirac_pauli_residual(SampledField::sample(g.refined(), 4, fn), none, alg, 0.5, 1.0);
    CHECK(r1 > 0.0);
    CHECK(convergence_order(r1, r2) == doctest::Approx(2.0).epsilon(0.02));
}
