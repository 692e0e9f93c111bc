#include "acphase/dirac.hpp"

#include <cmath>
#include <string>

#include "acphase/error.hpp"

namespace acphase {

namespace {

const ExactScalar I = ExactScalar::i();

ExactMatrix pauli(int k) {
    switch (k) {
        case 1: return ExactMatrix{{0, 1}, {1, 0}};
        case 2: return ExactMatrix{{0, -I}, {I, 0}};
        default: return ExactMatrix{{1, 0}, {0, -1}};
    }
}

std::string idx(int a, int b) { return std::to_string(a) + std::to_string(b); }

}  // namespace

ExactMatrix DiracAlgebra::gamma5() const { return I * (gamma[0] * gamma[1] * gamma[2] * gamma[3]); }

DiracAlgebra build_dirac() {
    DiracAlgebra alg;
    ExactMatrix g0(4, 4);
    g0.set_block(0, 0, ExactMatrix::identity(2));
    g0.set_block(2, 2, -ExactMatrix::identity(2));
    alg.gamma[0] = g0;
    for (int k = 1; k <= 3; ++k) {
        ExactMatrix gk(4, 4);
        gk.set_block(0, 2, pauli(k));
        gk.set_block(2, 0, -pauli(k));
        alg.gamma[static_cast<std::size_t>(k)] = gk;
    }
    return alg;
}

ExactMatrix sigma_munu(const DiracAlgebra& alg, int mu, int nu) {
    return ExactScalar::fraction(1, 2) * I *
           commutator(alg.gamma[static_cast<std::size_t>(mu)], alg.gamma[static_cast<std::size_t>(nu)]);
}

ExactMatrix sigma_lower(const DiracAlgebra& alg, int mu, int nu) {
    return sigma_munu(alg, mu, nu) * ExactScalar(metric(mu) * metric(nu));
}

CheckReport check_clifford(const DiracAlgebra& alg) {
    CheckReport rep{"clifford", {}};
    const auto id = ExactMatrix::identity(4);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            const bool ok = anticommutator(alg.gamma[static_cast<std::size_t>(mu)],
                                           alg.gamma[static_cast<std::size_t>(nu)]) ==
                            id * ExactScalar(2 * metric(mu, nu));
            rep.add_exact("clifford{g" + std::to_string(mu) + ",g" + std::to_string(nu) + "}=2eta", ok);
        }
    const ExactMatrix g5 = alg.gamma5();
    for (int mu = 0; mu < 4; ++mu)
        rep.add_exact("{g5,g" + std::to_string(mu) + "}=0",
                      anticommutator(g5, alg.gamma[static_cast<std::size_t>(mu)]).is_zero());
    rep.add_exact("g5^2=I", g5 * g5 == id);
    rep.add_exact("g0 hermitian", alg.gamma[0].adjoint() == alg.gamma[0]);
    for (int k = 1; k <= 3; ++k)
        rep.add_exact("g" + std::to_string(k) + " antihermitian",
                      alg.gamma[static_cast<std::size_t>(k)].adjoint() == -alg.gamma[static_cast<std::size_t>(k)]);
    return rep;
}

PhaseOperatorSpinHalf build_phase_operator_spinhalf(const DiracAlgebra& alg, int a, int b) {
    if (a < 1 || a > 3 || b < 1 || b > 3 || a == b)
        throw PreconditionError("phase operator: Gamma must be a product of two distinct spatial gammas");
    PhaseOperatorSpinHalf op;
    op.gamma_operator = alg.gamma[static_cast<std::size_t>(a)] * alg.gamma[static_cast<std::size_t>(b)] * alg.gamma[0];
    op.generator = I * op.gamma_operator;
    op.plane_normal = 6 - a - b;
    return op;
}

CheckReport check_phase_commutation_spinhalf(const DiracAlgebra& alg, int a, int b) {
    const auto op = build_phase_operator_spinhalf(alg, a, b);
    CheckReport rep{"phase commutation (spin 1/2)", {}};
    const std::string gamma_name = "g" + std::to_string(a) + "g" + std::to_string(b) + "g0";
    for (int nu = 0; nu < 4; ++nu) {
        const bool vanishes = commutator(alg.gamma[static_cast<std::size_t>(nu)], op.gamma_operator).is_zero();
        const bool should_vanish = nu != op.plane_normal;
        CheckRecord r;
        r.name = "[g" + std::to_string(nu) + "," + gamma_name + "]" + (should_vanish ? "=0" : "!=0");
        r.status = vanishes == should_vanish ? CheckStatus::pass : CheckStatus::fail;
        r.measured = vanishes ? "zero" : "nonzero";
        r.expected = should_vanish ? "zero" : "nonzero";
        r.tolerance = "exact";
        if (!should_vanish) r.detail = "psi must not depend on x" + std::to_string(nu);
        rep.add(std::move(r));
    }
    return rep;
}

CheckReport check_phase_operator_spinhalf(const DiracAlgebra& alg) {
    const auto op = build_phase_operator_spinhalf(alg);
    const auto id = ExactMatrix::identity(4);
    const ExactMatrix g5g3_upper = alg.gamma5() * alg.gamma[3];
    const ExactMatrix g5g3_lower = alg.gamma5() * alg.gamma_lower(3);
    CheckReport rep{"phase operator (spin 1/2)", {}};
    rep.add_exact("(Gamma g0)^2=-I", op.gamma_operator * op.gamma_operator == -id);
    rep.add_exact("i Gamma g0 = g5 g_3", op.generator == g5g3_lower, "covariant index on gamma_3");
    rep.add_exact("i Gamma g0 = -g5 g^3", op.generator == -g5g3_upper,
                  "with the contravariant gamma^3 the identity carries a minus sign");
    rep.add_exact("generator hermitian", op.generator.adjoint() == op.generator);
    rep.add_exact("generator^2=I", op.generator * op.generator == id);
    rep.add_exact("(g5 g^3)^2=I", g5g3_upper * g5g3_upper == id);
    for (auto [mu, nu] : {std::pair{0, 1}, {0, 2}, {1, 2}})
        rep.add_exact("[generator,sigma^" + idx(mu, nu) + "]=0", commutator(op.generator, sigma_munu(alg, mu, nu)).is_zero(),
                      "spin label survives in-plane boosts and rotations");
    return rep;
}

Vec2 effective_potential_spinhalf(Vec2 E) {
    // A'_i = -eps_ij E_j with eps_12 = +1
    return {-(epsilon2(1, 1) * E[0] + epsilon2(1, 2) * E[1]), -(epsilon2(2, 1) * E[0] + epsilon2(2, 2) * E[1])};
}

namespace {

using SigmaTable = std::array<std::array<NumericMatrix, 4>, 4>;

SigmaTable numeric_sigma_lower(const DiracAlgebra& alg) {
    SigmaTable t;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = to_numeric(sigma_lower(alg, a, b));
    return t;
}

NumericMatrix pauli_term(const SigmaTable& sigma, double mu, const FieldTensor& F) {
    NumericMatrix out(4, 4);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            if (F[a][b] == 0.0) continue;
            out += sigma[a][b] * Complex(0.5 * mu * F[a][b]);
        }
    return out;
}

}  // namespace

NumericMatrix pauli_term(const DiracAlgebra& alg, double mu, const FieldTensor& F) {
    return pauli_term(numeric_sigma_lower(alg), mu, F);
}

ExactVector dirac_amplitude(const DiracAlgebra& alg, const ExactFourMomentum& p, int s) {
    require_planar_on_shell(p);
    if (s != 1 && s != -1) throw PreconditionError("dirac amplitude: spin label must be +1 or -1");
    const auto op = build_phase_operator_spinhalf(alg);
    const auto id = ExactMatrix::identity(4);
    ExactMatrix slash = id * p.mass;
    for (int mu = 0; mu < 4; ++mu) slash += alg.gamma[static_cast<std::size_t>(mu)] * p.lower(mu);
    const ExactMatrix projector = (id + op.generator * ExactScalar(s)) * ExactScalar::fraction(1, 2);
    const ExactMatrix builder = projector * slash;
    for (std::size_t k = 0; k < 4; ++k) {
        ExactVector seed(4, ExactScalar(0));
        seed[k] = ExactScalar(1);
        ExactVector u = mat_vec(builder, seed);
        for (const auto& c : u)
            if (!c.is_zero()) return u;
    }
    throw Error("dirac amplitude: projector annihilated every seed");  // unreachable: rank 1 per spin
}

DiracPlaneWave::DiracPlaneWave(FourMomentum p, int s, NumericVector amplitude)
    : p_(p), s_(s), u_(std::move(amplitude)) {}

NumericVector DiracPlaneWave::value(double t, Vec2 x) const {
    const Complex phase = std::exp(Complex(0.0, -p_.dot_position(t, x[0], x[1])));
    NumericVector v(u_);
    for (auto& c : v) c *= phase;
    return v;
}

double DiracPlaneWave::free_residual(const DiracAlgebra& alg, double t, Vec2 x) const {
    const NumericVector psi = value(t, x);
    NumericVector r(4);
    for (std::size_t k = 0; k < 4; ++k) r[k] = -p_.mass * psi[k];
    for (int mu = 0; mu < 4; ++mu) {
        // i gamma^mu d_mu psi with d_mu psi = -i p_mu psi
        const NumericVector g = mat_vec(to_numeric(alg.gamma[static_cast<std::size_t>(mu)]), psi);
        for (std::size_t k = 0; k < 4; ++k) r[k] += p_.lower(mu) * g[k];
    }
    return max_abs(r);
}

DiracPlaneWave free_plane_wave_dirac(const FourMomentum& p, int s, const DiracAlgebra& alg) {
    require_planar_on_shell(p);
    if (s != 1 && s != -1) throw PreconditionError("dirac plane wave: spin label must be +1 or -1");
    const auto op = build_phase_operator_spinhalf(alg);
    const NumericMatrix id = NumericMatrix::identity(4);
    NumericMatrix slash = id * Complex(p.mass);
    for (int mu = 0; mu < 4; ++mu) slash += to_numeric(alg.gamma[static_cast<std::size_t>(mu)]) * Complex(p.lower(mu));
    const NumericMatrix projector = (id + to_numeric(op.generator) * Complex(s)) * Complex(0.5);
    const NumericMatrix builder = projector * slash;
    // Pick the seed with the largest image for conditioning.
    NumericVector best;
    double best_norm = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        NumericVector seed(4, Complex(0.0));
        seed[k] = 1.0;
        NumericVector u = mat_vec(builder, seed);
        double n2 = 0.0;
        for (const auto& c : u) n2 += std::norm(c);
        if (n2 > best_norm) {
            best_norm = n2;
            best = std::move(u);
        }
    }
    const double norm = std::sqrt(best_norm);
    for (auto& c : best) c /= norm;
    return DiracPlaneWave(p, s, std::move(best));
}

double dirac_pauli_residual(const SampledField& psi, const FieldConfig& field, const DiracAlgebra& alg, double mu,
                            double mass) {
    psi.grid().validate(field);
    if (psi.components() != 4) throw DimensionError("dirac_pauli_residual: expected a 4-component field");
    std::array<NumericMatrix, 3> i_gamma;
    for (std::size_t k = 0; k < 3; ++k) i_gamma[k] = to_numeric(alg.gamma[k]) * Complex(0.0, 1.0);
    const SigmaTable sigma = numeric_sigma_lower(alg);
    return psi.max_over_interior([&](const FieldJet& jet) {
        const FieldSample s = field.at(jet.x);
        const NumericMatrix interaction = pauli_term(sigma, mu, field_tensor(s.E, s.B));
        NumericVector r = mat_vec(interaction, jet.value);
        for (std::size_t k = 0; k < 4; ++k) r[k] -= mass * jet.value[k];
        for (std::size_t m = 0; m < 3; ++m) {
            const NumericVector g = mat_vec(i_gamma[m], jet.d[m]);
            for (std::size_t k = 0; k < 4; ++k) r[k] += g[k];
        }
        return max_abs(r);
    });
}

}  // namespace acphase
