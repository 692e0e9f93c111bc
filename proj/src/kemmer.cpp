#include "acphase/kemmer.hpp"

#include <optional>
#include <string>

#include "acphase/error.hpp"
#include "acphase/proca_bridge.hpp"

namespace acphase {

namespace {

const ExactScalar I = ExactScalar::i();

std::size_t u(int k) { return static_cast<std::size_t>(k); }

std::string idx(int a, int b) { return std::to_string(a) + std::to_string(b); }

// 10x10 zero matrix with 3x3 / 3x1 / 1x3 blocks placed by block coordinates.
void put(ExactMatrix& m, int bi, int bj, const ExactMatrix& block) {
    m.set_block(KemmerAlgebra::block_offset[u(bi)], KemmerAlgebra::block_offset[u(bj)], block);
}

ExactMatrix blockdiag3(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c) {
    ExactMatrix m(10, 10);
    put(m, 0, 0, a);
    put(m, 1, 1, b);
    put(m, 2, 2, c);
    return m;
}

}  // namespace

namespace kemmer_blocks {

ExactMatrix spin(int k) {
    if (k < 1 || k > 3) throw PreconditionError("kemmer spin block: k must be 1, 2 or 3");
    ExactMatrix s(3, 3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const int e = levi_civita_lower(0, k, i, j);  // = -eps_kij
            if (e != 0) s(u(i - 1), u(j - 1)) = I * ExactScalar(e);
        }
    return s;
}

ExactMatrix k_row(int k) {
    if (k < 1 || k > 3) throw PreconditionError("kemmer K block: k must be 1, 2 or 3");
    ExactMatrix r(1, 3);
    r(0, u(k - 1)) = 1;
    return r;
}

ExactMatrix proca_vector_spin3() {
    ExactMatrix s(4, 4);
    s.set_block(1, 1, spin(3));
    return s;
}

ExactMatrix spin_tilde3() { return blockdiag3(spin(3), spin(3), spin(3)); }

ExactMatrix xi3_block_form() {
    ExactMatrix m(10, 10);
    put(m, 0, 2, spin(3));
    put(m, 2, 0, spin(3));
    put(m, 1, 3, k_row(3).adjoint() * -I);
    put(m, 3, 1, k_row(3) * I);
    return m;
}

ExactMatrix xi3_beta0_block_form() { return blockdiag3(spin(3), ExactMatrix(3, 3), spin(3)); }

}  // namespace kemmer_blocks

KemmerAlgebra build_betas() {
    using namespace kemmer_blocks;
    KemmerAlgebra alg;
    ExactMatrix b0(10, 10);
    put(b0, 0, 2, ExactMatrix::identity(3));
    put(b0, 2, 0, ExactMatrix::identity(3));
    alg.beta[0] = b0;
    for (int k = 1; k <= 3; ++k) {
        ExactMatrix bk(10, 10);
        put(bk, 0, 3, k_row(k).adjoint() * -I);
        put(bk, 1, 2, spin(k));
        put(bk, 2, 1, -spin(k));
        put(bk, 3, 0, k_row(k) * -I);
        alg.beta[u(k)] = bk;
    }
    if (!check_ring(alg.beta).passed()) throw Error("build_betas: blocks violate the ring relation");
    return alg;
}

CheckReport check_ring(const std::array<ExactMatrix, 4>& beta) {
    CheckReport rep{"kemmer ring", {}};
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n) {
                const auto& bl = beta[u(l)];
                const auto& bm = beta[u(m)];
                const auto& bn = beta[u(n)];
                const ExactMatrix lhs = bl * bm * bn + bn * bm * bl;
                const ExactMatrix rhs = bn * ExactScalar(metric(l, m)) + bl * ExactScalar(metric(m, n));
                const ExactMatrix diff = lhs - rhs;
                CheckRecord r;
                r.name = "ring(" + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
                r.status = diff.is_zero() ? CheckStatus::pass : CheckStatus::fail;
                r.measured = std::to_string(diff.nonzero_count()) + " nonzero";
                r.expected = "0 nonzero";
                r.tolerance = "exact";
                rep.add(std::move(r));
            }
    return rep;
}

ExactMatrix xi_operator(const KemmerAlgebra& alg, int mu) {
    ExactMatrix acc(10, 10);
    for (int n = 0; n < 4; ++n)
        for (int l = 0; l < 4; ++l)
            for (int r = 0; r < 4; ++r) {
                const int e = levi_civita_lower(mu, n, l, r);
                if (e != 0) acc += alg.beta[u(n)] * alg.beta[u(l)] * alg.beta[u(r)] * ExactScalar(e);
            }
    return acc * (I * ExactScalar::fraction(1, 2));
}

ExactMatrix xi3_cyclic(const KemmerAlgebra& alg) {
    const auto& b = alg.beta;
    return (b[0] * b[1] * b[2] + b[1] * b[2] * b[0] + b[2] * b[0] * b[1]) * I;
}

namespace {

// -eps_{mu nu} 1/2 (beta_0 beta_nu - beta_nu beta_0) beta_mu^2, i.e. the
// right side of the first identity divided by b.
ExactMatrix identity_one_rhs_unit(const KemmerAlgebra& alg, int mu, int nu) {
    const ExactMatrix bmu = alg.beta_lower(mu);
    const ExactMatrix s0n = commutator(alg.beta_lower(0), alg.beta_lower(nu));
    return s0n * (bmu * bmu) * (ExactScalar::fraction(-1, 2) * ExactScalar(epsilon2(mu, nu)));
}

ExactMatrix s_lower(const KemmerAlgebra& alg, const ExactScalar& b, int mu, int nu) {
    return commutator(alg.beta_lower(mu), alg.beta_lower(nu)) * b;
}

}  // namespace

ExactScalar solve_generator_normalization(const KemmerAlgebra& alg) {
    const ExactMatrix xi3 = xi_operator(alg, 3);
    std::optional<ExactScalar> b;
    for (auto [mu, nu] : {std::pair{1, 2}, {2, 1}}) {
        const ExactMatrix lhs = alg.beta_lower(mu) * xi3;
        const ExactMatrix unit = identity_one_rhs_unit(alg, mu, nu);
        if (!b) {
            for (std::size_t r = 0; r < 10 && !b; ++r)
                for (std::size_t c = 0; c < 10 && !b; ++c)
                    if (!unit(r, c).is_zero()) b = lhs(r, c) / unit(r, c);
            if (!b) throw Error("generator normalization: right-hand side vanishes identically");
        }
        if (!(lhs == unit * *b))
            throw Error("generator normalization: no single b satisfies the identity for mu=" + std::to_string(mu));
    }
    return *b;
}

SpinOperators build_spin_operators(const KemmerAlgebra& alg) {
    return build_spin_operators(alg, solve_generator_normalization(alg));
}

SpinOperators build_spin_operators(const KemmerAlgebra& alg, const ExactScalar& b) {
    SpinOperators ops;
    ops.b = b;
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) ops.S_lower[u(m)][u(n)] = s_lower(alg, b, m, n);
    // Sigma_i = (i/2) eps_ijk [beta_j, beta_k]: each unordered pair counted once.
    ops.sigma[0] = ExactMatrix(10, 10);
    for (int i = 1; i <= 3; ++i) {
        const int j = i % 3 + 1;
        const int k = j % 3 + 1;
        ops.sigma[u(i)] = commutator(alg.beta_lower(j), alg.beta_lower(k)) * I;
    }
    for (int mu = 0; mu < 4; ++mu) ops.xi[u(mu)] = xi_operator(alg, mu);
    ops.xi3_beta0 = alg.beta[0] * ops.xi[3];
    return ops;
}

CheckReport check_spin_operators(const KemmerAlgebra& alg, const SpinOperators& ops) {
    using namespace kemmer_blocks;
    CheckReport rep{"kemmer spin operators", {}};
    const ExactMatrix& xi3 = ops.xi[3];
    CheckRecord b;
    b.name = "generator normalization b";
    b.status = CheckStatus::pass;
    b.measured = ops.b.to_string();
    b.expected = "solved from the first operator identity";
    b.tolerance = "exact";
    b.detail = "S_{mu nu} = b (beta_mu beta_nu - beta_nu beta_mu)";
    rep.add(std::move(b));
    for (int m = 0; m < 4; ++m)
        for (int n = m; n < 4; ++n)
            rep.add_exact("S_" + idx(m, n) + "=-S_" + idx(n, m),
                          ops.S_lower[u(m)][u(n)] == -ops.S_lower[u(n)][u(m)]);
    rep.add_exact("xi_3 = i(b0b1b2 + b1b2b0 + b2b0b1)", xi3 == xi3_cyclic(alg));
    rep.add_exact("xi_3 block form", xi3 == xi3_block_form());
    const auto& bb = alg.beta;
    rep.add_exact("xi_3 odd under transposition", (bb[0] * bb[2] * bb[1] + bb[2] * bb[1] * bb[0] + bb[1] * bb[0] * bb[2]) * I == -xi3);
    rep.add_exact("b0 xi_3 = xi_3 b0", ops.xi3_beta0 == xi3 * alg.beta[0]);
    rep.add_exact("b0 xi_3 block form", ops.xi3_beta0 == xi3_beta0_block_form());
    rep.add_exact("Sigma_3 = S~_3", ops.sigma[3] == spin_tilde3(), "Sigma_i = (i/2) eps_ijk [beta_j, beta_k]");
    rep.add_exact("xi_3^3 = xi_3", xi3 * xi3 * xi3 == xi3);

    auto spectrum = [&](const std::string& name, const ExactMatrix& m, std::size_t plus, std::size_t minus,
                        std::size_t zero) {
        const auto poly = characteristic_polynomial(m);
        const std::size_t np = root_multiplicity(poly, 1), nm = root_multiplicity(poly, -1),
                          nz = root_multiplicity(poly, 0);
        CheckRecord r;
        r.name = "spectrum " + name;
        r.measured = "{+1:" + std::to_string(np) + ",-1:" + std::to_string(nm) + ",0:" + std::to_string(nz) + "}";
        r.expected = "{+1:" + std::to_string(plus) + ",-1:" + std::to_string(minus) + ",0:" + std::to_string(zero) + "}";
        r.status = r.measured == r.expected ? CheckStatus::pass : CheckStatus::fail;
        r.tolerance = "exact";
        r.detail = "multiplicities in the exact characteristic polynomial";
        rep.add(std::move(r));
    };
    spectrum("Sigma_3", ops.sigma[3], 3, 3, 4);
    spectrum("xi_3", xi3, 3, 3, 4);
    spectrum("b0 xi_3", ops.xi3_beta0, 2, 2, 6);
    return rep;
}

CheckReport check_xi_commutators(const KemmerAlgebra& alg, const SpinOperators& ops) {
    CheckReport rep{"xi_3 commutators", {}};
    const ExactMatrix& xi3 = ops.xi[3];
    for (int mu = 0; mu < 4; ++mu) {
        const bool vanishes = commutator(xi3, alg.beta[u(mu)]).is_zero();
        const bool should_vanish = mu != 3;
        CheckRecord r;
        r.name = std::string("[xi3,b") + std::to_string(mu) + "]" + (should_vanish ? "=0" : "!=0");
        r.status = vanishes == should_vanish ? CheckStatus::pass : CheckStatus::fail;
        r.measured = vanishes ? "zero" : "nonzero";
        r.expected = should_vanish ? "zero" : "nonzero";
        r.tolerance = "exact";
        if (!should_vanish) r.detail = "phi must not depend on x3";
        rep.add(std::move(r));
    }
    for (int mu = 0; mu < 3; ++mu)
        rep.add_exact("exp(-i xi3) b" + std::to_string(mu) + " exp(i xi3) = b" + std::to_string(mu) + " (order 6)",
                      bch_conjugate(xi3, alg.beta[u(mu)], 6) == alg.beta[u(mu)]);
    return rep;
}

CheckReport check_operator_identity_one(const KemmerAlgebra& alg, const SpinOperators& ops) {
    CheckReport rep{"operator identities", {}};
    const ExactMatrix& xi3 = ops.xi[3];
    for (auto [mu, nu] : {std::pair{1, 2}, {2, 1}}) {
        const ExactMatrix bmu = alg.beta_lower(mu);
        const ExactMatrix bmu2 = bmu * bmu;
        const ExactMatrix& s0n = ops.S_lower[0][u(nu)];
        const ExactScalar half_eps = ExactScalar::fraction(1, 2) * ExactScalar(epsilon2(mu, nu));
        const ExactMatrix lhs = bmu * xi3;
        const ExactMatrix rhs_right = s0n * bmu2 * -half_eps;
        const ExactMatrix rhs_left = bmu2 * s0n * -half_eps;
        const bool one = (-alg.beta[u(mu)] * xi3) == lhs && lhs == rhs_right && lhs == rhs_left;
        rep.add_exact("identity one mu=" + std::to_string(mu) + " nu=" + std::to_string(nu), one,
                      "-b^mu xi3 = b_mu xi3 = -eps_{mu nu} 1/2 S_{0 nu} b_mu^2 = -eps_{mu nu} 1/2 b_mu^2 S_{0 nu}");
        const bool two = bmu * lhs == bmu * s0n * half_eps;
        rep.add_exact("identity two mu=" + std::to_string(mu) + " nu=" + std::to_string(nu), two,
                      "b_mu^2 xi3 = +1/2 eps_{mu nu} b_mu S_{0 nu}");
        const ExactMatrix doubled = commutator(alg.beta_lower(0), alg.beta_lower(nu)) * (ops.b * ExactScalar(2));
        rep.add_exact("identity one fails at 2b mu=" + std::to_string(mu), !(lhs == doubled * bmu2 * -half_eps),
                      "b is pinned by the identity", "fails");
    }
    return rep;
}

Vec2 effective_potential_spinone(Vec2 E, double mu) { return {-2.0 * mu * E[1], 2.0 * mu * E[0]}; }

ExactMatrix interaction_absolute(const KemmerAlgebra& alg, const ExactScalar& mu,
                                 const std::array<std::array<ExactScalar, 4>, 4>& F_lower) {
    ExactMatrix out(10, 10);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const ExactScalar& f = F_lower[u(a)][u(b)];
            if (f.is_zero()) continue;
            out += commutator(alg.beta[u(a)], alg.beta[u(b)]) * f;
        }
    return out * (I * mu);
}

namespace {

using CommutatorTable = std::array<std::array<NumericMatrix, 4>, 4>;

CommutatorTable numeric_commutators(const KemmerAlgebra& alg) {
    CommutatorTable t;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[u(a)][u(b)] = to_numeric(commutator(alg.beta[u(a)], alg.beta[u(b)]));
    return t;
}

NumericMatrix interaction_absolute(const CommutatorTable& c, double mu, const FieldTensor& F_lower) {
    NumericMatrix out(10, 10);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            if (F_lower[a][b] == 0.0) continue;
            out += c[a][b] * Complex(0.0, mu * F_lower[a][b]);
        }
    return out;
}

}  // namespace

NumericMatrix interaction_absolute(const KemmerAlgebra& alg, double mu, const FieldTensor& F_lower) {
    return interaction_absolute(numeric_commutators(alg), mu, F_lower);
}

ExactMatrix interaction_generator_form(const SpinOperators& ops, const ExactScalar& mu,
                                       const std::array<std::array<ExactScalar, 4>, 4>& F_upper) {
    ExactMatrix out(10, 10);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const ExactScalar& f = F_upper[u(a)][u(b)];
            if (f.is_zero()) continue;
            out += ops.S_lower[u(a)][u(b)] * f;
        }
    return out * (ExactScalar::fraction(1, 2) * mu);
}

ExactVector kemmer_amplitude(const KemmerAlgebra& alg, const ExactFourMomentum& p, int s3) {
    require_planar_on_shell(p);
    if (s3 != 1 && s3 != -1) throw PreconditionError("kemmer amplitude: s3 must be +1 or -1");
    const ComponentLayout layout = derive_component_layout(build_projections(alg));
    return kemmer_from_polarization(polarization(p, s3), p, layout);
}

KemmerPlaneWave::KemmerPlaneWave(FourMomentum p, int s3, NumericVector amplitude)
    : p_(p), s_(s3), u_(std::move(amplitude)) {}

NumericVector KemmerPlaneWave::value(double t, Vec2 x) const {
    const Complex phase = std::exp(Complex(0.0, -p_.dot_position(t, x[0], x[1])));
    NumericVector v(u_);
    for (auto& c : v) c *= phase;
    return v;
}

double KemmerPlaneWave::free_residual(const KemmerAlgebra& alg, double t, Vec2 x) const {
    const NumericVector phi = value(t, x);
    NumericVector r(10);
    for (std::size_t k = 0; k < 10; ++k) r[k] = -p_.mass * phi[k];
    for (int mu = 0; mu < 4; ++mu) {
        const NumericVector b = mat_vec(to_numeric(alg.beta[u(mu)]), phi);
        for (std::size_t k = 0; k < 10; ++k) r[k] += p_.lower(mu) * b[k];
    }
    return max_abs(r);
}

KemmerPlaneWave kemmer_plane_wave(const FourMomentum& p, int s3, const KemmerAlgebra& alg) {
    require_planar_on_shell(p);
    if (s3 == 0) throw PreconditionError("kemmer plane wave: s3 = 0 states carry no phase and are not built");
    if (s3 != 1 && s3 != -1) throw PreconditionError("kemmer plane wave: s3 must be +1 or -1");
    const ComponentLayout layout = derive_component_layout(build_projections(alg));
    const auto eps = polarization(p, s3);
    // Same construction as kemmer_from_polarization, in floating point.
    NumericVector phi(10, Complex(0.0));
    for (const auto& slot : layout.vector)
        phi[slot.slot] = Complex(0.0, 1.0) * eps[u(slot.a)] / slot.coefficient.to_complex();
    for (const auto& slot : layout.tensor) {
        const Complex g = Complex(0.0, -1.0) *
                          (p.upper[u(slot.a)] * eps[u(slot.b)] - p.upper[u(slot.b)] * eps[u(slot.a)]) / p.mass;
        phi[slot.slot] = g / slot.coefficient.to_complex();
    }
    return KemmerPlaneWave(p, s3, std::move(phi));
}

double kemmer_residual(const SampledField& phi, const FieldConfig& field, const KemmerAlgebra& alg, double mu,
                       double mass) {
    phi.grid().validate(field);
    if (phi.components() != 10) throw DimensionError("kemmer_residual: expected a 10-component field");
    std::array<NumericMatrix, 3> i_beta;
    for (std::size_t k = 0; k < 3; ++k) i_beta[k] = to_numeric(alg.beta[k]) * Complex(0.0, 1.0);
    const CommutatorTable comm = numeric_commutators(alg);
    return phi.max_over_interior([&](const FieldJet& jet) {
        const FieldSample s = field.at(jet.x);
        const NumericMatrix interaction = interaction_absolute(comm, mu, lower_both(field_tensor(s.E, s.B)));
        NumericVector r = mat_vec(interaction, jet.value);
        for (std::size_t k = 0; k < 10; ++k) r[k] -= mass * jet.value[k];
        for (std::size_t m = 0; m < 3; ++m) {
            const NumericVector g = mat_vec(i_beta[m], jet.d[m]);
            for (std::size_t k = 0; k < 10; ++k) r[k] += g[k];
        }
        return max_abs(r);
    });
}

}  // namespace acphase
