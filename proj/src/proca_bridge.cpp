#include "acphase/proca_bridge.hpp"

#include <map>
#include <optional>
#include <string>

#include "acphase/error.hpp"

namespace acphase {

namespace {

const ExactScalar I = ExactScalar::i();

std::size_t u(int k) { return static_cast<std::size_t>(k); }

constexpr std::array<std::pair<int, int>, 6> tensor_pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

std::string vector_name(int a) { return "psi^" + std::to_string(a); }
std::string tensor_name(int a, int b) { return "G^{" + std::to_string(a) + std::to_string(b) + "}"; }

bool identity_holds(const ProjectionOperators& ops, const KemmerAlgebra& alg, int m, int n, int s) {
    const ExactMatrix lhs = ops.U[u(m)] * alg.beta[u(n)] * alg.beta[u(s)];
    const ExactMatrix rhs = ops.U[u(m)] * ExactScalar(metric(n, s)) - ops.U[u(n)] * ExactScalar(metric(m, s));
    return lhs == rhs;
}

// (U phi) restricted to the output row.
template <class T>
T row_dot(const DenseMatrix<T>& U, std::size_t row, const std::vector<T>& phi) {
    T acc(0);
    for (std::size_t c = 0; c < U.cols(); ++c)
        if (!(U(row, c) == T(0))) acc += U(row, c) * phi[c];
    return acc;
}

Complex row_dot(const ExactMatrix& U, std::size_t row, const NumericVector& phi) {
    Complex acc(0.0);
    for (std::size_t c = 0; c < U.cols(); ++c)
        if (!U(row, c).is_zero()) acc += U(row, c).to_complex() * phi[c];
    return acc;
}

}  // namespace

Rational exact_sqrt(const Rational& r) {
    if (r < 0) throw PreconditionError("exact_sqrt: negative argument");
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    const BigInt sn = boost::multiprecision::sqrt(num);
    const BigInt sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den)
        throw PreconditionError("exact_sqrt: " + r.str() + " is not the square of a rational");
    return Rational(sn, sd);
}

ProjectionOperators build_projections(const KemmerAlgebra& alg) {
    ProjectionOperators ops;
    const auto& b = alg.beta;
    const ExactMatrix squares = b[1] * b[1] * b[2] * b[2] * b[3] * b[3];
    const ExactMatrix id = ExactMatrix::identity(KemmerAlgebra::dim);
    for (int m = 0; m < 4; ++m)
        ops.U[u(m)] = -(squares * (b[u(m)] * b[0] - id * ExactScalar(metric(m, 0))));
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) ops.U2[u(m)][u(n)] = ops.U[u(m)] * b[u(n)];
    if (!check_projection_identities(alg, ops).passed())
        throw Error("build_projections: projection identities violated");
    return ops;
}

CheckReport check_projection_identities(const KemmerAlgebra& alg, const ProjectionOperators& ops) {
    CheckReport rep{"projection identities", {}};
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            rep.add_exact("U^" + std::to_string(m) + std::to_string(n) + "=-U^" + std::to_string(n) + std::to_string(m),
                          ops.U2[u(m)][u(n)] == -ops.U2[u(n)][u(m)]);
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            for (int s = 0; s < 4; ++s)
                rep.add_exact("U^" + std::to_string(m) + " b^" + std::to_string(n) + " b^" + std::to_string(s) +
                                  " = eta^" + std::to_string(n) + std::to_string(s) + " U^" + std::to_string(m) +
                                  " - eta^" + std::to_string(m) + std::to_string(s) + " U^" + std::to_string(n),
                              identity_holds(ops, alg, m, n, s));
    return rep;
}

std::vector<std::vector<std::string>> ComponentLayout::table() const {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"component", "slot", "coefficient"});
    for (const auto& c : vector) rows.push_back({c.name, std::to_string(c.slot), c.coefficient.to_string()});
    for (const auto& c : tensor) rows.push_back({c.name, std::to_string(c.slot), c.coefficient.to_string()});
    return rows;
}

namespace {

ComponentSlot read_slot(const ExactMatrix& U, std::size_t output_row, std::string name, int a, int b) {
    std::optional<ComponentSlot> found;
    for (std::size_t r = 0; r < U.rows(); ++r)
        for (std::size_t c = 0; c < U.cols(); ++c) {
            if (U(r, c).is_zero()) continue;
            if (r != output_row) throw Error("component layout: " + name + " has support outside the output row");
            if (found) throw Error("component layout: " + name + " reads more than one slot");
            found = ComponentSlot{name, a, b, c, U(r, c)};
        }
    if (!found) throw Error("component layout: " + name + " projects to zero");
    return *found;
}

}  // namespace

ComponentLayout derive_component_layout(const ProjectionOperators& ops) {
    ComponentLayout layout;
    std::map<std::size_t, std::string> used;
    auto claim = [&](const ComponentSlot& s) {
        if (!used.emplace(s.slot, s.name).second)
            throw Error("component layout: slot " + std::to_string(s.slot) + " claimed by " + used[s.slot] + " and " +
                        s.name);
    };
    for (int a = 0; a < 4; ++a) {
        layout.vector[u(a)] = read_slot(ops.U[u(a)], ops.output_row, vector_name(a), a, -1);
        claim(layout.vector[u(a)]);
    }
    for (std::size_t k = 0; k < tensor_pairs.size(); ++k) {
        const auto [a, b] = tensor_pairs[k];
        layout.tensor[k] = read_slot(ops.U2[u(a)][u(b)], ops.output_row, tensor_name(a, b), a, b);
        claim(layout.tensor[k]);
    }
    return layout;
}

ProcaState kemmer_to_proca(const NumericVector& phi, double mass, const ProjectionOperators& ops) {
    if (!(mass > 0.0)) throw PreconditionError("kemmer_to_proca: mass must be positive");
    if (phi.size() != KemmerAlgebra::dim) throw DimensionError("kemmer_to_proca: expected 10 components");
    const double sm = std::sqrt(mass);
    ProcaState st;
    st.mass = mass;
    for (int a = 0; a < 4; ++a)
        st.psi[u(a)] = row_dot(ops.U[u(a)], ops.output_row, phi) / Complex(0.0, sm);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            st.G[u(a)][u(b)] = sm * row_dot(ops.U2[u(a)][u(b)], ops.output_row, phi);
    return st;
}

ExactProcaState kemmer_to_proca(const ExactVector& phi, const ExactScalar& mass, const ProjectionOperators& ops) {
    if (!mass.is_real() || mass.re() <= 0) throw PreconditionError("kemmer_to_proca: mass must be positive");
    if (phi.size() != KemmerAlgebra::dim) throw DimensionError("kemmer_to_proca: expected 10 components");
    const ExactScalar sm(exact_sqrt(mass.re()));
    ExactProcaState st;
    st.mass = mass;
    for (int a = 0; a < 4; ++a) st.psi[u(a)] = row_dot(ops.U[u(a)], ops.output_row, phi) / (I * sm);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) st.G[u(a)][u(b)] = sm * row_dot(ops.U2[u(a)][u(b)], ops.output_row, phi);
    return st;
}

NumericVector proca_to_kemmer(const ProcaState& state, const ComponentLayout& layout) {
    const Complex sm = std::sqrt(state.mass);
    if (!(std::real(state.mass) > 0.0)) throw PreconditionError("proca_to_kemmer: mass must be positive");
    NumericVector phi(KemmerAlgebra::dim, Complex(0.0));
    for (const auto& s : layout.vector)
        phi[s.slot] = Complex(0.0, 1.0) * sm * state.psi[u(s.a)] / s.coefficient.to_complex();
    for (const auto& s : layout.tensor) phi[s.slot] = state.G[u(s.a)][u(s.b)] / sm / s.coefficient.to_complex();
    return phi;
}

ExactVector kemmer_from_polarization(const std::array<ExactScalar, 4>& eps, const ExactFourMomentum& p,
                                     const ComponentLayout& layout) {
    // U^nu phi = i sqrt(m) psi^nu = i eps^nu and U^{ab} phi = G^{ab}/sqrt(m) = -i (p^a eps^b - p^b eps^a)/m.
    ExactVector phi(KemmerAlgebra::dim, ExactScalar(0));
    for (const auto& s : layout.vector) phi[s.slot] = I * eps[u(s.a)] / s.coefficient;
    for (const auto& s : layout.tensor)
        phi[s.slot] = -I * (p.upper[u(s.a)] * eps[u(s.b)] - p.upper[u(s.b)] * eps[u(s.a)]) / p.mass / s.coefficient;
    return phi;
}

std::array<ExactScalar, 4> polarization(const ExactFourMomentum& p, int s3) {
    require_planar_on_shell(p);
    if (s3 != 1 && s3 != -1) throw PreconditionError("polarization: s3 must be +1 or -1");
    const std::array<ExactScalar, 3> rest{ExactScalar(1), I * ExactScalar(s3), ExactScalar(0)};
    const ExactScalar pe = p.upper[1] * rest[0] + p.upper[2] * rest[1];
    const ExactScalar k = pe / (p.mass * (p.upper[0] + p.mass));
    return {pe / p.mass, rest[0] + k * p.upper[1], rest[1] + k * p.upper[2], rest[2]};
}

std::array<Complex, 4> polarization(const FourMomentum& p, int s3) {
    require_planar_on_shell(p);
    if (s3 != 1 && s3 != -1) throw PreconditionError("polarization: s3 must be +1 or -1");
    const std::array<Complex, 3> rest{1.0, Complex(0.0, s3), 0.0};
    const Complex pe = p.upper[1] * rest[0] + p.upper[2] * rest[1];
    const Complex k = pe / (p.mass * (p.upper[0] + p.mass));
    return {pe / p.mass, rest[0] + k * p.upper[1], rest[1] + k * p.upper[2], rest[2]};
}

ProcaPlaneWave::ProcaPlaneWave(FourMomentum p, int s3) : p_(p), s_(s3), eps_(acphase::polarization(p, s3)) {}

ProcaState ProcaPlaneWave::value(double t, Vec2 x) const {
    const Complex phase = std::exp(Complex(0.0, -p_.dot_position(t, x[0], x[1])));
    const double sm = std::sqrt(p_.mass);
    ProcaState st;
    st.mass = p_.mass;
    for (std::size_t a = 0; a < 4; ++a) st.psi[a] = eps_[a] / sm * phase;
    // d^a psi^b = -i p^a psi^b
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            st.G[a][b] = Complex(0.0, -1.0) * (p_.upper[a] * st.psi[b] - p_.upper[b] * st.psi[a]);
    return st;
}

double ProcaPlaneWave::free_residual(double t, Vec2 x) const {
    const ProcaState st = value(t, x);
    double worst = 0.0;
    for (std::size_t n = 0; n < 4; ++n) {
        Complex r = p_.mass * p_.mass * st.psi[n];
        for (int a = 0; a < 4; ++a) r += Complex(0.0, -p_.lower(a)) * st.G[u(a)][n];
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

CheckReport check_interaction_transport(const KemmerAlgebra& alg, const ProjectionOperators& ops,
                                        const std::array<std::array<ExactScalar, 4>, 4>& F_upper,
                                        const ExactVector& phi, const ExactScalar& mu, const ExactScalar& mass) {
    std::array<std::array<ExactScalar, 4>, 4> F_lower;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) F_lower[u(a)][u(b)] = F_upper[u(a)][u(b)] * ExactScalar(metric(a) * metric(b));
    const ExactProcaState st = kemmer_to_proca(phi, mass, ops);
    const ExactScalar sm(exact_sqrt(mass.re()));
    const ExactVector m_phi = mat_vec(interaction_absolute(alg, mu, F_lower), phi);
    const auto fpsi = interaction_vector(F_upper, st.psi);
    CheckReport rep{"interaction transport", {}};
    for (int n = 0; n < 4; ++n) {
        const ExactScalar lhs = I * sm * row_dot(ops.U[u(n)], ops.output_row, m_phi);
        const ExactScalar rhs = ExactScalar(-2) * I * mass * mu * fpsi[u(n)];
        CheckRecord r;
        r.name = "i sqrt(m) U^" + std::to_string(n) + " M phi = -2 i m mu F^" + std::to_string(n) + "_s psi^s";
        r.status = lhs == rhs ? CheckStatus::pass : CheckStatus::fail;
        r.measured = lhs.to_string();
        r.expected = rhs.to_string();
        r.tolerance = "exact";
        rep.add(std::move(r));
    }
    return rep;
}

CheckReport check_spin_correspondence(const KemmerAlgebra& alg, const SpinOperators& spin,
                                      const ProjectionOperators& ops) {
    CheckReport rep{"spin correspondence", {}};
    const ExactMatrix tilde = kemmer_blocks::spin_tilde3();
    rep.add_exact("b0 xi_3 = blockdiag(S_3, 0, S_3, 0)", spin.xi3_beta0 == kemmer_blocks::xi3_beta0_block_form());
    rep.add_exact("Sigma_3 = S~_3", spin.sigma[3] == tilde);

    const ExactMatrix diff = spin.sigma[3] - spin.xi3_beta0;
    const std::size_t lo = KemmerAlgebra::block_offset[1], hi = KemmerAlgebra::block_offset[2];
    bool confined = true;
    for (std::size_t r = 0; r < 10; ++r)
        for (std::size_t c = 0; c < 10; ++c) {
            const bool inside = r >= lo && r < hi && c >= lo && c < hi;
            if (!inside && !diff(r, c).is_zero()) confined = false;
        }
    rep.add_exact("Sigma_3 - b0 xi_3 supported on the G^{23} block", confined && !diff.is_zero(),
                  "so both act identically on vectors without G^{23}-block entries");

    bool commutes_with_all = true;
    for (int n = 0; n < 4; ++n)
        if (!commutator(spin.xi[3], ops.U[u(n)]).is_zero()) commutes_with_all = false;
    rep.add_exact("[xi_3, U^nu] != 0 for some nu", !commutes_with_all,
                  "spin operators are compared through eigenvalues only");

    const ComponentLayout layout = derive_component_layout(ops);
    for (int s3 : {1, -1}) {
        ExactFourMomentum rest{{ExactScalar(1), ExactScalar(0), ExactScalar(0), ExactScalar(0)}, ExactScalar(1)};
        const ExactVector u0 = kemmer_amplitude(alg, rest, s3);
        ExactVector scaled(u0);
        for (auto& c : scaled) c *= ExactScalar(s3);
        const bool kemmer_side = mat_vec(spin.xi3_beta0, u0) == scaled;
        const bool proca_side = mat_vec(tilde, u0) == scaled;
        const ExactProcaState st = kemmer_to_proca(u0, ExactScalar(1), ops);
        ExactVector psi(st.psi.begin(), st.psi.end());
        ExactVector spsi(psi);
        for (auto& c : spsi) c *= ExactScalar(s3);
        const bool vector_side = mat_vec(kemmer_blocks::proca_vector_spin3(), psi) == spsi;
        rep.add_exact("eigenvalue transport s3=" + std::to_string(s3), kemmer_side && proca_side && vector_side,
                      "b0 xi_3 u = s3 u implies S~_3 u = s3 u and S_3 psi = s3 psi (rest frame)");
    }
    return rep;
}

CheckReport check_eigencolumn_structure(const KemmerAlgebra& alg, const ProjectionOperators& ops,
                                        const ExactScalar& mass, int s3) {
    const ExactFourMomentum rest{{mass, ExactScalar(0), ExactScalar(0), ExactScalar(0)}, mass};
    const ExactVector phi = kemmer_amplitude(alg, rest, s3);
    const ExactProcaState st = kemmer_to_proca(phi, mass, ops);
    const std::string tag = " (s3=" + std::to_string(s3) + ")";
    const ExactScalar is3 = I * ExactScalar(s3);
    CheckReport rep{"eigencolumn structure", {}};
    rep.add_exact("psi^0 = 0" + tag, st.psi[0].is_zero());
    rep.add_exact("psi^3 = 0" + tag, st.psi[3].is_zero());
    rep.add_exact("psi^1 = -i s3 psi^2" + tag, st.psi[1] == -is3 * st.psi[2] && !st.psi[1].is_zero());
    rep.add_exact("G^{02} = i s3 G^{01}" + tag, st.G[0][2] == is3 * st.G[0][1] && !st.G[0][1].is_zero());
    rep.add_exact("G^{12} = 0" + tag, st.G[1][2].is_zero());
    rep.add_exact("G^{23} = 0" + tag, st.G[2][3].is_zero());
    bool pattern = true;
    for (std::size_t k = 0; k < phi.size(); ++k) {
        const bool allowed = k == 0 || k == 1 || k == 6 || k == 7;
        if (!allowed && !phi[k].is_zero()) pattern = false;
    }
    pattern = pattern && phi[1] == is3 * phi[0] && phi[7] == is3 * phi[6];
    rep.add_exact("spinor support {0,1,6,7} with ratio i s3" + tag, pattern);
    return rep;
}

}  // namespace acphase
