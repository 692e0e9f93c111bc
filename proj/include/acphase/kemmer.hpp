#pragma once

#include <array>

#include "acphase/check_report.hpp"
#include "acphase/fields.hpp"
#include "acphase/lorentz.hpp"
#include "acphase/matrix.hpp"
#include "acphase/sampled_field.hpp"

namespace acphase {

/// Ten-dimensional spin-1 representation of the Kemmer algebra.
///
/// Block layout: three 3-blocks at offsets 0, 3, 6 and a scalar slot at 9.
///   beta^0 = [[0,0,1,0],[0,0,0,0],[1,0,0,0],[0,0,0,0]]
///   beta^k = [[0,0,0,-iK^k+],[0,0,S^k,0],[0,-S^k,0,0],[-iK^k,0,0,0]]
/// with (S^k)_{ij} = -i eps_kij and K^k the k-th unit row.
struct KemmerAlgebra {
    static constexpr std::size_t dim = 10;
    static constexpr std::array<std::size_t, 4> block_offset{0, 3, 6, 9};

    std::array<ExactMatrix, 4> beta;

    ExactMatrix beta_lower(int mu) const { return beta[static_cast<std::size_t>(mu)] * ExactScalar(metric(mu)); }
};

namespace kemmer_blocks {
ExactMatrix spin(int k);    ///< S^k, 3x3
ExactMatrix k_row(int k);   ///< K^k, 1x3
/// Printed 4x4 spin matrix of the Proca vector (rotations in the 1-2 plane).
ExactMatrix proca_vector_spin3();
/// S~_3 = blockdiag(S_3, S_3, S_3, 0), 10x10.
ExactMatrix spin_tilde3();
/// Printed block form of xi_3.
ExactMatrix xi3_block_form();
/// Printed block form of beta^0 xi_3 = blockdiag(S_3, 0, S_3, 0).
ExactMatrix xi3_beta0_block_form();
}  // namespace kemmer_blocks

/// Assembles the four beta matrices from the blocks and verifies the ring
/// relation; throws Error if it fails (not reachable for the built-in blocks).
KemmerAlgebra build_betas();

/// Ring relation b^l b^m b^n + b^n b^m b^l = eta^{lm} b^n + eta^{mn} b^l for all
/// 64 triples, one record each. Works for any four square matrices.
CheckReport check_ring(const std::array<ExactMatrix, 4>& beta);

struct SpinOperators {
    ExactScalar b;                                        ///< S_{mu nu} = b (beta_mu beta_nu - beta_nu beta_mu)
    std::array<std::array<ExactMatrix, 4>, 4> S_lower;    ///< S_{mu nu}
    std::array<ExactMatrix, 4> sigma;                     ///< Sigma_i, i = 1..3 (index 0 unused)
    std::array<ExactMatrix, 4> xi;                        ///< xi_mu
    ExactMatrix xi3_beta0;
};

/// xi_mu = (i/2) eps_{mu nu l r} beta^nu beta^l beta^r with eps_{0123} = -1.
ExactMatrix xi_operator(const KemmerAlgebra& alg, int mu);
/// i (b0 b1 b2 + b1 b2 b0 + b2 b0 b1)
ExactMatrix xi3_cyclic(const KemmerAlgebra& alg);

/// Solves the mu=1, nu=2 operator identity beta_mu xi_3 = -eps_{mu nu} (1/2) S_{0 nu} beta_mu^2
/// for the Lorentz-generator normalization b and confirms the solution on
/// every entry. Throws Error if no single b satisfies it.
ExactScalar solve_generator_normalization(const KemmerAlgebra& alg);

/// Builds all spin operators with the solved b.
SpinOperators build_spin_operators(const KemmerAlgebra& alg);
SpinOperators build_spin_operators(const KemmerAlgebra& alg, const ExactScalar& b);

/// Structural facts of xi_3, S_{mu nu}, Sigma_3 (block forms, antisymmetry,
/// spectra via exact characteristic polynomials).
CheckReport check_spin_operators(const KemmerAlgebra& alg, const SpinOperators& ops);

/// [xi_3, beta^mu] = 0 for mu = 0, 1, 2 and != 0 for mu = 3; plus the
/// Baker-Hausdorff consequence for the commuting cases.
CheckReport check_xi_commutators(const KemmerAlgebra& alg, const SpinOperators& ops);

/// Operator identities for mu in {1, 2}:
///   -beta^mu xi_3 = beta_mu xi_3 = -eps_{mu nu} 1/2 S_{0 nu} beta_mu^2 = -eps_{mu nu} 1/2 beta_mu^2 S_{0 nu}
///   beta_mu (beta_mu xi_3) = -1/2 eta_{mu mu} eps_{mu nu} beta_mu S_{0 nu} = +1/2 eps_{mu nu} beta_mu S_{0 nu}
CheckReport check_operator_identity_one(const KemmerAlgebra& alg, const SpinOperators& ops);

/// (A'_1, A'_2) = (-2 mu E_2, 2 mu E_1)
Vec2 effective_potential_spinone(Vec2 E, double mu);

/// Anomalous-moment term in absolute form, i mu [beta^a, beta^b] F_{ab}.
ExactMatrix interaction_absolute(const KemmerAlgebra& alg, const ExactScalar& mu,
                                 const std::array<std::array<ExactScalar, 4>, 4>& F_lower);
NumericMatrix interaction_absolute(const KemmerAlgebra& alg, double mu, const FieldTensor& F_lower);
/// Same term written as 1/2 mu S_{ab} F^{ab}; coincides with the absolute form when b = 2i.
ExactMatrix interaction_generator_form(const SpinOperators& ops, const ExactScalar& mu,
                                       const std::array<std::array<ExactScalar, 4>, 4>& F_upper);

/// Exact amplitude of the spin-1 plane wave with rational on-shell momentum:
/// the boosted polarization with rest-frame psi^2 = i s3 psi^1 mapped through
/// the Kemmer/Proca component layout (Proca amplitude psi = eps/sqrt(m)).
/// It is an eigenvector of xi_3 with eigenvalue s3; at rest it is also an
/// eigenvector of xi_3 beta^0 and S~_3.
ExactVector kemmer_amplitude(const KemmerAlgebra& alg, const ExactFourMomentum& p, int s3);

class KemmerPlaneWave {
public:
    KemmerPlaneWave(FourMomentum p, int s3, NumericVector amplitude);

    const FourMomentum& momentum() const noexcept { return p_; }
    int spin() const noexcept { return s_; }
    const NumericVector& amplitude() const noexcept { return u_; }

    NumericVector value(double t, Vec2 x) const;
    /// |(i beta^mu d_mu - m) phi| with exact derivatives.
    double free_residual(const KemmerAlgebra& alg, double t, Vec2 x) const;

private:
    FourMomentum p_;
    int s_;
    NumericVector u_;
};

/// Throws for off-shell p, p3 != 0 or s3 not in {+1, -1}.
KemmerPlaneWave kemmer_plane_wave(const FourMomentum& p, int s3, const KemmerAlgebra& alg);

/// max over interior points of |(i beta^mu d_mu + i mu [b^a,b^b] F_ab - m) phi|.
double kemmer_residual(const SampledField& phi, const FieldConfig& field, const KemmerAlgebra& alg, double mu,
                       double mass);

}  // namespace acphase
