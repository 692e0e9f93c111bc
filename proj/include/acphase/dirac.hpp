#pragma once

#include <array>

#include "acphase/check_report.hpp"
#include "acphase/fields.hpp"
#include "acphase/lorentz.hpp"
#include "acphase/matrix.hpp"
#include "acphase/sampled_field.hpp"

namespace acphase {

/// gamma^mu in the standard (Dirac) representation, gamma^0 = diag(I, -I).
struct DiracAlgebra {
    std::array<ExactMatrix, 4> gamma;

    ExactMatrix gamma_lower(int mu) const { return gamma[static_cast<std::size_t>(mu)] * ExactScalar(metric(mu)); }
    /// gamma_5 = i gamma^0 gamma^1 gamma^2 gamma^3
    ExactMatrix gamma5() const;
};

DiracAlgebra build_dirac();

/// sigma^{mu nu} = (i/2)[gamma^mu, gamma^nu]
ExactMatrix sigma_munu(const DiracAlgebra& alg, int mu, int nu);
/// sigma_{mu nu}, both indices lowered.
ExactMatrix sigma_lower(const DiracAlgebra& alg, int mu, int nu);

/// 16 Clifford pairs, gamma_5 properties and hermiticity.
CheckReport check_clifford(const DiracAlgebra& alg);

/// Spin-1/2 phase operator built from Gamma = gamma^a gamma^b.
///
/// `gamma_operator` is Gamma gamma^0 (squares to -I). The phase generator is
/// i Gamma gamma^0; for Gamma = gamma^1 gamma^2 it equals gamma_5 gamma_3
/// (= -gamma_5 gamma^3), a hermitian involution whose eigenvalue s = +-1 labels
/// the spin along the excluded axis.
struct PhaseOperatorSpinHalf {
    ExactMatrix gamma_operator;
    ExactMatrix generator;
    int plane_normal = 3;
};

PhaseOperatorSpinHalf build_phase_operator_spinhalf(const DiracAlgebra& alg, int a = 1, int b = 2);

/// [gamma^nu, Gamma gamma^0] for nu = 0..3: zero for the two in-plane indices
/// and 0, nonzero for the excluded one.
CheckReport check_phase_commutation_spinhalf(const DiracAlgebra& alg, int a = 1, int b = 2);

/// Algebraic facts about the phase operator: (Gamma gamma^0)^2 = -I, the
/// gamma_5 gamma_3 rewriting, hermiticity and involution of the generator, and
/// invariance of its eigenvalue under in-plane boosts.
CheckReport check_phase_operator_spinhalf(const DiracAlgebra& alg);

/// A'_i = -eps_ij E_j, i.e. (A'_1, A'_2) = (-E_2, E_1). No coupling constant.
Vec2 effective_potential_spinhalf(Vec2 E);

/// 1/2 mu sigma_{ab} F^{ab} for a given field tensor F^{ab}.
NumericMatrix pauli_term(const DiracAlgebra& alg, double mu, const FieldTensor& F_upper);

/// Exact amplitude u(p, s): projects (gamma.p + m) e_k onto the s-eigenspace of
/// the phase generator. Unnormalized; exact for rational on-shell momenta.
ExactVector dirac_amplitude(const DiracAlgebra& alg, const ExactFourMomentum& p, int s);

/// psi(x) = u(p, s) exp(-i p.x) with |u| = 1.
class DiracPlaneWave {
public:
    DiracPlaneWave(FourMomentum p, int s, NumericVector amplitude);

    const FourMomentum& momentum() const noexcept { return p_; }
    int spin() const noexcept { return s_; }
    const NumericVector& amplitude() const noexcept { return u_; }

    NumericVector value(double t, Vec2 x) const;
    /// |(i gamma^mu d_mu - m) psi| at x with the exact derivative d_mu psi = -i p_mu psi.
    double free_residual(const DiracAlgebra& alg, double t, Vec2 x) const;

private:
    FourMomentum p_;
    int s_;
    NumericVector u_;
};

/// Free positive-energy plane wave; throws PreconditionError when p is off-shell,
/// p3 != 0 or s is not +-1.
DiracPlaneWave free_plane_wave_dirac(const FourMomentum& p, int s, const DiracAlgebra& alg);

/// max over interior points of |(i gamma^mu d_mu + 1/2 mu sigma F - m) psi|,
/// derivatives by central differences.
double dirac_pauli_residual(const SampledField& psi, const FieldConfig& field, const DiracAlgebra& alg, double mu,
                            double mass);

}  // namespace acphase
