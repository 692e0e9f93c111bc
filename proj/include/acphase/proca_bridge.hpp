#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "acphase/check_report.hpp"
#include "acphase/fields.hpp"
#include "acphase/kemmer.hpp"
#include "acphase/lorentz.hpp"
#include "acphase/matrix.hpp"

namespace acphase {

/// U^mu = -(b^1)^2 (b^2)^2 (b^3)^2 (b^mu b^0 - eta^{mu 0}) and U^{mu nu} = U^mu b^nu.
struct ProjectionOperators {
    std::array<ExactMatrix, 4> U;
    std::array<std::array<ExactMatrix, 4>, 4> U2;
    /// The single row in which every U^mu and U^{mu nu} has support.
    std::size_t output_row = 9;
};

/// Builds both families and verifies U^{mu nu} = -U^{nu mu} and
/// U^mu b^nu b^s = eta^{nu s} U^mu - eta^{mu s} U^nu; throws Error otherwise.
ProjectionOperators build_projections(const KemmerAlgebra& alg);

/// The two projection identities as records (16 + 64).
CheckReport check_projection_identities(const KemmerAlgebra& alg, const ProjectionOperators& ops);

/// Where each Proca component lives inside the Kemmer spinor: U phi has
/// `coefficient * phi[slot]` in the output row.
struct ComponentSlot {
    std::string name;  ///< "psi^1", "G^{23}", ...
    int a = 0;         ///< first upper index
    int b = -1;        ///< second upper index, -1 for the vector
    std::size_t slot = 0;
    ExactScalar coefficient;
};

struct ComponentLayout {
    std::array<ComponentSlot, 4> vector;  ///< psi^0..psi^3
    std::array<ComponentSlot, 6> tensor;  ///< G^{01}, G^{02}, G^{03}, G^{12}, G^{13}, G^{23}

    std::vector<std::vector<std::string>> table() const;
};

/// Applies every U^nu and U^{mu nu} to the ten basis vectors and reads off the
/// slot and coefficient of each Proca component. Throws unless the map is a
/// bijection onto the ten slots.
ComponentLayout derive_component_layout(const ProjectionOperators& ops);

template <class T>
struct BasicProcaState {
    std::array<T, 4> psi{};
    std::array<std::array<T, 4>, 4> G{};  ///< G^{mu nu}, antisymmetric
    T mass{1};

    friend bool operator==(const BasicProcaState&, const BasicProcaState&) = default;
};

using ProcaState = BasicProcaState<Complex>;
using ExactProcaState = BasicProcaState<ExactScalar>;

/// psi^nu = U^nu phi / (i sqrt m), G^{mu nu} = sqrt m U^{mu nu} phi.
ProcaState kemmer_to_proca(const NumericVector& phi, double mass, const ProjectionOperators& ops);
/// Exact variant; the mass must be the square of a rational.
ExactProcaState kemmer_to_proca(const ExactVector& phi, const ExactScalar& mass, const ProjectionOperators& ops);

/// Inverse of kemmer_to_proca on the layout.
NumericVector proca_to_kemmer(const ProcaState& state, const ComponentLayout& layout);

/// Kemmer spinor of a Proca plane-wave amplitude psi = eps/sqrt(m),
/// G = -i (p psi - psi p); rational when p, eps and m are.
ExactVector kemmer_from_polarization(const std::array<ExactScalar, 4>& eps, const ExactFourMomentum& p,
                                     const ComponentLayout& layout);

/// Polarization of the spin-s3 state: rest frame (0, 1, i s3, 0), boosted along
/// the in-plane momentum. Satisfies p.eps = 0 exactly.
std::array<ExactScalar, 4> polarization(const ExactFourMomentum& p, int s3);
std::array<Complex, 4> polarization(const FourMomentum& p, int s3);

/// psi(x) = eps/sqrt(m) exp(-i p.x), G^{mu nu} = d^mu psi^nu - d^nu psi^mu.
class ProcaPlaneWave {
public:
    ProcaPlaneWave(FourMomentum p, int s3);

    const FourMomentum& momentum() const noexcept { return p_; }
    int spin() const noexcept { return s_; }
    const std::array<Complex, 4>& polarization() const noexcept { return eps_; }
    ProcaState value(double t, Vec2 x) const;

    /// max over nu of |d_mu G^{mu nu} + m^2 psi^nu| with exact derivatives.
    double free_residual(double t, Vec2 x) const;

private:
    FourMomentum p_;
    int s_;
    std::array<Complex, 4> eps_;
};

/// F^nu_sigma psi^sigma = F^{nu a} eta_{a sigma} psi^sigma.
template <class T, class F>
std::array<T, 4> interaction_vector(const std::array<std::array<F, 4>, 4>& F_upper, const std::array<T, 4>& psi) {
    std::array<T, 4> out{};
    for (int nu = 0; nu < 4; ++nu) {
        T acc(0);
        for (int s = 0; s < 4; ++s)
            acc += T(F_upper[static_cast<std::size_t>(nu)][static_cast<std::size_t>(s)] * F(metric(s))) *
                   psi[static_cast<std::size_t>(s)];
        out[static_cast<std::size_t>(nu)] = acc;
    }
    return out;
}

/// Transports the absolute-form Kemmer interaction M phi with the same map that
/// takes (i beta.d - m) phi to d_mu G^{mu nu} + m^2 psi^nu, namely i sqrt(m) U^nu,
/// and compares it with -2 i m mu F^nu_sigma psi^sigma for every nu, where psi is
/// kemmer_to_proca(phi). One record per nu. The mass must be a rational square.
CheckReport check_interaction_transport(const KemmerAlgebra& alg, const ProjectionOperators& ops,
                                        const std::array<std::array<ExactScalar, 4>, 4>& F_upper,
                                        const ExactVector& phi, const ExactScalar& mu, const ExactScalar& mass);

/// beta^0 xi_3 against its block form, Sigma_3 = S~_3, support of the
/// difference, rest-frame eigencolumn transport, and non-commutation of xi_3
/// with the projections.
CheckReport check_spin_correspondence(const KemmerAlgebra& alg, const SpinOperators& spin,
                                      const ProjectionOperators& ops);

/// Structural facts of the rest-frame s3 = +-1 states: psi^0 = psi^3 = 0,
/// psi^1 = -i s3 psi^2, G^{02} = i s3 G^{01}, G^{12} = 0, G^{23} = 0, checked exactly.
CheckReport check_eigencolumn_structure(const KemmerAlgebra& alg, const ProjectionOperators& ops,
                                        const ExactScalar& mass, int s3);

/// Square root of a non-negative rational that is a perfect square; throws otherwise.
Rational exact_sqrt(const Rational& r);

}  // namespace acphase
