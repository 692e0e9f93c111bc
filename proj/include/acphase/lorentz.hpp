#pragma once

#include <array>
#include <cmath>

#include "acphase/exact_scalar.hpp"

namespace acphase {

// Metric diag(+1,-1,-1,-1), natural units.
constexpr int metric(int mu) { return mu == 0 ? 1 : -1; }
constexpr int metric(int mu, int nu) { return mu == nu ? metric(mu) : 0; }

/// Totally antisymmetric symbol with eps_{0123} = -1 (eps^{0123} = +1).
int levi_civita_lower(int a, int b, int c, int d);

/// Two-index symbol in the 1-2 plane, eps_{12} = +1. Indices are 1 or 2.
constexpr int epsilon2(int i, int j) { return i == j ? 0 : (i == 1 ? 1 : -1); }

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;

/// Contravariant four-momentum p^mu with the mass it is meant to carry.
struct FourMomentum {
    std::array<double, 4> upper{};  // (E, p1, p2, p3)
    double mass = 1.0;

    /// Positive-energy on-shell momentum for a particle moving in the 1-2 plane.
    static FourMomentum on_shell(double mass, double p1, double p2) {
        return {{std::sqrt(mass * mass + p1 * p1 + p2 * p2), p1, p2, 0.0}, mass};
    }
    double lower(int mu) const { return metric(mu) * upper[static_cast<std::size_t>(mu)]; }
    /// p.x = E t - p1 x1 - p2 x2 - p3 x3
    double dot_position(double t, double x1, double x2, double x3 = 0.0) const {
        return upper[0] * t - upper[1] * x1 - upper[2] * x2 - upper[3] * x3;
    }
};

/// Same, with exact components (rational momenta and energy, e.g. Pythagorean).
struct ExactFourMomentum {
    std::array<ExactScalar, 4> upper{};
    ExactScalar mass{1};

    ExactScalar lower(int mu) const {
        return mu == 0 ? upper[0] : -upper[static_cast<std::size_t>(mu)];
    }
};

/// Throws PreconditionError unless p^2 = m^2 (relative 1e-12), m > 0, E > 0 and p3 = 0.
void require_planar_on_shell(const FourMomentum& p);
/// Exact variant: p^2 = m^2 must hold exactly.
void require_planar_on_shell(const ExactFourMomentum& p);

}  // namespace acphase
