#include "acphase/lorentz.hpp"

#include <algorithm>
#include <string>

#include "acphase/error.hpp"

namespace acphase {

int levi_civita_lower(int a, int b, int c, int d) {
    std::array<int, 4> idx{a, b, c, d};
    for (int v : idx)
        if (v < 0 || v > 3) return 0;
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (idx[static_cast<std::size_t>(i)] == idx[static_cast<std::size_t>(j)]) return 0;
            if (idx[static_cast<std::size_t>(i)] > idx[static_cast<std::size_t>(j)]) sign = -sign;
        }
    return -sign;
}

void require_planar_on_shell(const FourMomentum& p) {
    const double m = p.mass;
    if (!(m > 0.0)) throw PreconditionError("four-momentum: mass must be positive");
    if (!(p.upper[0] > 0.0)) throw PreconditionError("four-momentum: energy must be positive");
    if (p.upper[3] != 0.0) throw PreconditionError("four-momentum: p3 != 0 violates d_3 psi = 0");
    const double p2 = p.upper[0] * p.upper[0] - p.upper[1] * p.upper[1] - p.upper[2] * p.upper[2];
    const double scale = std::max(m * m, p.upper[0] * p.upper[0]);
    if (std::abs(p2 - m * m) > 1e-12 * scale)
        throw PreconditionError("four-momentum: off-shell (p^2 = " + std::to_string(p2) +
                                ", m^2 = " + std::to_string(m * m) + ")");
}

void require_planar_on_shell(const ExactFourMomentum& p) {
    if (!p.mass.is_real() || !(p.mass.re() > 0)) throw PreconditionError("four-momentum: mass must be positive");
    for (const auto& c : p.upper)
        if (!c.is_real()) throw PreconditionError("four-momentum: components must be real");
    if (!(p.upper[0].re() > 0)) throw PreconditionError("four-momentum: energy must be positive");
    if (!p.upper[3].is_zero()) throw PreconditionError("four-momentum: p3 != 0 violates d_3 psi = 0");
    ExactScalar p2 = p.upper[0] * p.upper[0] - p.upper[1] * p.upper[1] - p.upper[2] * p.upper[2];
    if (!(p2 == p.mass * p.mass)) throw PreconditionError("four-momentum: off-shell (exact)");
}

}  // namespace acphase
