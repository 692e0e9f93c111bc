#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "acphase/lorentz.hpp"

namespace acphase {

enum class FieldKind { uniform_e, line_charge, custom };

struct FieldSample {
    Vec3 E{};
    Vec3 B{};
};

/// Static electromagnetic environment, sampled in the 1-2 plane (every field
/// kind here is independent of x3 and of time).
class FieldConfig {
public:
    using Sampler = std::function<FieldSample(Vec2)>;

    static FieldConfig uniform(Vec3 E, Vec3 B = {0.0, 0.0, 0.0});
    /// Infinite straight line charge along the 3-axis through `axis`.
    static FieldConfig line_charge(double lambda, Vec2 axis = {0.0, 0.0});
    static FieldConfig custom(Sampler sampler);

    FieldKind kind() const noexcept { return kind_; }
    double lambda() const noexcept { return lambda_; }
    std::optional<Vec2> axis() const;

    FieldSample at(Vec2 x) const;
    Vec3 electric(Vec2 x) const { return at(x).E; }
    Vec3 magnetic(Vec2 x) const { return at(x).B; }

    /// Distance from the singular axis, +inf for fields without one.
    double distance_to_axis(Vec2 x) const;

    /// Throws PreconditionError naming the violated condition unless B = 0 and
    /// E3 = 0. Uniform and line-charge fields are checked analytically; custom
    /// fields at `probes`.
    void require_ac_configuration(std::span<const Vec2> probes = {}) const;

private:
    FieldKind kind_ = FieldKind::uniform_e;
    FieldSample uniform_{};
    double lambda_ = 0.0;
    Vec2 axis_{};
    Sampler sampler_;
};

/// E(x) = lambda/(2 pi) * x/|x|^2 for a line charge through the origin, so the
/// outward flux through any enclosing contour is lambda.
Vec2 line_charge_E(double lambda, Vec2 x);

/// F^{mu nu}: F^{0i} = E_i, F^{ij} = -eps_ijk B_k.
using FieldTensor = std::array<std::array<double, 4>, 4>;
FieldTensor field_tensor(const Vec3& E, const Vec3& B);
FieldTensor lower_both(const FieldTensor& upper);

/// Polygonal path in the 1-2 plane. Closed iff the first and last vertex coincide.
class LoopPath {
public:
    LoopPath() = default;
    explicit LoopPath(std::vector<Vec2> vertices);

    /// Regular n-gon inscribed in the circle, traversed |winding| times
    /// (counter-clockwise for positive winding). The loop integral of a
    /// curl-free field around the axis does not depend on n.
    static LoopPath circle(Vec2 center, double radius, int segments, int winding = 1);
    static LoopPath rectangle(Vec2 lower_left, Vec2 upper_right);
    static LoopPath polyline(std::vector<Vec2> vertices) { return LoopPath(std::move(vertices)); }

    const std::vector<Vec2>& vertices() const noexcept { return vertices_; }
    std::size_t segment_count() const noexcept { return vertices_.empty() ? 0 : vertices_.size() - 1; }
    bool closed() const;
    /// Signed winding number around `point` (crossing rule; closed paths only).
    int winding_number(Vec2 point) const;
    /// Smallest distance from `point` to any segment.
    double distance_to(Vec2 point) const;

private:
    std::vector<Vec2> vertices_;
};

using PlaneVectorField = std::function<Vec2(Vec2)>;

/// Adaptive Gauss-Legendre quadrature of f on [a, b] to absolute error tol.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol);

/// Integral of A . dr along the path (open or closed), absolute error <= tol.
double line_integral(const PlaneVectorField& A, const LoopPath& path, double tol);

/// Closed-loop integral. `avoid` marks a singular point (the charge axis) that
/// no segment may touch.
double loop_integral(const PlaneVectorField& A, const LoopPath& path, double tol,
                     std::optional<Vec2> avoid = std::nullopt);

struct GaussCheckResult {
    double flux = 0.0;             ///< contour integral of E . n dl
    double enclosed_charge = 0.0;  ///< winding number times the line density
    int winding = 0;
};

/// Outward flux of the in-plane E field through the closed `region` boundary,
/// paired with the charge it should enclose.
GaussCheckResult gauss_check(const FieldConfig& field, const LoopPath& region, double tol);

}  // namespace acphase
