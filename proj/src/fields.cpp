#include "acphase/fields.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "acphase/error.hpp"

namespace acphase {

FieldConfig FieldConfig::uniform(Vec3 E, Vec3 B) {
    FieldConfig f;
    f.kind_ = FieldKind::uniform_e;
    f.uniform_ = {E, B};
    return f;
}

FieldConfig FieldConfig::line_charge(double lambda, Vec2 axis) {
    FieldConfig f;
    f.kind_ = FieldKind::line_charge;
    f.lambda_ = lambda;
    f.axis_ = axis;
    return f;
}

FieldConfig FieldConfig::custom(Sampler sampler) {
    if (!sampler) throw PreconditionError("FieldConfig::custom: empty sampler");
    FieldConfig f;
    f.kind_ = FieldKind::custom;
    f.sampler_ = std::move(sampler);
    return f;
}

std::optional<Vec2> FieldConfig::axis() const {
    if (kind_ == FieldKind::line_charge) return axis_;
    return std::nullopt;
}

FieldSample FieldConfig::at(Vec2 x) const {
    switch (kind_) {
        case FieldKind::uniform_e: return uniform_;
        case FieldKind::line_charge: {
            Vec2 e = line_charge_E(lambda_, {x[0] - axis_[0], x[1] - axis_[1]});
            return {{e[0], e[1], 0.0}, {0.0, 0.0, 0.0}};
        }
        case FieldKind::custom: return sampler_(x);
    }
    return {};
}

double FieldConfig::distance_to_axis(Vec2 x) const {
    if (kind_ != FieldKind::line_charge) return std::numeric_limits<double>::infinity();
    return std::hypot(x[0] - axis_[0], x[1] - axis_[1]);
}

void FieldConfig::require_ac_configuration(std::span<const Vec2> probes) const {
    auto check = [](const FieldSample& s) {
        if (s.B[0] != 0.0 || s.B[1] != 0.0 || s.B[2] != 0.0)
            throw PreconditionError("AC configuration violated: B != 0");
        if (s.E[2] != 0.0) throw PreconditionError("AC configuration violated: E3 != 0");
    };
    switch (kind_) {
        case FieldKind::uniform_e: check(uniform_); break;
        case FieldKind::line_charge: break;  // in-plane radial field, B = 0 by construction
        case FieldKind::custom:
            for (const auto& p : probes) check(sampler_(p));
            break;
    }
}

Vec2 line_charge_E(double lambda, Vec2 x) {
    const double r2 = x[0] * x[0] + x[1] * x[1];
    if (r2 == 0.0) throw PreconditionError("line_charge_E: field is singular on the axis");
    const double k = lambda / (2.0 * std::numbers::pi * r2);
    return {k * x[0], k * x[1]};
}

FieldTensor field_tensor(const Vec3& E, const Vec3& B) {
    FieldTensor F{};
    for (int i = 1; i <= 3; ++i) {
        F[0][static_cast<std::size_t>(i)] = E[static_cast<std::size_t>(i - 1)];
        F[static_cast<std::size_t>(i)][0] = -E[static_cast<std::size_t>(i - 1)];
    }
    // F^{12} = -B3, F^{13} = B2, F^{23} = -B1
    F[1][2] = -B[2];
    F[2][1] = B[2];
    F[1][3] = B[1];
    F[3][1] = -B[1];
    F[2][3] = -B[0];
    F[3][2] = B[0];
    return F;
}

FieldTensor lower_both(const FieldTensor& upper) {
    FieldTensor low{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            low[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                metric(a) * metric(b) * upper[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    return low;
}

// ---------------------------------------------------------------------------
// LoopPath

LoopPath::LoopPath(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) throw PreconditionError("LoopPath: need at least two vertices");
    for (const auto& v : vertices_)
        if (!std::isfinite(v[0]) || !std::isfinite(v[1])) throw PreconditionError("LoopPath: non-finite vertex");
}

LoopPath LoopPath::circle(Vec2 center, double radius, int segments, int winding) {
    if (segments < 3) throw PreconditionError("LoopPath::circle: need at least 3 segments");
    if (!(radius > 0.0)) throw PreconditionError("LoopPath::circle: radius must be positive");
    if (winding == 0) throw PreconditionError("LoopPath::circle: winding must be nonzero");
    const int turns = std::abs(winding);
    const double dir = winding > 0 ? 1.0 : -1.0;
    std::vector<Vec2> v;
    v.reserve(static_cast<std::size_t>(segments * turns + 1));
    for (int k = 0; k < segments * turns; ++k) {
        const double a = dir * 2.0 * std::numbers::pi * (k % segments) / segments;
        v.push_back({center[0] + radius * std::cos(a), center[1] + radius * std::sin(a)});
    }
    v.push_back(v.front());
    return LoopPath(std::move(v));
}

LoopPath LoopPath::rectangle(Vec2 lo, Vec2 hi) {
    if (!(hi[0] > lo[0]) || !(hi[1] > lo[1])) throw PreconditionError("LoopPath::rectangle: empty rectangle");
    return LoopPath({lo, {hi[0], lo[1]}, hi, {lo[0], hi[1]}, lo});
}

bool LoopPath::closed() const { return vertices_.size() >= 2 && vertices_.front() == vertices_.back(); }

int LoopPath::winding_number(Vec2 p) const {
    if (!closed()) throw PreconditionError("winding_number: path is not closed");
    int wn = 0;
    for (std::size_t k = 0; k + 1 < vertices_.size(); ++k) {
        const Vec2& a = vertices_[k];
        const Vec2& b = vertices_[k + 1];
        const double cross = (b[0] - a[0]) * (p[1] - a[1]) - (p[0] - a[0]) * (b[1] - a[1]);
        if (a[1] <= p[1]) {
            if (b[1] > p[1] && cross > 0) ++wn;
        } else {
            if (b[1] <= p[1] && cross < 0) --wn;
        }
    }
    return wn;
}

double LoopPath::distance_to(Vec2 p) const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < vertices_.size(); ++k) {
        const Vec2& a = vertices_[k];
        const Vec2& b = vertices_[k + 1];
        const double dx = b[0] - a[0], dy = b[1] - a[1];
        const double len2 = dx * dx + dy * dy;
        double t = len2 > 0 ? ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        best = std::min(best, std::hypot(a[0] + t * dx - p[0], a[1] + t * dy - p[1]));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Quadrature

namespace {

using Rule = boost::math::quadrature::gauss<double, 10>;

double gauss_panel(const std::function<double(double)>& f, double a, double b) {
    return Rule::integrate(f, a, b);
}

double adaptive(const std::function<double(double)>& f, double a, double b, double whole, double tol,
                int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gauss_panel(f, a, mid);
    const double right = gauss_panel(f, mid, b);
    const double refined = left + right;
    if (std::abs(refined - whole) <= tol || depth >= 40) return refined;
    return adaptive(f, a, mid, left, 0.5 * tol, depth + 1) + adaptive(f, mid, b, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(tol > 0.0)) throw PreconditionError("integrate_adaptive: tol must be positive");
    if (a == b) return 0.0;
    return adaptive(f, a, b, gauss_panel(f, a, b), tol, 0);
}

double line_integral(const PlaneVectorField& A, const LoopPath& path, double tol) {
    const std::size_t n = path.segment_count();
    if (n == 0) return 0.0;
    const double seg_tol = tol / static_cast<double>(n);
    double total = 0.0;
    const auto& v = path.vertices();
    for (std::size_t k = 0; k < n; ++k) {
        const Vec2 a = v[k];
        const Vec2 d{v[k + 1][0] - a[0], v[k + 1][1] - a[1]};
        if (d[0] == 0.0 && d[1] == 0.0) continue;
        auto integrand = [&](double t) {
            const Vec2 f = A({a[0] + t * d[0], a[1] + t * d[1]});
            return f[0] * d[0] + f[1] * d[1];
        };
        total += integrate_adaptive(integrand, 0.0, 1.0, seg_tol);
    }
    return total;
}

double loop_integral(const PlaneVectorField& A, const LoopPath& path, double tol, std::optional<Vec2> avoid) {
    if (!path.closed()) throw PreconditionError("loop_integral: path is not closed");
    if (avoid && path.distance_to(*avoid) <= 1e-12)
        throw PreconditionError("loop_integral: a segment passes through the charge axis");
    return line_integral(A, path, tol);
}

GaussCheckResult gauss_check(const FieldConfig& field, const LoopPath& region, double tol) {
    if (!region.closed()) throw PreconditionError("gauss_check: region boundary is not closed");
    const auto axis = field.axis();
    if (axis && region.distance_to(*axis) <= 1e-12)
        throw PreconditionError("gauss_check: region boundary passes through the charge axis");
    // E . n dl with n dl = (dx2, -dx1) along the path orientation.
    PlaneVectorField rotated = [&](Vec2 x) {
        const Vec3 e = field.electric(x);
        return Vec2{-e[1], e[0]};
    };
    GaussCheckResult out;
    out.flux = line_integral(rotated, region, tol);
    switch (field.kind()) {
        case FieldKind::line_charge:
            out.winding = region.winding_number(*axis);
            out.enclosed_charge = out.winding * field.lambda();
            break;
        case FieldKind::uniform_e: out.enclosed_charge = 0.0; break;
        case FieldKind::custom: out.enclosed_charge = std::numeric_limits<double>::quiet_NaN(); break;
    }
    return out;
}

}  // namespace acphase
