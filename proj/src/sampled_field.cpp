#include "acphase/sampled_field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "acphase/error.hpp"

namespace acphase {

void GridSpec::validate(const FieldConfig& field) const {
    if (n < 3) throw PreconditionError("grid: fewer than 3 points per axis");
    if (!(h > 0.0) || !std::isfinite(h)) throw PreconditionError("grid: step must be positive");
    const auto axis = field.axis();
    if (!axis) return;
    // Nearest grid point to the axis (the patch is a square).
    const double w = half_width();
    const Vec2 nearest{std::clamp((*axis)[0], center[0] - w, center[0] + w),
                       std::clamp((*axis)[1], center[1] - w, center[1] + w)};
    if (field.distance_to_axis(nearest) < 10.0 * h)
        throw PreconditionError("grid: patch comes within 10h of the line-charge singularity");
}

SampledField SampledField::sample(const GridSpec& grid, std::size_t components, const PointFn& fn) {
    if (grid.n < 3) throw PreconditionError("grid: fewer than 3 points per axis");
    SampledField f;
    f.grid_ = grid;
    f.components_ = components;
    const auto n = static_cast<std::size_t>(grid.n);
    f.data_.resize(3 * n * n * components);
    for (int slice = 0; slice < 3; ++slice)
        for (int i = 0; i < grid.n; ++i)
            for (int j = 0; j < grid.n; ++j) {
                NumericVector v = fn(grid.t(slice), {grid.x1(i), grid.x2(j)});
                if (v.size() != components) throw DimensionError("SampledField: component count mismatch");
                std::copy(v.begin(), v.end(),
                          f.data_.begin() +
                              static_cast<std::ptrdiff_t>(((static_cast<std::size_t>(slice) * n +
                                                            static_cast<std::size_t>(i)) * n +
                                                           static_cast<std::size_t>(j)) * components));
            }
    return f;
}

std::span<const Complex> SampledField::at(int slice, int i, int j) const {
    const auto n = static_cast<std::size_t>(grid_.n);
    const std::size_t offset =
        ((static_cast<std::size_t>(slice) * n + static_cast<std::size_t>(i)) * n + static_cast<std::size_t>(j)) *
        components_;
    return {data_.data() + offset, components_};
}

FieldJet SampledField::jet(int i, int j) const {
    if (i < 1 || j < 1 || i > grid_.n - 2 || j > grid_.n - 2) throw PreconditionError("jet: not an interior point");
    FieldJet jet;
    jet.t = grid_.t0;
    jet.x = {grid_.x1(i), grid_.x2(j)};
    auto centre = at(1, i, j);
    jet.value.assign(centre.begin(), centre.end());
    const double inv = 1.0 / (2.0 * grid_.h);
    auto diff = [&](std::span<const Complex> plus, std::span<const Complex> minus) {
        NumericVector d(components_);
        for (std::size_t c = 0; c < components_; ++c) d[c] = (plus[c] - minus[c]) * inv;
        return d;
    };
    jet.d[0] = diff(at(2, i, j), at(0, i, j));
    jet.d[1] = diff(at(1, i + 1, j), at(1, i - 1, j));
    jet.d[2] = diff(at(1, i, j + 1), at(1, i, j - 1));
    return jet;
}

double SampledField::max_over_interior(const std::function<double(const FieldJet&)>& f) const {
    double best = 0.0;
    for (int i = 1; i < grid_.n - 1; ++i)
        for (int j = 1; j < grid_.n - 1; ++j) best = std::max(best, f(jet(i, j)));
    return best;
}

double convergence_order(double residual_h, double residual_half_h) {
    if (!(residual_half_h > 0.0) || !(residual_h > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    return std::log2(residual_h / residual_half_h);
}

}  // namespace acphase
