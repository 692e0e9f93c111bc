#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "acphase/fields.hpp"
#include "acphase/matrix.hpp"

namespace acphase {

/// Uniform square patch in (x1, x2) of n x n points with spacing h, centred at
/// `center`, sampled on the three time slices t0 - h, t0, t0 + h. Derivatives are
/// taken by second-order central differences on the middle slice.
struct GridSpec {
    Vec2 center{0.0, 0.0};
    double t0 = 0.0;
    double h = 0.05;
    int n = 21;

    double x1(int i) const { return center[0] + (i - 0.5 * (n - 1)) * h; }
    double x2(int j) const { return center[1] + (j - 0.5 * (n - 1)) * h; }
    double t(int slice) const { return t0 + (slice - 1) * h; }
    /// Same patch at half the spacing.
    GridSpec refined() const { return {center, t0, 0.5 * h, 2 * n - 1}; }
    double half_width() const { return 0.5 * (n - 1) * h; }

    /// Throws unless n >= 3, h > 0 and every point stays >= 10h from the
    /// field's singular axis.
    void validate(const FieldConfig& field) const;
};

/// First-order data of a multi-component field at one interior grid point.
/// d[mu] = d/dx^mu for mu = 0,1,2; d_3 vanishes for every field in this project.
struct FieldJet {
    double t = 0.0;
    Vec2 x{};
    NumericVector value;
    std::array<NumericVector, 3> d;
};

class SampledField {
public:
    using PointFn = std::function<NumericVector(double t, Vec2 x)>;

    static SampledField sample(const GridSpec& grid, std::size_t components, const PointFn& fn);

    const GridSpec& grid() const noexcept { return grid_; }
    std::size_t components() const noexcept { return components_; }
    std::span<const Complex> at(int slice, int i, int j) const;

    FieldJet jet(int i, int j) const;

    /// max over interior points of `f(jet)`.
    double max_over_interior(const std::function<double(const FieldJet&)>& f) const;

private:
    GridSpec grid_;
    std::size_t components_ = 0;
    std::vector<Complex> data_;
};

/// log2(r(h) / r(h/2)).
double convergence_order(double residual_h, double residual_half_h);

}  // namespace acphase
