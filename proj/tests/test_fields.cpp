#include <doctest.h>

#include <cmath>
#include <numbers>

#include "acphase/error.hpp"
#include "acphase/fields.hpp"
#include "acphase/sampled_field.hpp"

using namespace acphase;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("line charge field") {
    const Vec2 e = line_charge_E(2.0, {3.0, 4.0});
    // lambda / (2 pi r^2) * x with r = 5
    CHECK(e[0] == doctest::Approx(2.0 / (2 * pi * 25) * 3.0));
    CHECK(e[1] == doctest::Approx(2.0 / (2 * pi * 25) * 4.0));
    CHECK_THROWS_AS(line_charge_E(1.0, {0.0, 0.0}), PreconditionError);

    const FieldConfig f = FieldConfig::line_charge(1.0, {1.0, -1.0});
    CHECK(f.axis().has_value());
    CHECK(f.distance_to_axis({4.0, 3.0}) == doctest::Approx(5.0));
    CHECK(f.electric({2.0, -1.0})[0] == doctest::Approx(1.0 / (2 * pi)));
    CHECK(f.magnetic({2.0, -1.0})[2] == 0.0);
    CHECK_FALSE(FieldConfig::uniform({1, 0, 0}).axis().has_value());
    CHECK(std::isinf(FieldConfig::uniform({1, 0, 0}).distance_to_axis({0, 0})));
}

TEST_CASE("AC configuration") {
    CHECK_NOTHROW(FieldConfig::uniform({0.3, 0.1, 0.0}).require_ac_configuration());
    CHECK_NOTHROW(FieldConfig::line_charge(2.0).require_ac_configuration());
    CHECK_THROWS_WITH_AS(FieldConfig::uniform({0.3, 0, 0}, {0, 0, 0.1}).require_ac_configuration(),
                         doctest::Contains("B != 0"), PreconditionError);
    CHECK_THROWS_WITH_AS(FieldConfig::uniform({0.3, 0, 0.2}).require_ac_configuration(),
                         doctest::Contains("E3 != 0"), PreconditionError);
    const FieldConfig custom = FieldConfig::custom([](Vec2 x) {
        return FieldSample{{x[0], 0.0, 0.0}, {0.0, 0.0, x[1] > 1.0 ? 1.0 : 0.0}};
    });
    const std::vector<Vec2> inside{{0.0, 0.0}, {0.5, 0.5}};
    const std::vector<Vec2> outside{{0.0, 0.0}, {0.0, 2.0}};
    CHECK_NOTHROW(custom.require_ac_configuration(inside));
    CHECK_THROWS_AS(custom.require_ac_configuration(outside), PreconditionError);
    CHECK_THROWS_AS(FieldConfig::custom(nullptr), PreconditionError);
}

TEST_CASE("field tensor") {
    const FieldTensor F = field_tensor({1.0, 2.0, 3.0}, {4.0, 5.0, 6.0});
    CHECK(F[0][1] == 1.0);
    CHECK(F[0][3] == 3.0);
    CHECK(F[1][0] == -1.0);
    // F^{ij} = -eps_ijk B_k
    CHECK(F[1][2] == -6.0);
    CHECK(F[2][3] == -4.0);
    CHECK(F[1][3] == 5.0);
    for (int a = 0; a < 4; ++a) CHECK(F[a][a] == 0.0);
    const FieldTensor L = lower_both(F);
    CHECK(L[0][1] == -1.0);
    CHECK(L[1][2] == -6.0);
}

TEST_CASE("loop paths") {
    const LoopPath c = LoopPath::circle({0.0, 0.0}, 1.0, 8);
    CHECK(c.closed());
    CHECK(c.segment_count() == 8);
    CHECK(c.winding_number({0.0, 0.0}) == 1);
    CHECK(c.winding_number({2.0, 0.0}) == 0);
    CHECK(LoopPath::circle({0.0, 0.0}, 1.0, 8, -2).winding_number({0.1, 0.2}) == -2);
    CHECK(LoopPath::circle({0.0, 0.0}, 1.0, 8, 3).segment_count() == 24);
    CHECK(c.distance_to({0.0, 0.0}) == doctest::Approx(std::cos(pi / 8)));

    const LoopPath r = LoopPath::rectangle({-1.0, -1.0}, {2.0, 1.0});
    CHECK(r.winding_number({0.0, 0.0}) == 1);
    CHECK(r.distance_to({0.0, 0.0}) == doctest::Approx(1.0));
    const LoopPath open = LoopPath::polyline({{0, 0}, {1, 0}});
    CHECK_FALSE(open.closed());
    CHECK_THROWS_AS(open.winding_number({0, 0}), PreconditionError);
    CHECK_THROWS_AS(LoopPath::circle({0, 0}, 1.0, 2), PreconditionError);
    CHECK_THROWS_AS(LoopPath::circle({0, 0}, -1.0, 8), PreconditionError);
    CHECK_THROWS_AS(LoopPath::rectangle({1, 1}, {0, 2}), PreconditionError);
    CHECK_THROWS_AS(LoopPath::polyline({{0, 0}, {NAN, 1}}), PreconditionError);
}

TEST_CASE("adaptive quadrature") {
    CHECK(integrate_adaptive([](double x) { return x * x * x; }, 0.0, 2.0, 1e-14) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, pi, 1e-13) == doctest::Approx(2.0).epsilon(1e-13));
    // Peaked integrand: 1 / (x^2 + 1e-4) on [-1, 1] = 2 * 100 * atan(100).
    const double peaked = integrate_adaptive([](double x) { return 1.0 / (x * x + 1e-4); }, -1.0, 1.0, 1e-10);
    CHECK(peaked == doctest::Approx(200.0 * std::atan(100.0)).epsilon(1e-12));
    CHECK(integrate_adaptive([](double) { return 1.0; }, 1.0, 1.0, 1e-10) == 0.0);
    CHECK_THROWS_AS(integrate_adaptive([](double) { return 1.0; }, 0.0, 1.0, 0.0), PreconditionError);
}

TEST_CASE("loop integrals of the angular field") {
    // grad(theta) = (-y, x)/r^2 integrates to 2 pi times the winding number.
    const PlaneVectorField grad_theta = [](Vec2 x) {
        const double r2 = x[0] * x[0] + x[1] * x[1];
        return Vec2{-x[1] / r2, x[0] / r2};
    };
    for (const LoopPath& p : {LoopPath::circle({0.2, -0.1}, 1.0, 7), LoopPath::rectangle({-0.5, -2.0}, {3.0, 0.1}),
                              LoopPath::polyline({{-1, -1}, {2, -1}, {0.1, 0.05}, {-1, 1}, {-1, -1}})})
        CHECK(loop_integral(grad_theta, p, 1e-11, Vec2{0, 0}) == doctest::Approx(2 * pi).epsilon(1e-11));
    CHECK(std::abs(loop_integral(grad_theta, LoopPath::circle({3, 0}, 1, 5), 1e-11)) < 1e-11);
    CHECK(loop_integral(grad_theta, LoopPath::circle({0, 0}, 1, 16, -2), 1e-11) == doctest::Approx(-4 * pi));

    // A linear field along an open segment: int_0^1 (x, 0) . (1, 0) dx = 1/2.
    const double open = line_integral([](Vec2 x) { return Vec2{x[0], 0.0}; }, LoopPath::polyline({{0, 0}, {1, 0}}), 1e-14);
    CHECK(open == doctest::Approx(0.5));

    CHECK_THROWS_AS(loop_integral(grad_theta, LoopPath::polyline({{0, 0}, {1, 0}}), 1e-8), PreconditionError);
    CHECK_THROWS_AS(loop_integral(grad_theta, LoopPath::rectangle({0, -1}, {1, 1}), 1e-8, Vec2{0, 0}), PreconditionError);
}

TEST_CASE("gauss law") {
    const FieldConfig f = FieldConfig::line_charge(1.7, {0.5, 0.5});
    GaussCheckResult g = gauss_check(f, LoopPath::circle({0, 0}, 2.0, 9), 1e-12);
    CHECK(g.winding == 1);
    CHECK(g.enclosed_charge == doctest::Approx(1.7));
    CHECK(g.flux == doctest::Approx(1.7).epsilon(1e-11));
    g = gauss_check(f, LoopPath::rectangle({2, 2}, {3, 3}), 1e-12);
    CHECK(g.enclosed_charge == 0.0);
    CHECK(std::abs(g.flux) < 1e-11);
    g = gauss_check(FieldConfig::uniform({0.3, -0.2, 0}), LoopPath::rectangle({0, 0}, {1, 2}), 1e-12);
    CHECK(std::abs(g.flux) < 1e-12);
    CHECK_THROWS_AS(gauss_check(f, LoopPath::rectangle({0.5, 0}, {1, 1}), 1e-8), PreconditionError);
}

TEST_CASE("grids and sampled fields") {
    const GridSpec g{{1.0, 2.0}, 0.5, 0.1, 5};
    CHECK(g.x1(0) == doctest::Approx(0.8));
    CHECK(g.x2(4) == doctest::Approx(2.2));
    CHECK(g.t(0) == doctest::Approx(0.4));
    CHECK(g.half_width() == doctest::Approx(0.2));
    const GridSpec r = g.refined();
    CHECK(r.n == 9);
    CHECK(r.h == 0.05);
    CHECK(r.half_width() == doctest::Approx(g.half_width()));

    CHECK_NOTHROW(g.validate(FieldConfig::line_charge(1.0)));
    CHECK_THROWS_AS(g.validate(FieldConfig::line_charge(1.0, {1.0, 1.5})), PreconditionError);
    CHECK_THROWS_AS((GridSpec{{0, 0}, 0, 0.1, 2}.validate(FieldConfig::uniform({}))), PreconditionError);
    CHECK_THROWS_AS((GridSpec{{0, 0}, 0, -0.1, 5}.validate(FieldConfig::uniform({}))), PreconditionError);

    // Central differences are exact on quadratics.
    const SampledField s = SampledField::sample(g, 2, [](double t, Vec2 x) {
        return NumericVector{Complex(t * t + 3 * x[0] * x[1], 0.0), Complex(0.0, x[0] * x[0])};
    });
    CHECK(s.components() == 2);
    const FieldJet j = s.jet(2, 1);
    CHECK(j.t == doctest::Approx(0.5));
    CHECK(j.x[0] == doctest::Approx(1.0));
    CHECK(j.x[1] == doctest::Approx(1.9));
    CHECK(std::abs(j.d[0][0] - Complex(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(j.d[1][0] - Complex(3 * 1.9, 0.0)) < 1e-12);
    CHECK(std::abs(j.d[2][0] - Complex(3 * 1.0, 0.0)) < 1e-12);
    CHECK(std::abs(j.d[1][1] - Complex(0.0, 2.0)) < 1e-12);
    CHECK_THROWS_AS(s.jet(0, 2), PreconditionError);

    const double mx = s.max_over_interior([](const FieldJet& jet) { return jet.x[0]; });
    CHECK(mx == doctest::Approx(1.1));
    CHECK(s.at(1, 0, 0)[0] == Complex(0.25 + 3 * 0.8 * 1.8, 0.0));
}

TEST_CASE("convergence order") {
    CHECK(convergence_order(4.0, 1.0) == doctest::Approx(2.0));
    CHECK(convergence_order(1.0, 1.0) == doctest::Approx(0.0));
    CHECK(std::isnan(convergence_order(0.0, 0.0)));
}
