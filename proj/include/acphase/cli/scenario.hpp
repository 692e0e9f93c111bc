#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "acphase/fields.hpp"
#include "acphase/phase_engine.hpp"
#include "acphase/sampled_field.hpp"

namespace acphase::cli {

struct PathSpec {
    enum class Shape { circle, rectangle, polygon };
    Shape shape = Shape::circle;
    Vec2 center{0.0, 0.0};
    double radius = 1.0;
    int segments = 64;
    int winding = 1;
    Vec2 lower_left{-1.0, -1.0};
    Vec2 upper_right{1.0, 1.0};
    std::vector<Vec2> vertices;  ///< polygon corners, closed automatically

    LoopPath build() const;
};

/// One phase-verification run. See docs/scenario_format.md for the file format.
struct Scenario {
    std::string name;
    Spin spin = Spin::one;
    int s = 1;
    double mu = 0.5;
    std::uint64_t seed = 1;
    double tol = 1e-6;        ///< loop-phase tolerance
    int transport_samples = 16;

    FieldKind field_kind = FieldKind::line_charge;
    double lambda = 1.0;
    Vec2 axis{0.0, 0.0};
    Vec3 E{0.0, 0.0, 0.0};
    Vec3 B{0.0, 0.0, 0.0};

    PathSpec path;
    GridSpec grid{{1.5, 0.0}, 0.0, 0.01, 21};
    WaveSpec wave;

    FieldConfig field() const;
};

/// Parses the INI-like scenario text. Throws ConfigError naming the offending
/// section.key for unknown keys, malformed or non-finite numbers and invalid values.
Scenario parse_scenario(std::istream& in);
/// Reads and parses a scenario file; unreadable files raise ConfigError.
Scenario load_scenario(const std::string& path);

}  // namespace acphase::cli
