#include "acphase/cli/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "acphase/error.hpp"

namespace acphase::cli {

namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>> kKnownKeys{
    {"scenario", {"name", "spin", "s", "mu", "seed", "tol", "transport_samples"}},
    {"field", {"kind", "lambda", "axis", "E", "B"}},
    {"path", {"shape", "center", "radius", "segments", "winding", "lower_left", "upper_right", "vertices"}},
    {"grid", {"center", "h", "n", "t0"}},
    {"wave", {"mass", "p1", "p2"}},
};

std::vector<double> numbers(const std::string& key, const std::string& text) {
    std::vector<double> out;
    std::istringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ConfigError(key, "not a number: '" + tok + "'");
        if (!std::isfinite(v)) throw ConfigError(key, "value must be finite");
        out.push_back(v);
    }
    return out;
}

double number(const std::string& key, const std::string& text) {
    const auto v = numbers(key, text);
    if (v.size() != 1) throw ConfigError(key, "expected one number");
    return v[0];
}

long long integer(const std::string& key, const std::string& text) {
    const double v = number(key, text);
    if (v != std::floor(v) || std::abs(v) > 9.0e15) throw ConfigError(key, "expected an integer");
    return static_cast<long long>(v);
}

template <std::size_t N>
std::array<double, N> fixed(const std::string& key, const std::string& text) {
    const auto v = numbers(key, text);
    if (v.size() != N) throw ConfigError(key, "expected " + std::to_string(N) + " numbers");
    std::array<double, N> a{};
    for (std::size_t i = 0; i < N; ++i) a[i] = v[i];
    return a;
}

}  // namespace

LoopPath PathSpec::build() const {
    switch (shape) {
        case Shape::circle: return LoopPath::circle(center, radius, segments, winding);
        case Shape::rectangle: return LoopPath::rectangle(lower_left, upper_right);
        case Shape::polygon: {
            std::vector<Vec2> v = vertices;
            if (v.size() < 3) throw ConfigError("path.vertices", "a polygon needs at least three corners");
            if (v.front() != v.back()) v.push_back(v.front());
            return LoopPath::polyline(std::move(v));
        }
    }
    throw ConfigError("path.shape", "unknown shape");
}

FieldConfig Scenario::field() const {
    switch (field_kind) {
        case FieldKind::line_charge: return FieldConfig::line_charge(lambda, axis);
        case FieldKind::uniform_e: return FieldConfig::uniform(E, B);
        case FieldKind::custom: break;
    }
    throw ConfigError("field.kind", "custom fields cannot be described in a scenario file");
}

Scenario parse_scenario(std::istream& in) {
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError("", "line " + std::to_string(e.line()) + ": " + e.message());
    }
    for (const auto& [section, body] : tree) {
        const auto known = kKnownKeys.find(section);
        if (known == kKnownKeys.end()) throw ConfigError(section, "unknown section");
        if (body.empty() && !body.data().empty()) throw ConfigError(section, "key outside of a section");
        for (const auto& [key, value] : body)
            if (!known->second.count(key)) throw ConfigError(section + "." + key, "unknown key");
    }

    Scenario sc;
    auto get = [&](const std::string& key) -> std::optional<std::string> {
        if (auto v = tree.get_optional<std::string>(pt::ptree::path_type(key, '.'))) return *v;
        return std::nullopt;
    };

    if (auto v = get("scenario.name")) sc.name = *v;
    if (auto v = get("scenario.spin")) {
        try {
            sc.spin = spin_from_string(*v);
        } catch (const ConfigError&) {
            throw ConfigError("scenario.spin", "expected 'half' or 'one'");
        }
    }
    if (auto v = get("scenario.s")) sc.s = static_cast<int>(integer("scenario.s", *v));
    if (sc.s < -1 || sc.s > 1 || (sc.spin == Spin::half && sc.s == 0))
        throw ConfigError("scenario.s", "spin label must be -1 or +1 (0 allowed for spin one only)");
    if (auto v = get("scenario.mu")) sc.mu = number("scenario.mu", *v);
    if (auto v = get("scenario.seed")) {
        const long long seed = integer("scenario.seed", *v);
        if (seed < 0) throw ConfigError("scenario.seed", "must be non-negative");
        sc.seed = static_cast<std::uint64_t>(seed);
    }
    if (auto v = get("scenario.tol")) sc.tol = number("scenario.tol", *v);
    if (!(sc.tol > 0.0)) throw ConfigError("scenario.tol", "tolerance must be positive");
    if (auto v = get("scenario.transport_samples"))
        sc.transport_samples = static_cast<int>(integer("scenario.transport_samples", *v));
    if (sc.transport_samples < 0) throw ConfigError("scenario.transport_samples", "must be non-negative");

    if (auto v = get("field.kind")) {
        if (*v == "line_charge") sc.field_kind = FieldKind::line_charge;
        else if (*v == "uniform") sc.field_kind = FieldKind::uniform_e;
        else throw ConfigError("field.kind", "expected 'line_charge' or 'uniform', got '" + *v + "'");
    }
    if (auto v = get("field.lambda")) sc.lambda = number("field.lambda", *v);
    if (auto v = get("field.axis")) sc.axis = fixed<2>("field.axis", *v);
    if (auto v = get("field.E")) sc.E = fixed<3>("field.E", *v);
    if (auto v = get("field.B")) sc.B = fixed<3>("field.B", *v);

    if (auto v = get("path.shape")) {
        if (*v == "circle") sc.path.shape = PathSpec::Shape::circle;
        else if (*v == "rectangle") sc.path.shape = PathSpec::Shape::rectangle;
        else if (*v == "polygon") sc.path.shape = PathSpec::Shape::polygon;
        else throw ConfigError("path.shape", "expected circle, rectangle or polygon, got '" + *v + "'");
    }
    if (auto v = get("path.center")) sc.path.center = fixed<2>("path.center", *v);
    if (auto v = get("path.radius")) sc.path.radius = number("path.radius", *v);
    if (!(sc.path.radius > 0.0)) throw ConfigError("path.radius", "must be positive");
    if (auto v = get("path.segments")) sc.path.segments = static_cast<int>(integer("path.segments", *v));
    if (sc.path.segments < 3) throw ConfigError("path.segments", "need at least 3 segments");
    if (auto v = get("path.winding")) sc.path.winding = static_cast<int>(integer("path.winding", *v));
    if (auto v = get("path.lower_left")) sc.path.lower_left = fixed<2>("path.lower_left", *v);
    if (auto v = get("path.upper_right")) sc.path.upper_right = fixed<2>("path.upper_right", *v);
    if (auto v = get("path.vertices")) {
        const auto xs = numbers("path.vertices", *v);
        if (xs.size() % 2 != 0) throw ConfigError("path.vertices", "expected x y pairs");
        for (std::size_t i = 0; i < xs.size(); i += 2) sc.path.vertices.push_back({xs[i], xs[i + 1]});
    }
    if (sc.path.shape == PathSpec::Shape::polygon && sc.path.vertices.size() < 3)
        throw ConfigError("path.vertices", "a polygon needs at least three corners");
    if (sc.path.shape == PathSpec::Shape::rectangle &&
        !(sc.path.lower_left[0] < sc.path.upper_right[0] && sc.path.lower_left[1] < sc.path.upper_right[1]))
        throw ConfigError("path.upper_right", "must lie above and to the right of path.lower_left");

    if (auto v = get("grid.center")) sc.grid.center = fixed<2>("grid.center", *v);
    if (auto v = get("grid.h")) sc.grid.h = number("grid.h", *v);
    if (!(sc.grid.h > 0.0)) throw ConfigError("grid.h", "must be positive");
    if (auto v = get("grid.n")) sc.grid.n = static_cast<int>(integer("grid.n", *v));
    if (sc.grid.n < 5) throw ConfigError("grid.n", "need at least 5 points per side");
    if (auto v = get("grid.t0")) sc.grid.t0 = number("grid.t0", *v);

    if (auto v = get("wave.mass")) sc.wave.mass = number("wave.mass", *v);
    if (!(sc.wave.mass > 0.0)) throw ConfigError("wave.mass", "must be positive");
    if (auto v = get("wave.p1")) sc.wave.p1 = number("wave.p1", *v);
    if (auto v = get("wave.p2")) sc.wave.p2 = number("wave.p2", *v);
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", "cannot read scenario file '" + path + "'");
    return parse_scenario(in);
}

}  // namespace acphase::cli
