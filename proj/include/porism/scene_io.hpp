#pragma once

#include <map>
#include <string>

#include "porism/porism.hpp"

namespace porism {

// Raw scene file contents before geometric validation.
struct SceneFile {
    std::array<Point, 3> triangle;
    Point pedal_point;
    double inversion_radius_sq = 1.0;
    std::map<std::string, std::string> labels;
};

SceneFile parse_scene_text(const std::string& json_text);
SceneFile load_scene_file(const std::string& path);
std::string scene_to_json(const SceneFile& s);

PorismScene make_scene(const SceneFile& s);
// Convenience: parse + validate; throws ParseError / ValidationError.
PorismScene parse_scene(const std::string& path_or_text, bool is_path = true);

std::string report_to_csv(const PorismSweepReport& rep);

struct FigureSpec {
    bool circumcircle = true;
    bool pedal_circle = true;
    bool inconic = true;
    bool negative_pedal_caustic = false;
    bool polar_circle = false;
    bool negative_pedal_circle = false;
    bool seed_triangle = true;
    bool fertile_arcs = false;
    struct Constructed {
        Algorithm algorithm = Algorithm::Pedal;
        double start = 0.0; // radians, in [0, 2*pi)
    };
    std::vector<Constructed> triangles;
    double stroke_width = 0.0; // 0 = auto (0.4% of scene diameter)
};

FigureSpec parse_figure_spec_text(const std::string& json_text);
FigureSpec load_figure_spec(const std::string& path);

// Deterministic SVG 1.1; circles native, conics as sampled polylines.
std::string render_svg(const PorismScene& scene, const FigureSpec& spec);

} // namespace porism
