#include "porism/scene_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace porism {

namespace {

constexpr double kPi = 3.14159265358979323846;

using json = nlohmann::ordered_json;

Point parse_point(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError(path + ": expected [x, y]");
    const Point p{j[0].get<double>(), j[1].get<double>()};
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
        throw ParseError(path + ": coordinates must be finite");
    return p;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt_coord(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.5f", v);
    // Avoid "-0.00000" vs "0.00000" nondeterminism across paths.
    if (std::string(buf) == "-0.00000")
        return "0.00000";
    return buf;
}

} // namespace

SceneFile parse_scene_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed scene JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("scene: expected a JSON object");
    SceneFile s;
    if (!j.contains("triangle"))
        throw ParseError("triangle: missing field");
    const auto& tri = j["triangle"];
    if (!tri.is_array() || tri.size() != 3)
        throw ParseError("triangle: expected three vertices");
    for (int i = 0; i < 3; ++i)
        s.triangle[i] = parse_point(tri[i], "triangle[" + std::to_string(i) + "]");
    if (!j.contains("pedal_point"))
        throw ParseError("pedal_point: missing field");
    s.pedal_point = parse_point(j["pedal_point"], "pedal_point");
    if (j.contains("inversion_radius_sq")) {
        if (!j["inversion_radius_sq"].is_number())
            throw ParseError("inversion_radius_sq: expected a number");
        s.inversion_radius_sq = j["inversion_radius_sq"].get<double>();
        if (!(s.inversion_radius_sq > 0.0) || !std::isfinite(s.inversion_radius_sq))
            throw ParseError("inversion_radius_sq: must be positive and finite");
    }
    if (j.contains("labels")) {
        if (!j["labels"].is_object())
            throw ParseError("labels: expected an object");
        for (const auto& [k, v] : j["labels"].items()) {
            if (!v.is_string())
                throw ParseError("labels." + k + ": expected a string");
            s.labels[k] = v.get<std::string>();
        }
    }
    return s;
}

SceneFile load_scene_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open scene file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scene_text(ss.str());
}

std::string scene_to_json(const SceneFile& s) {
    json j;
    j["triangle"] = json::array();
    for (const Point& p : s.triangle)
        j["triangle"].push_back({p.x, p.y});
    j["pedal_point"] = {s.pedal_point.x, s.pedal_point.y};
    j["inversion_radius_sq"] = s.inversion_radius_sq;
    if (!s.labels.empty()) {
        j["labels"] = json::object();
        for (const auto& [k, v] : s.labels)
            j["labels"][k] = v;
    }
    return j.dump(2) + "\n";
}

PorismScene make_scene(const SceneFile& s) {
    Triangle seed = [&] {
        try {
            return Triangle(s.triangle);
        } catch (const DegenerateTriangle&) {
            throw ValidationError("triangle: vertices are collinear");
        }
    }();
    return PorismScene(seed, s.pedal_point, s.inversion_radius_sq);
}

PorismScene parse_scene(const std::string& path_or_text, bool is_path) {
    return make_scene(is_path ? load_scene_file(path_or_text) : parse_scene_text(path_or_text));
}

std::string report_to_csv(const PorismSweepReport& rep) {
    std::string out = "start_angle,outcome,tangency_defect,center_err,radius_err,closure_defect\n";
    for (const SweepRecord& r : rep.records) {
        out += fmt(r.start_angle);
        out += ',';
        out += to_string(r.outcome);
        if (r.outcome == Outcome::Infertile || r.outcome == Outcome::Degenerate) {
            out += ",,,,\n";
            continue;
        }
        out += ',';
        out += fmt(r.tangency_defect);
        out += ',';
        out += fmt(r.center_err);
        out += ',';
        out += fmt(r.radius_err);
        out += ',';
        out += fmt(r.closure_defect);
        out += '\n';
    }
    return out;
}

namespace {

const std::map<std::string, bool FigureSpec::*> kShowFlags = {
    {"circumcircle", &FigureSpec::circumcircle},
    {"pedal_circle", &FigureSpec::pedal_circle},
    {"inconic", &FigureSpec::inconic},
    {"negative_pedal_caustic", &FigureSpec::negative_pedal_caustic},
    {"polar_circle", &FigureSpec::polar_circle},
    {"negative_pedal_circle", &FigureSpec::negative_pedal_circle},
    {"seed_triangle", &FigureSpec::seed_triangle},
    {"fertile_arcs", &FigureSpec::fertile_arcs},
};

} // namespace

FigureSpec parse_figure_spec_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed figure JSON: ") + e.what());
    }
    FigureSpec spec;
    if (j.contains("show")) {
        if (!j["show"].is_array())
            throw ParseError("show: expected an array of object names");
        for (auto& [name, flag] : kShowFlags)
            spec.*flag = false;
        for (const auto& item : j["show"]) {
            if (!item.is_string())
                throw ParseError("show: expected strings");
            const auto it = kShowFlags.find(item.get<std::string>());
            if (it == kShowFlags.end())
                throw ParseError("show: unknown object '" + item.get<std::string>() + "'");
            spec.*(it->second) = true;
        }
    }
    if (j.contains("triangles")) {
        if (!j["triangles"].is_array())
            throw ParseError("triangles: expected an array");
        int i = 0;
        for (const auto& item : j["triangles"]) {
            const std::string path = "triangles[" + std::to_string(i++) + "]";
            if (!item.is_object() || !item.contains("algorithm") || !item.contains("start"))
                throw ParseError(path + ": expected {algorithm, start}");
            FigureSpec::Constructed c;
            const auto alg = algorithm_from_string(item["algorithm"].get<std::string>());
            if (!alg)
                throw ParseError(path + ".algorithm: unknown algorithm");
            c.algorithm = *alg;
            if (!item["start"].is_number())
                throw ParseError(path + ".start: expected a number");
            c.start = item["start"].get<double>();
            if (!(c.start >= 0.0 && c.start < 2 * kPi))
                throw ValidationError(path + ".start: angle must lie in [0, 2*pi)");
            spec.triangles.push_back(c);
        }
    }
    if (j.contains("stroke_width")) {
        if (!j["stroke_width"].is_number())
            throw ParseError("stroke_width: expected a number");
        spec.stroke_width = j["stroke_width"].get<double>();
    }
    return spec;
}

FigureSpec load_figure_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open figure spec: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_figure_spec_text(ss.str());
}

namespace {

struct Bbox {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    void add(Point p) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    void add(const Circle& c) {
        add(Point{c.center.x - c.radius, c.center.y - c.radius});
        add(Point{c.center.x + c.radius, c.center.y + c.radius});
    }
};

class SvgWriter {
public:
    explicit SvgWriter(const Bbox& box) : box_(box) {}

    void circle(const Circle& c, const char* color) {
        body_ += "  <circle cx=\"" + fmt_coord(c.center.x) + "\" cy=\"" + fmt_coord(-c.center.y) +
                 "\" r=\"" + fmt_coord(c.radius) + "\" fill=\"none\" stroke=\"" + color + "\"/>\n";
    }

    void polygon(const std::array<Point, 3>& v, const char* color) {
        body_ += "  <polygon points=\"";
        for (int i = 0; i < 3; ++i) {
            if (i)
                body_ += ' ';
            body_ += fmt_coord(v[i].x) + "," + fmt_coord(-v[i].y);
        }
        body_ += "\" fill=\"none\" stroke=\"";
        body_ += color;
        body_ += "\"/>\n";
    }

    void polyline(const std::vector<Point>& pts, const char* color) {
        if (pts.size() < 2)
            return;
        body_ += "  <polyline points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i)
                body_ += ' ';
            body_ += fmt_coord(pts[i].x) + "," + fmt_coord(-pts[i].y);
        }
        body_ += "\" fill=\"none\" stroke=\"";
        body_ += color;
        body_ += "\"/>\n";
    }

    void arc(const Circle& c, double lo, double hi, const char* color) {
        const Point p0 = c.point_at(lo);
        const Point p1 = c.point_at(hi);
        const bool large = (hi - lo) > kPi;
        // Math-CCW becomes sweep=0 after the y flip.
        body_ += "  <path d=\"M " + fmt_coord(p0.x) + " " + fmt_coord(-p0.y) + " A " +
                 fmt_coord(c.radius) + " " + fmt_coord(c.radius) + " 0 " + (large ? "1" : "0") +
                 " 0 " + fmt_coord(p1.x) + " " + fmt_coord(-p1.y) + "\" fill=\"none\" stroke=\"" +
                 color + "\" stroke-width=\"" + fmt_coord(stroke_ * 2.5) + "\"/>\n";
    }

    std::string finish() const {
        const double w = box_.xmax - box_.xmin;
        const double h = box_.ymax - box_.ymin;
        std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
               fmt_coord(box_.xmin) + " " + fmt_coord(-box_.ymax) + " " + fmt_coord(w) + " " +
               fmt_coord(h) + "\" stroke-width=\"" + fmt_coord(stroke_) + "\">\n";
        out += "  <rect x=\"" + fmt_coord(box_.xmin) + "\" y=\"" + fmt_coord(-box_.ymax) +
               "\" width=\"" + fmt_coord(w) + "\" height=\"" + fmt_coord(h) +
               "\" fill=\"white\" stroke=\"#cccccc\"/>\n";
        out += body_;
        out += "</svg>\n";
        return out;
    }

    double stroke_ = 0.01;

private:
    Bbox box_;
    std::string body_;
};

// Sample a central conic as polyline points; hyperbolas get one polyline per
// branch, clipped to the viewport radius.
std::vector<std::vector<Point>> sample_conic(const Conic& k, Point view_center,
                                             double view_radius, double max_dev) {
    const Conic::Axes ax = k.axes();
    std::vector<std::vector<Point>> curves;
    const Point u = ax.major_dir;
    const Point v = u.perp();
    if (ax.kind == ConicKind::Hyperbola) {
        const double reach = view_radius + dist(ax.center, view_center);
        double smax = std::asinh(std::max(1.0, 2.0 * reach / std::max(ax.b, 1e-12)));
        if (reach > ax.a)
            smax = std::min(smax, std::acosh(2.0 * reach / ax.a + 1.0));
        const int n = 2048;
        for (int sign = -1; sign <= 1; sign += 2) {
            std::vector<Point> branch;
            branch.reserve(n + 1);
            for (int i = 0; i <= n; ++i) {
                const double s = -smax + 2 * smax * i / n;
                branch.push_back(ax.center + sign * ax.a * std::cosh(s) * u +
                                 ax.b * std::sinh(s) * v);
            }
            curves.push_back(std::move(branch));
        }
    } else {
        const double amax = std::max(ax.a, ax.b);
        const double ratio = std::min(1.0, max_dev / amax);
        int n = static_cast<int>(std::ceil(kPi / std::acos(1.0 - ratio)));
        n = std::clamp(n, 64, 8192);
        std::vector<Point> pts;
        pts.reserve(n + 1);
        for (int i = 0; i <= n; ++i) {
            const double t = 2 * kPi * i / n;
            pts.push_back(ax.center + ax.a * std::cos(t) * u + ax.b * std::sin(t) * v);
        }
        curves.push_back(std::move(pts));
    }
    return curves;
}

} // namespace

std::string render_svg(const PorismScene& scene, const FigureSpec& spec) {
    Bbox box;
    box.add(scene.circumcircle());
    if (spec.pedal_circle)
        box.add(scene.pedal_circle());
    if (spec.negative_pedal_circle)
        box.add(scene.negative_pedal_circle());
    if (spec.polar_circle)
        box.add(scene.polar_circle());
    for (const auto& c : spec.triangles)
        if (c.algorithm == Algorithm::NegativePedal)
            box.add(scene.negative_pedal_circle());
    const double diam = std::max(box.xmax - box.xmin, box.ymax - box.ymin);
    const double margin = 0.08 * diam;
    box.add(Point{box.xmin - margin, box.ymin - margin});
    box.add(Point{box.xmax + margin, box.ymax + margin});

    SvgWriter w(box);
    w.stroke_ = spec.stroke_width > 0 ? spec.stroke_width : 0.004 * diam;
    const Point view_center = {(box.xmin + box.xmax) / 2, (box.ymin + box.ymax) / 2};
    const double view_radius = std::hypot(box.xmax - box.xmin, box.ymax - box.ymin) / 2;

    if (spec.circumcircle)
        w.circle(scene.circumcircle(), "#7030a0");
    if (spec.pedal_circle)
        w.circle(scene.pedal_circle(), "#a020a0");
    if (spec.polar_circle)
        w.circle(scene.polar_circle(), "#2e8b57");
    if (spec.negative_pedal_circle)
        w.circle(scene.negative_pedal_circle(), "#e07000");
    if (spec.inconic)
        for (const auto& branch :
             sample_conic(scene.inconic(), view_center, view_radius, 0.001 * diam))
            w.polyline(branch, "#2e8b57");
    if (spec.negative_pedal_caustic)
        for (const auto& branch : sample_conic(scene.negative_pedal_caustic(), view_center,
                                               view_radius, 0.001 * diam))
            w.polyline(branch, "#e07000");
    if (spec.fertile_arcs) {
        // Highlight the infertile complement on the circumcircle.
        const auto& arcs = scene.arcs().intervals;
        std::vector<std::pair<double, double>> gaps;
        if (arcs.empty()) {
            gaps.emplace_back(0.0, 2 * kPi);
        } else {
            for (std::size_t i = 0; i < arcs.size(); ++i) {
                const double lo = arcs[i].second;
                const double hi = i + 1 < arcs.size() ? arcs[i + 1].first : arcs[0].first + 2 * kPi;
                if (hi - lo > 1e-9)
                    gaps.emplace_back(lo, hi);
            }
        }
        for (const auto& [lo, hi] : gaps)
            w.arc(scene.circumcircle(), lo, hi, "#d02020");
    }
    if (spec.seed_triangle)
        w.polygon(scene.seed().vertices(), "#404040");
    for (const auto& c : spec.triangles) {
        try {
            switch (c.algorithm) {
            case Algorithm::Pedal:
                w.polygon(pedal_porism_step(scene, scene.start_point(c.start)).vertices,
                          "#1060c0");
                break;
            case Algorithm::Polar: {
                const PolarStep st = polar_porism_step(scene, scene.start_point(c.start));
                w.polygon(st.vertices, "#1060c0");
                w.polygon(st.polar_vertices, "#2e8b57");
                break;
            }
            case Algorithm::NegativePedal: {
                const NegativePedalStep st =
                    negative_pedal_porism_step(scene, scene.start_point(c.start));
                w.polygon(st.vertices, "#1060c0");
                w.polygon(st.np_vertices, "#e07000");
                break;
            }
            }
        } catch (const InfertileStart&) {
            // Nothing to draw from an infertile start.
        }
    }
    return w.finish();
}

} // namespace porism
