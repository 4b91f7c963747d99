#include "porism/pedal.hpp"

namespace porism {

PedalConfig::PedalConfig(Triangle t, Point d)
    : triangle(t), pedal_point(d), circumcircle(porism::circumcircle(t)) {
    const double eps = tol().eps();
    for (int i = 0; i < 3; ++i) {
        if (std::abs(triangle.side(i).eval(d)) <= eps)
            throw ValidationError("pedal point on side of triangle");
    }
    if (std::abs(dist(d, circumcircle.center) - circumcircle.radius) <= eps)
        throw ValidationError("pedal point on circumcircle");
}

std::array<Point, 3> pedal_feet(const PedalConfig& cfg) {
    std::array<Point, 3> feet;
    for (int i = 0; i < 3; ++i)
        feet[i] = foot_of_perpendicular(cfg.pedal_point, cfg.triangle.side(i));
    return feet;
}

Triangle pedal_triangle(const PedalConfig& cfg) {
    const auto feet = pedal_feet(cfg);
    try {
        return Triangle(feet);
    } catch (const DegenerateTriangle&) {
        throw DegenerateOutput("pedal feet collinear");
    }
}

Circle pedal_circle(const PedalConfig& cfg) {
    const auto feet = pedal_feet(cfg);
    try {
        return circumcircle(feet[0], feet[1], feet[2]);
    } catch (const DegenerateTriangle&) {
        throw DegenerateOutput("pedal feet collinear");
    }
}

Conic inconic_focused(const PedalConfig& cfg) {
    return negative_pedal_of_circle(pedal_circle(cfg), cfg.pedal_point, cfg.tol().eps());
}

std::array<Point, 3> negative_pedal_vertices(const PedalConfig& cfg) {
    const auto& v = cfg.triangle.vertices();
    const Point d = cfg.pedal_point;
    const double eps = cfg.tol().eps();
    std::array<Line, 3> perps;
    for (int i = 0; i < 3; ++i) {
        if (dist(v[i], d) <= eps)
            throw ValidationError("pedal point coincides with a vertex");
        perps[i] = perpendicular_at(v[i], d, eps);
    }
    const double scene = 2.0 * cfg.circumcircle.radius;
    std::array<Point, 3> out;
    for (int i = 0; i < 3; ++i) {
        const Point p = line_line_intersection(perps[(i + 1) % 3], perps[(i + 2) % 3]);
        if (dist(p, cfg.circumcircle.center) > 1e6 * scene)
            throw DegenerateOutput("negative-pedal vertex at infinity");
        out[i] = p;
    }
    return out;
}

Triangle negative_pedal_triangle(const PedalConfig& cfg) {
    try {
        return Triangle(negative_pedal_vertices(cfg));
    } catch (const DegenerateTriangle&) {
        throw DegenerateOutput("negative-pedal triangle degenerate");
    }
}

Circle negative_pedal_circle(const PedalConfig& cfg) {
    const auto v = negative_pedal_vertices(cfg);
    try {
        return circumcircle(v[0], v[1], v[2]);
    } catch (const DegenerateTriangle&) {
        throw DegenerateOutput("negative-pedal triangle degenerate");
    }
}

std::array<Point, 3> polar_vertices(const PedalConfig& cfg, const InversionCircle& inv) {
    std::array<Point, 3> out;
    for (int i = 0; i < 3; ++i)
        out[i] = pole_of_line(cfg.triangle.side(i), inv, cfg.tol().eps());
    return out;
}

Triangle polar_triangle(const PedalConfig& cfg, const InversionCircle& inv) {
    try {
        return Triangle(polar_vertices(cfg, inv));
    } catch (const DegenerateTriangle&) {
        throw DegenerateOutput("polar triangle degenerate");
    }
}

} // namespace porism
