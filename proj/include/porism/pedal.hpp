#pragma once

#include "porism/inversion.hpp"

namespace porism {

// Reference triangle plus a pedal point D, with the standing hypothesis that
// D is neither on the sides nor on the circumcircle.
struct PedalConfig {
    PedalConfig(Triangle t, Point d);

    Triangle triangle;
    Point pedal_point;
    Circle circumcircle; // cached at construction

    Tolerances tol() const { return Tolerances{2.0 * circumcircle.radius}; }
};

// Labeled variants keep the index correspondence "vertex i derives from the
// side opposite vertex i"; the Triangle wrappers normalize orientation.
std::array<Point, 3> pedal_feet(const PedalConfig& cfg);
Triangle pedal_triangle(const PedalConfig& cfg);
Circle pedal_circle(const PedalConfig& cfg);

// The inscribed conic with a focus at D (negative-pedal of the pedal circle).
Conic inconic_focused(const PedalConfig& cfg);

std::array<Point, 3> negative_pedal_vertices(const PedalConfig& cfg);
Triangle negative_pedal_triangle(const PedalConfig& cfg);
Circle negative_pedal_circle(const PedalConfig& cfg);

// Vertex i is the pole of the side opposite vertex i w.r.t. inv (centred at D).
std::array<Point, 3> polar_vertices(const PedalConfig& cfg, const InversionCircle& inv);
Triangle polar_triangle(const PedalConfig& cfg, const InversionCircle& inv);

} // namespace porism
