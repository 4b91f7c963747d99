#pragma once

#include <variant>

#include "porism/conic.hpp"
#include "porism/geometry.hpp"

namespace porism {

// Inversion circle centred at the pedal point; also serves as the reference
// circle for pole/polar duality.
struct InversionCircle {
    Point center;
    double radius_sq = 1.0; // k^2 > 0

    Eigen::Matrix3d as_conic_matrix() const {
        Eigen::Matrix3d m;
        m << 1, 0, -center.x,
             0, 1, -center.y,
             -center.x, -center.y, center.norm_sq() - radius_sq;
        return m;
    }
};

Point invert_point(Point p, const InversionCircle& inv, double eps = kEps);

// Circles through the inversion center map to lines.
std::variant<Circle, Line> invert_circle(const Circle& c, const InversionCircle& inv,
                                         double eps = kEps);

// The polar of p: {X : (X - D) . (p - D) = k^2}.
Line polar_of_point(Point p, const InversionCircle& inv, double eps = kEps);
Point pole_of_line(const Line& l, const InversionCircle& inv, double eps = kEps);

// Polar reciprocal: B adj(M) B with B the inversion circle as a conic.
Conic dual_of_conic(const Conic& k, const InversionCircle& inv);

// Closed form for the envelope of perpendiculars at P to PD as P sweeps c:
// conic centred at c.center with focus d, semi-major axis c.radius.
Conic negative_pedal_of_circle(const Circle& c, Point d, double eps = kEps);

} // namespace porism
