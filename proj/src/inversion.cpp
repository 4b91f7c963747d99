#include "porism/inversion.hpp"

namespace porism {

Point invert_point(Point p, const InversionCircle& inv, double eps) {
    const Point v = p - inv.center;
    const double r2 = v.norm_sq();
    if (r2 <= eps * eps)
        throw CenterInversion();
    return inv.center + v * (inv.radius_sq / r2);
}

std::variant<Circle, Line> invert_circle(const Circle& c, const InversionCircle& inv,
                                         double eps) {
    const double d = dist(c.center, inv.center);
    if (std::abs(d - c.radius) <= eps) {
        // Circle through the center: image is a line.  Invert two sample
        // points far from the center.
        const Point u = d > eps ? (c.center - inv.center) / d : Point{1, 0};
        const Point far = c.center + c.radius * u;
        const Point side = c.center + c.radius * u.perp();
        return line_through(invert_point(far, inv, eps), invert_point(side, inv, eps));
    }
    const double power = d * d - c.radius * c.radius;
    const double s = inv.radius_sq / power;
    return Circle{inv.center + s * (c.center - inv.center), std::abs(s) * c.radius};
}

Line polar_of_point(Point p, const InversionCircle& inv, double eps) {
    const Point v = p - inv.center;
    if (v.norm() <= eps)
        throw CenterInversion();
    return Line::from_coeffs(v.x, v.y, -(v.x * inv.center.x + v.y * inv.center.y + inv.radius_sq));
}

Point pole_of_line(const Line& l, const InversionCircle& inv, double eps) {
    const double h = l.eval(inv.center);
    if (std::abs(h) <= eps)
        throw LineThroughCenter();
    return inv.center - (inv.radius_sq / h) * l.normal();
}

Conic dual_of_conic(const Conic& k, const InversionCircle& inv) {
    if (!k.non_degenerate())
        throw DegenerateConic();
    const Eigen::Matrix3d b = inv.as_conic_matrix();
    return Conic::from_matrix(b * k.adjugate() * b);
}

Conic negative_pedal_of_circle(const Circle& c, Point d, double eps) {
    const Point ev = d - c.center;
    const double e = ev.norm();
    if (e <= eps)
        return circle_as_conic(c); // perpendicular at P to the radius is the tangent
    if (std::abs(e - c.radius) <= eps)
        throw PointOnCircle();
    const Point u = ev / e;
    const double r = c.radius;
    Eigen::Matrix3d m0 = Eigen::Matrix3d::Zero();
    m0(0, 0) = 1.0 / (r * r);
    m0(2, 2) = -1.0;
    if (e < r)
        m0(1, 1) = 1.0 / (r * r - e * e); // ellipse, b^2 = r^2 - e^2
    else
        m0(1, 1) = -1.0 / (e * e - r * r); // hyperbola, b^2 = e^2 - r^2
    // Frame with origin at the circle center, x-axis along the diameter
    // through d; conjugate the frame matrix back to world coordinates.
    Eigen::Matrix3d t;
    t << u.x, u.y, -(u.x * c.center.x + u.y * c.center.y),
        -u.y, u.x, (u.y * c.center.x - u.x * c.center.y),
        0, 0, 1;
    return Conic::from_matrix(t.transpose() * m0 * t);
}

} // namespace porism
