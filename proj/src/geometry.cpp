#include "porism/geometry.hpp"

#include <algorithm>

namespace porism {

namespace {
constexpr double kCanonicalZero = 1e-12;
constexpr double kPi = 3.14159265358979323846;
} // namespace

Line Line::from_coeffs(double a, double b, double c) {
    const double n = std::hypot(a, b);
    if (!(n > 0.0) || !std::isfinite(n))
        throw GeometryError("invalid line coefficients");
    a /= n;
    b /= n;
    c /= n;
    // Canonical sign: first nonzero of (a, b) positive.
    if (a < -kCanonicalZero || (std::abs(a) <= kCanonicalZero && b < 0.0)) {
        a = -a;
        b = -b;
        c = -c;
    }
    Line l;
    l.a_ = a;
    l.b_ = b;
    l.c_ = c;
    return l;
}

double Circle::angle_of(Point p) const {
    double th = std::atan2(p.y - center.y, p.x - center.x);
    if (th < 0.0)
        th += 2 * kPi;
    return th;
}

Triangle::Triangle(Point a, Point b, Point c) : v_{a, b, c} {
    const double area2 = (b - a).cross(c - a);
    const double L = max_side_length();
    if (std::abs(area2) <= 1e-12 * L * L)
        throw DegenerateTriangle();
    if (area2 < 0.0)
        std::swap(v_[1], v_[2]);
}

Line Triangle::side(int i) const {
    return line_through(v_[(i + 1) % 3], v_[(i + 2) % 3]);
}

double Triangle::signed_area() const {
    return 0.5 * (v_[1] - v_[0]).cross(v_[2] - v_[0]);
}

double Triangle::max_side_length() const {
    return std::max({dist(v_[0], v_[1]), dist(v_[1], v_[2]), dist(v_[2], v_[0])});
}

Line line_through(Point p, Point q, double eps) {
    const Point d = q - p;
    if (d.norm() <= eps)
        throw CoincidentPoints();
    // Normal (dy, -dx), offset fixed by incidence with p.
    return Line::from_coeffs(d.y, -d.x, -(d.y * p.x - d.x * p.y));
}

Line perpendicular_at(Point p, Point through, double eps) {
    const Point d = p - through;
    if (d.norm() <= eps)
        throw CoincidentPoints();
    return Line::from_coeffs(d.x, d.y, -(d.x * p.x + d.y * p.y));
}

Point foot_of_perpendicular(Point d, const Line& l) {
    const double h = l.eval(d);
    return d - h * l.normal();
}

Point line_line_intersection(const Line& l1, const Line& l2, double parallel_eps) {
    const double det = l1.a() * l2.b() - l2.a() * l1.b();
    if (std::abs(det) <= parallel_eps)
        throw DegenerateOutput("parallel lines");
    const double x = (l1.b() * l2.c() - l2.b() * l1.c()) / det;
    const double y = (l2.a() * l1.c() - l1.a() * l2.c()) / det;
    return {x, y};
}

Circle circumcircle(Point a, Point b, Point c) {
    const double d = 2.0 * ((b - a).cross(c - a));
    const double L = std::max({dist(a, b), dist(b, c), dist(c, a)});
    if (std::abs(d) <= 2e-12 * L * L)
        throw DegenerateTriangle();
    const double an = a.norm_sq(), bn = b.norm_sq(), cn = c.norm_sq();
    Point center{(an * (b.y - c.y) + bn * (c.y - a.y) + cn * (a.y - b.y)) / d,
                 (an * (c.x - b.x) + bn * (a.x - c.x) + cn * (b.x - a.x)) / d};
    return {center, dist(center, a)};
}

Circle circumcircle(const Triangle& t) {
    return circumcircle(t.a(), t.b(), t.c());
}

Point incenter(const Triangle& t) {
    const double la = dist(t.b(), t.c());
    const double lb = dist(t.c(), t.a());
    const double lc = dist(t.a(), t.b());
    const double s = la + lb + lc;
    return (la * t.a() + lb * t.b() + lc * t.c()) / s;
}

namespace {

void sort_by_angle(std::vector<Point>& pts, const Circle& host) {
    std::sort(pts.begin(), pts.end(), [&](Point p, Point q) {
        return host.angle_of(p) < host.angle_of(q);
    });
}

} // namespace

std::vector<Point> circle_line_intersection(const Circle& c, const Line& l, double eps) {
    const double h = l.eval(c.center);
    const Point foot = c.center - h * l.normal();
    if (std::abs(h) > c.radius + eps)
        return {};
    if (c.radius - std::abs(h) <= eps)
        return {foot}; // tangency
    const double half = std::sqrt(std::max(0.0, c.radius * c.radius - h * h));
    std::vector<Point> out{foot + half * l.direction(), foot - half * l.direction()};
    sort_by_angle(out, c);
    return out;
}

std::vector<Point> circle_circle_intersection(const Circle& c1, const Circle& c2, double eps) {
    const double d = dist(c1.center, c2.center);
    if (d <= eps && std::abs(c1.radius - c2.radius) <= eps)
        throw CoincidentCircles();
    if (d > c1.radius + c2.radius + eps)
        return {};
    if (d < std::abs(c1.radius - c2.radius) - eps)
        return {};
    if (d <= eps)
        return {}; // concentric, distinct radii
    const Point u = (c2.center - c1.center) / d;
    const double a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2 * d);
    const Point base = c1.center + a * u;
    // External or internal tangency.
    if (c1.radius + c2.radius - d <= eps || d - std::abs(c1.radius - c2.radius) <= eps)
        return {base};
    const double h2 = c1.radius * c1.radius - a * a;
    const double h = std::sqrt(std::max(0.0, h2));
    std::vector<Point> out{base + h * u.perp(), base - h * u.perp()};
    sort_by_angle(out, c1);
    return out;
}

} // namespace porism
