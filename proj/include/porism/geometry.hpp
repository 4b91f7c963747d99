#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "porism/errors.hpp"

namespace porism {

// Primitive predicate tolerance at unit scene scale; chained constructions
// are judged against the looser defect tolerance (both scale with the scene).
inline constexpr double kEps = 1e-9;
inline constexpr double kDefectTol = 1e-7;

struct Tolerances {
    double scene_diameter = 1.0;
    double eps() const { return kEps * scene_diameter; }
    double defect() const { return kDefectTol * scene_diameter; }
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point operator+(Point o) const { return {x + o.x, y + o.y}; }
    Point operator-(Point o) const { return {x - o.x, y - o.y}; }
    Point operator*(double s) const { return {x * s, y * s}; }
    Point operator/(double s) const { return {x / s, y / s}; }
    Point operator-() const { return {-x, -y}; }

    double dot(Point o) const { return x * o.x + y * o.y; }
    double cross(Point o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    double norm_sq() const { return x * x + y * y; }
    Point perp() const { return {-y, x}; }
};

inline Point operator*(double s, Point p) { return p * s; }
inline double dist(Point p, Point q) { return (p - q).norm(); }
inline Point midpoint(Point p, Point q) { return {(p.x + q.x) / 2, (p.y + q.y) / 2}; }

// Normalized line a x + b y + c = 0 with a^2 + b^2 = 1 and the first nonzero
// of (a, b) positive.
class Line {
public:
    Line() = default; // invalid until assigned from from_coeffs
    static Line from_coeffs(double a, double b, double c);

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    std::array<double, 3> coeffs() const { return {a_, b_, c_}; }

    // Signed distance of p (the normal is unit length).
    double eval(Point p) const { return a_ * p.x + b_ * p.y + c_; }
    Point normal() const { return {a_, b_}; }
    Point direction() const { return {-b_, a_}; }
    // A point on the line (the foot of the origin).
    Point some_point() const { return {-a_ * c_, -b_ * c_}; }

private:
    double a_ = 0, b_ = 0, c_ = 0;
};

struct Circle {
    Point center;
    double radius = 1.0;

    Point point_at(double theta) const {
        return {center.x + radius * std::cos(theta), center.y + radius * std::sin(theta)};
    }
    // Angle of p as seen from the center, in [0, 2*pi).
    double angle_of(Point p) const;
};

class Triangle {
public:
    // Normalizes to counterclockwise orientation by swapping the last two
    // vertices if needed; throws DegenerateTriangle on (near-)collinearity.
    Triangle(Point a, Point b, Point c);
    explicit Triangle(const std::array<Point, 3>& v) : Triangle(v[0], v[1], v[2]) {}

    const Point& a() const { return v_[0]; }
    const Point& b() const { return v_[1]; }
    const Point& c() const { return v_[2]; }
    const std::array<Point, 3>& vertices() const { return v_; }

    // Side opposite vertex i (side(0) is line BC, etc.).
    Line side(int i) const;
    std::array<Line, 3> sides() const { return {side(0), side(1), side(2)}; }

    double signed_area() const;
    double max_side_length() const;

private:
    std::array<Point, 3> v_;
};

Line line_through(Point p, Point q, double eps = kEps);
// Line through p perpendicular to the segment (through, p).
Line perpendicular_at(Point p, Point through, double eps = kEps);
Point foot_of_perpendicular(Point d, const Line& l);
// Throws DegenerateOutput when the lines are (near-)parallel.
Point line_line_intersection(const Line& l1, const Line& l2, double parallel_eps = 1e-12);

Circle circumcircle(Point a, Point b, Point c);
Circle circumcircle(const Triangle& t);
Point incenter(const Triangle& t);

// Two-point results are ordered by angle about the first curve's center.
std::vector<Point> circle_line_intersection(const Circle& c, const Line& l, double eps = kEps);
std::vector<Point> circle_circle_intersection(const Circle& c1, const Circle& c2,
                                              double eps = kEps);

} // namespace porism
