#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "porism/geometry.hpp"

namespace porism {

enum class ConicKind { Circle, Ellipse, Parabola, Hyperbola, Degenerate };

const char* to_string(ConicKind k);

// Conic as a symmetric 3x3 homogeneous matrix, stored in canonical form:
// Frobenius norm 1, sign fixed by making the largest-magnitude entry positive.
class Conic {
public:
    Conic() = default; // degenerate until assigned
    static Conic from_matrix(const Eigen::Matrix3d& m);

    const Eigen::Matrix3d& matrix() const { return m_; }
    ConicKind kind() const { return kind_; }
    // Parabolic (near-degenerate for our constructions) counts as unusable.
    bool non_degenerate() const {
        return kind_ != ConicKind::Degenerate && kind_ != ConicKind::Parabola;
    }

    double eval(Point p) const;
    Eigen::Matrix3d adjugate() const;

    struct Axes {
        Point center;
        Point major_dir;   // unit direction of the focal axis
        double a = 0;      // semi major (transverse) axis
        double b = 0;      // semi minor (conjugate) axis
        ConicKind kind = ConicKind::Degenerate;
    };
    // Central-conic geometry; throws DegenerateConic for parabolas/degenerates.
    Axes axes() const;
    std::array<Point, 2> foci() const;

private:
    Eigen::Matrix3d m_ = Eigen::Matrix3d::Zero();
    ConicKind kind_ = ConicKind::Degenerate;
};

Conic conic_from_matrix(const Eigen::Matrix3d& m);
Conic circle_as_conic(const Circle& c);

// |l^T adj(m) l| normalized by |l|^2 * |adj(m)|_F; zero iff l is tangent.
double line_conic_tangency_defect(const Line& l, const Conic& k);

// Tangent lines from p; empty iff p is interior (focal side) to k.
std::vector<Line> tangents_from_point(Point p, const Conic& k);

// Up to four intersection points, sorted by angle on c.  Tan-half-angle
// substitution gives a quartic solved via companion-matrix eigenvalues;
// each real root is polished with Newton steps on the angular form.
std::vector<Point> circle_conic_intersection(const Circle& c, const Conic& k,
                                             double eps = kEps);

} // namespace porism
