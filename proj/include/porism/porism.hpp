#pragma once

#include <optional>
#include <string>
#include <vector>

#include "porism/pedal.hpp"

namespace porism {

enum class Algorithm { Pedal, Polar, NegativePedal };

const char* to_string(Algorithm a);
std::optional<Algorithm> algorithm_from_string(const std::string& s);

// Angular intervals [lo, hi) on a circle, counterclockwise, within [0, 2*pi).
struct FertileArcs {
    std::vector<std::pair<double, double>> intervals;

    bool contains(double theta) const;
    double total_length() const;
    double fraction() const; // of the full circle
};

// Arcs of c whose points admit two tangents to k.
FertileArcs fertile_arcs(const Circle& c, const Conic& k, double eps = kEps);

// A porism scene: seed triangle, pedal point, and all derived objects.
class PorismScene {
public:
    PorismScene(Triangle seed, Point pedal_point, double inversion_r2 = 1.0);

    const Triangle& seed() const { return seed_; }
    Point pedal_point() const { return inv_.center; }
    const InversionCircle& inversion() const { return inv_; }
    const Circle& circumcircle() const { return circ_; }
    const Circle& pedal_circle() const { return pedal_circle_; }          // E_D
    const Circle& polar_circle() const { return polar_circle_; }          // C_p = inverse of E_D
    const Circle& negative_pedal_circle() const { return np_circle_; }    // C_D
    const Conic& inconic() const { return inconic_; }                     // gamma_D
    // Caustic of the negative-pedal family: negative-pedal of the circumcircle.
    const Conic& negative_pedal_caustic() const { return np_caustic_; }   // Gamma_D
    // Caustic touched by the polar-triangle sides: dual of the circumcircle
    // w.r.t. the scene inversion circle (homothetic to the one above; they
    // coincide exactly when k^2 equals the power of D w.r.t. the circumcircle).
    const Conic& polar_caustic() const { return polar_caustic_; }

    PedalConfig pedal_config() const { return PedalConfig(seed_, inv_.center); }
    Tolerances tol() const { return Tolerances{2.0 * circ_.radius}; }
    // Defect threshold for porism contracts: 1e-7 * R (times tolerance_scale).
    double defect_threshold() const { return kDefectTol * circ_.radius * tolerance_scale; }

    Point start_point(double theta) const { return circ_.point_at(theta); }
    // Fertile arcs of the circumcircle w.r.t. the inconic (serves all three
    // algorithms: infertility is membership of the arc inside gamma_D).
    const FertileArcs& arcs() const { return arcs_; }

    double tolerance_scale = 1.0;

private:
    Triangle seed_;
    InversionCircle inv_;
    Circle circ_, pedal_circle_, polar_circle_, np_circle_;
    Conic inconic_, np_caustic_, polar_caustic_;
    FertileArcs arcs_;
};

// Step results carry labeled vertex triples: index 0 is the start vertex;
// companion triangles correspond index-by-index (vertex i derives from the
// side opposite vertex i of the other triangle).
struct PedalStep {
    std::array<Point, 3> vertices; // {A=start, B, C}, counterclockwise
};
struct PolarStep {
    std::array<Point, 3> vertices;       // {A=start, B, C}
    std::array<Point, 3> polar_vertices; // {A_p, B_p, C_p}
};
struct NegativePedalStep {
    std::array<Point, 3> vertices;    // {A=start, B, C}
    std::array<Point, 3> np_vertices; // {A', B', C'}
};

PedalStep pedal_porism_step(const PorismScene& scene, Point start);
PolarStep polar_porism_step(const PorismScene& scene, Point start);
NegativePedalStep negative_pedal_porism_step(const PorismScene& scene, Point start);

enum class Outcome { Constructed, Infertile, Degenerate, Failed };
const char* to_string(Outcome o);

struct SweepRecord {
    double start_angle = 0;
    Outcome outcome = Outcome::Degenerate;
    double tangency_defect = 0;
    double center_err = 0;
    double radius_err = 0;
    double closure_defect = 0;
};

struct PorismSweepReport {
    Algorithm algorithm = Algorithm::Pedal;
    double threshold = 0;
    std::vector<SweepRecord> records;

    std::size_t count(Outcome o) const;
    bool passed() const; // no Failed records
    double infertile_fraction() const;
};

// Evaluate one start angle: run the step and measure all defect metrics.
SweepRecord evaluate_start(const PorismScene& scene, Algorithm alg, double theta);

PorismSweepReport run_sweep(const PorismScene& scene, Algorithm alg, int n_samples);

struct ConsistencyRecord {
    double np_center_err = 0;  // negative-pedal circle of the Alg-1 triangle vs C_D
    double np_radius_err = 0;
    double max_parallel_defect = 0; // |cross of unit normals| over corresponding sides
    double ratio_spread = 0;        // relative spread of the three homothety ratios
    double circle_ratio_err = 0;    // circumcircle ratio vs side-length ratio
};

ConsistencyRecord cross_family_consistency(const PorismScene& scene, Point start);

} // namespace porism
