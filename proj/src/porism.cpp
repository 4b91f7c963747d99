#include "porism/porism.hpp"

#include <algorithm>
#include <cmath>

namespace porism {

namespace {

constexpr double kPi = 3.14159265358979323846;

double wrap_angle(double th) {
    th = std::fmod(th, 2 * kPi);
    if (th < 0.0)
        th += 2 * kPi;
    return th;
}

// Second intersection of a secant through `known`: discard the point nearest
// the known incidence; near-tangent chords are rejected.
Point second_intersection(const Circle& c, const Line& l, Point known, double eps) {
    const double guard = 10.0 * eps;
    const auto pts = circle_line_intersection(c, l, eps);
    if (pts.empty())
        throw DegenerateOutput("secant misses the circle");
    if (pts.size() == 1) {
        if (dist(pts[0], known) <= guard)
            throw DegenerateOutput("tangent chord");
        return pts[0];
    }
    const double d0 = dist(pts[0], known);
    const double d1 = dist(pts[1], known);
    if (d0 <= guard && d1 <= guard)
        throw DegenerateOutput("near-tangent chord");
    return d0 > d1 ? pts[0] : pts[1];
}

Point other_circle_point(const std::vector<Point>& pts, Point known, double eps) {
    const double guard = 10.0 * eps;
    if (pts.empty())
        throw DegenerateOutput("circles do not meet");
    if (pts.size() == 1) {
        if (dist(pts[0], known) <= guard)
            throw DegenerateOutput("tangent circles");
        return pts[0];
    }
    const double d0 = dist(pts[0], known);
    const double d1 = dist(pts[1], known);
    if (d0 <= guard && d1 <= guard)
        throw DegenerateOutput("near-tangent circles");
    return d0 > d1 ? pts[0] : pts[1];
}

double circle_defect(const Circle& c, Point p) {
    return std::abs(dist(p, c.center) - c.radius);
}

} // namespace

const char* to_string(Algorithm a) {
    switch (a) {
    case Algorithm::Pedal: return "pedal";
    case Algorithm::Polar: return "polar";
    case Algorithm::NegativePedal: return "negative-pedal";
    }
    return "unknown";
}

std::optional<Algorithm> algorithm_from_string(const std::string& s) {
    if (s == "pedal")
        return Algorithm::Pedal;
    if (s == "polar")
        return Algorithm::Polar;
    if (s == "negative-pedal" || s == "negative_pedal")
        return Algorithm::NegativePedal;
    return std::nullopt;
}

const char* to_string(Outcome o) {
    switch (o) {
    case Outcome::Constructed: return "constructed";
    case Outcome::Infertile: return "infertile";
    case Outcome::Degenerate: return "degenerate";
    case Outcome::Failed: return "failed";
    }
    return "unknown";
}

bool FertileArcs::contains(double theta) const {
    theta = wrap_angle(theta);
    for (const auto& [lo, hi] : intervals)
        if (theta >= lo && theta < hi)
            return true;
    return false;
}

double FertileArcs::total_length() const {
    double s = 0;
    for (const auto& [lo, hi] : intervals)
        s += hi - lo;
    return s;
}

double FertileArcs::fraction() const { return total_length() / (2 * kPi); }

FertileArcs fertile_arcs(const Circle& c, const Conic& k, double eps) {
    if (!k.non_degenerate())
        throw DegenerateConic();
    std::vector<double> bounds;
    for (const Point& p : circle_conic_intersection(c, k, eps))
        bounds.push_back(c.angle_of(p));
    std::sort(bounds.begin(), bounds.end());

    auto fertile_at = [&](double th) {
        return tangents_from_point(c.point_at(th), k).size() == 2;
    };

    FertileArcs arcs;
    if (bounds.size() < 2) {
        // Tangency or no contact: the whole circle behaves uniformly.
        if (fertile_at(0.37) || fertile_at(2.11))
            arcs.intervals.emplace_back(0.0, 2 * kPi);
        return arcs;
    }
    const std::size_t n = bounds.size();
    std::vector<std::pair<double, double>> fertile;
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = bounds[i];
        const double hi = i + 1 < n ? bounds[i + 1] : bounds[0] + 2 * kPi;
        const double mid = wrap_angle(0.5 * (lo + hi));
        if (fertile_at(mid))
            fertile.emplace_back(lo, hi);
    }
    // Merge contiguous fertile arcs and split at the 2*pi wrap.
    std::vector<std::pair<double, double>> merged;
    for (const auto& iv : fertile) {
        if (!merged.empty() && std::abs(merged.back().second - iv.first) < 1e-12)
            merged.back().second = iv.second;
        else
            merged.push_back(iv);
    }
    if (merged.size() > 1 &&
        std::abs(wrap_angle(merged.back().second) - merged.front().first) < 1e-12) {
        merged.front().first = merged.back().first - 2 * kPi;
        merged.pop_back();
    }
    for (auto [lo, hi] : merged) {
        if (lo < 0.0) {
            arcs.intervals.emplace_back(wrap_angle(lo), 2 * kPi);
            arcs.intervals.emplace_back(0.0, wrap_angle(hi));
        } else if (hi > 2 * kPi) {
            arcs.intervals.emplace_back(lo, 2 * kPi);
            arcs.intervals.emplace_back(0.0, hi - 2 * kPi);
        } else {
            arcs.intervals.emplace_back(lo, hi);
        }
    }
    std::sort(arcs.intervals.begin(), arcs.intervals.end());
    return arcs;
}

PorismScene::PorismScene(Triangle seed, Point pedal_point, double inversion_r2)
    : seed_(seed), inv_{pedal_point, inversion_r2} {
    if (!(inversion_r2 > 0.0) || !std::isfinite(inversion_r2))
        throw ValidationError("inversion radius squared must be positive and finite");
    const PedalConfig cfg(seed_, pedal_point);
    circ_ = cfg.circumcircle;
    pedal_circle_ = porism::pedal_circle(cfg);
    const double eps = tol().eps();
    if (std::abs(dist(pedal_point, pedal_circle_.center) - pedal_circle_.radius) <= eps)
        throw ValidationError("pedal point on its pedal circle");
    inconic_ = negative_pedal_of_circle(pedal_circle_, pedal_point, eps);
    const auto img = invert_circle(pedal_circle_, inv_, eps);
    if (!std::holds_alternative<Circle>(img))
        throw ValidationError("pedal circle passes through the pedal point");
    polar_circle_ = std::get<Circle>(img);
    np_circle_ = porism::negative_pedal_circle(cfg);
    np_caustic_ = negative_pedal_of_circle(circ_, pedal_point, eps);
    polar_caustic_ = dual_of_conic(circle_as_conic(circ_), inv_);
    arcs_ = fertile_arcs(circ_, inconic_, eps);
}

PedalStep pedal_porism_step(const PorismScene& scene, Point start) {
    const double eps = scene.tol().eps();
    const Point d = scene.pedal_point();
    if (circle_defect(scene.circumcircle(), start) > eps)
        throw ValidationError("start point not on the circumcircle");
    const double half = dist(start, d) / 2;
    if (half <= eps)
        throw DegenerateOutput("start at the pedal point");
    const Circle thales{midpoint(start, d), half};
    const auto meets = circle_circle_intersection(thales, scene.pedal_circle(), eps);
    if (meets.empty())
        throw InfertileStart();
    if (meets.size() == 1)
        throw DegenerateOutput("tangential Thales contact");
    for (const Point& p : meets)
        if (dist(p, start) <= 10 * eps)
            throw DegenerateOutput("Thales foot at the start vertex");
    const Point v1 =
        second_intersection(scene.circumcircle(), line_through(start, meets[0], eps), start, eps);
    const Point v2 =
        second_intersection(scene.circumcircle(), line_through(start, meets[1], eps), start, eps);
    if (dist(v1, v2) <= 10 * eps)
        throw DegenerateOutput("constructed vertices coincide");
    PedalStep out;
    out.vertices = {start, v1, v2};
    if ((v1 - start).cross(v2 - start) < 0)
        std::swap(out.vertices[1], out.vertices[2]);
    return out;
}

PolarStep polar_porism_step(const PorismScene& scene, Point start) {
    const double eps = scene.tol().eps();
    if (circle_defect(scene.circumcircle(), start) > eps)
        throw ValidationError("start point not on the circumcircle");
    const InversionCircle& inv = scene.inversion();
    const Line a = polar_of_point(start, inv, eps);
    const auto meets = circle_line_intersection(scene.polar_circle(), a, eps);
    if (meets.empty())
        throw InfertileStart();
    if (meets.size() == 1)
        throw DegenerateOutput("polar tangent to the polar circle");
    // meets[i] is the pole of the side joining start to the vertex its polar
    // cuts out of the circumcircle.
    const Point q0 = meets[0], q1 = meets[1];
    const Point w0 =
        second_intersection(scene.circumcircle(), polar_of_point(q0, inv, eps), start, eps);
    const Point w1 =
        second_intersection(scene.circumcircle(), polar_of_point(q1, inv, eps), start, eps);
    if (dist(w0, w1) <= 10 * eps)
        throw DegenerateOutput("constructed vertices coincide");

    PolarStep out;
    // Arrange {start, B, C} counterclockwise; the pole of side AB is the
    // polar vertex opposite C and vice versa.
    Point b = w0, c = w1, pole_ab = q0, pole_ac = q1;
    if ((b - start).cross(c - start) < 0) {
        std::swap(b, c);
        std::swap(pole_ab, pole_ac);
    }
    Line bc;
    try {
        bc = line_through(b, c, eps);
    } catch (const CoincidentPoints&) {
        throw DegenerateOutput("constructed vertices coincide");
    }
    Point pole_bc;
    try {
        pole_bc = pole_of_line(bc, inv, eps);
    } catch (const LineThroughCenter&) {
        throw DegenerateOutput("closing side through the pedal point");
    }
    out.vertices = {start, b, c};
    out.polar_vertices = {pole_bc, pole_ac, pole_ab};
    return out;
}

NegativePedalStep negative_pedal_porism_step(const PorismScene& scene, Point start) {
    const double eps = scene.tol().eps();
    const Point d = scene.pedal_point();
    if (circle_defect(scene.circumcircle(), start) > eps)
        throw ValidationError("start point not on the circumcircle");
    if (dist(start, d) <= eps)
        throw DegenerateOutput("start at the pedal point");
    const Line aline = perpendicular_at(start, d, eps);
    const auto meets = circle_line_intersection(scene.negative_pedal_circle(), aline, eps);
    if (meets.empty())
        throw InfertileStart();
    if (meets.size() == 1)
        throw DegenerateOutput("tangential contact with the negative-pedal circle");
    // Thales circle on [P, D] passes through start; its second meeting with
    // the circumcircle is the triangle vertex whose negative-pedal side runs
    // through P.
    auto remeet = [&](Point p) {
        const Circle th{midpoint(p, d), dist(p, d) / 2};
        return other_circle_point(circle_circle_intersection(th, scene.circumcircle(), eps),
                                  start, eps);
    };
    Point bp = meets[0], cp = meets[1]; // B', C' candidates
    Point c = remeet(bp);               // circle on [B'D] gives C
    Point b = remeet(cp);               // circle on [C'D] gives B
    if (dist(b, c) <= 10 * eps)
        throw DegenerateOutput("constructed vertices coincide");
    if ((b - start).cross(c - start) < 0) {
        std::swap(b, c);
        std::swap(bp, cp);
    }
    Point ap;
    try {
        ap = line_line_intersection(line_through(b, cp, eps), line_through(c, bp, eps));
    } catch (const GeometryError&) {
        throw DegenerateOutput("negative-pedal apex at infinity");
    }
    NegativePedalStep out;
    out.vertices = {start, b, c};
    out.np_vertices = {ap, bp, cp};
    return out;
}

std::size_t PorismSweepReport::count(Outcome o) const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(),
                      [o](const SweepRecord& r) { return r.outcome == o; }));
}

bool PorismSweepReport::passed() const { return count(Outcome::Failed) == 0; }

double PorismSweepReport::infertile_fraction() const {
    return records.empty() ? 0.0
                           : static_cast<double>(count(Outcome::Infertile)) / records.size();
}

namespace {

double max_side_tangency_defect(const std::array<Point, 3>& v, const Conic& caustic) {
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
        const Line side = line_through(v[(i + 1) % 3], v[(i + 2) % 3]);
        worst = std::max(worst, line_conic_tangency_defect(side, caustic));
    }
    return worst;
}

} // namespace

SweepRecord evaluate_start(const PorismScene& scene, Algorithm alg, double theta) {
    SweepRecord rec;
    rec.start_angle = wrap_angle(theta);
    const Point start = scene.start_point(rec.start_angle);
    const Point d = scene.pedal_point();
    try {
        switch (alg) {
        case Algorithm::Pedal: {
            const PedalStep st = pedal_porism_step(scene, start);
            rec.tangency_defect = max_side_tangency_defect(st.vertices, scene.inconic());
            rec.closure_defect = line_conic_tangency_defect(
                line_through(st.vertices[1], st.vertices[2]), scene.inconic());
            const Circle pc = pedal_circle(PedalConfig(Triangle(st.vertices), d));
            rec.center_err = dist(pc.center, scene.pedal_circle().center);
            rec.radius_err = std::abs(pc.radius - scene.pedal_circle().radius);
            break;
        }
        case Algorithm::Polar: {
            const PolarStep st = polar_porism_step(scene, start);
            rec.tangency_defect =
                max_side_tangency_defect(st.polar_vertices, scene.polar_caustic());
            rec.closure_defect = circle_defect(scene.polar_circle(), st.polar_vertices[0]);
            const Circle pc = pedal_circle(PedalConfig(Triangle(st.vertices), d));
            rec.center_err = dist(pc.center, scene.pedal_circle().center);
            rec.radius_err = std::abs(pc.radius - scene.pedal_circle().radius);
            break;
        }
        case Algorithm::NegativePedal: {
            const NegativePedalStep st = negative_pedal_porism_step(scene, start);
            rec.tangency_defect =
                max_side_tangency_defect(st.np_vertices, scene.negative_pedal_caustic());
            rec.closure_defect =
                circle_defect(scene.negative_pedal_circle(), st.np_vertices[0]);
            const Circle pc = pedal_circle(PedalConfig(Triangle(st.np_vertices), d));
            rec.center_err = dist(pc.center, scene.circumcircle().center);
            rec.radius_err = std::abs(pc.radius - scene.circumcircle().radius);
            break;
        }
        }
        const double thr = scene.defect_threshold();
        const bool ok = rec.tangency_defect < thr && rec.center_err < thr &&
                        rec.radius_err < thr && rec.closure_defect < thr;
        rec.outcome = ok ? Outcome::Constructed : Outcome::Failed;
    } catch (const InfertileStart&) {
        rec.outcome = Outcome::Infertile;
    } catch (const GeometryError&) {
        rec.outcome = Outcome::Degenerate;
    } catch (const ValidationError&) {
        rec.outcome = Outcome::Degenerate;
    }
    return rec;
}

PorismSweepReport run_sweep(const PorismScene& scene, Algorithm alg, int n_samples) {
    if (n_samples < 1)
        throw ValidationError("n_samples must be >= 1");
    PorismSweepReport rep;
    rep.algorithm = alg;
    rep.threshold = scene.defect_threshold();
    rep.records.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i)
        rep.records.push_back(evaluate_start(scene, alg, 2 * kPi * i / n_samples));
    return rep;
}

ConsistencyRecord cross_family_consistency(const PorismScene& scene, Point start) {
    const PedalStep st = pedal_porism_step(scene, start);
    const PedalConfig cfg(Triangle(st.vertices), scene.pedal_point());

    ConsistencyRecord rec;
    const Circle npc = negative_pedal_circle(cfg);
    rec.np_center_err = dist(npc.center, scene.negative_pedal_circle().center);
    rec.np_radius_err = std::abs(npc.radius - scene.negative_pedal_circle().radius);

    const auto npv = negative_pedal_vertices(cfg);
    const auto pv = polar_vertices(cfg, scene.inversion());
    double ratios[3];
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        const Line sn = line_through(npv[j], npv[k]);
        const Line sp = line_through(pv[j], pv[k]);
        rec.max_parallel_defect =
            std::max(rec.max_parallel_defect, std::abs(sn.normal().cross(sp.normal())));
        ratios[i] = dist(npv[j], npv[k]) / dist(pv[j], pv[k]);
    }
    const double mean = (ratios[0] + ratios[1] + ratios[2]) / 3;
    rec.ratio_spread =
        (std::max({ratios[0], ratios[1], ratios[2]}) - std::min({ratios[0], ratios[1], ratios[2]})) /
        mean;
    const Circle pcirc = circumcircle(pv[0], pv[1], pv[2]);
    rec.circle_ratio_err = std::abs(npc.radius / pcirc.radius - mean) / mean;
    return rec;
}

} // namespace porism
