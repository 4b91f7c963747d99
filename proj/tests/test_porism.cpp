#include <doctest.h>

#include "oracles.hpp"

using namespace porism;
using namespace testutil;
using doctest::Approx;

namespace {

PorismScene equilateral_scene() {
    return PorismScene(Triangle(Point{1, 0}, Point{-0.5, std::sqrt(3.0) / 2},
                                Point{-0.5, -std::sqrt(3.0) / 2}),
                       Point{0, 0});
}

// A scene whose inconic is a hyperbola (D between the triangle and the
// circumcircle), so real infertile arcs exist.
PorismScene hyperbolic_scene() {
    Circle unit{{0, 0}, 1};
    return PorismScene(Triangle(unit.point_at(0.0), unit.point_at(2.2), unit.point_at(4.0)),
                       Point{0.55, -0.55});
}

} // namespace

TEST_CASE("fertile_arcs basic cases") {
    Circle unit{{0, 0}, 1};

    // concentric half-radius circle: everything fertile
    FertileArcs full = fertile_arcs(unit, circle_as_conic(Circle{{0, 0}, 0.5}));
    CHECK(full.fraction() == Approx(1.0));
    CHECK(full.contains(1.234));

    // hyperbola x^2 - y^2/3 = 1 is tangent to the unit circle at (+-1, 0);
    // fertility is decided by the interior test at arc midpoints
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    m(0, 0) = 1;
    m(1, 1) = -1.0 / 3.0;
    m(2, 2) = -1;
    FertileArcs h = fertile_arcs(unit, Conic::from_matrix(m));
    for (int i = 0; i < 360; ++i) {
        double th = kTau * i / 360 + 0.001;
        CHECK(h.contains(th) == (tangent_count(unit.point_at(th), Conic::from_matrix(m)) == 2));
    }
}

TEST_CASE("fertile_arcs against a 360-point tangent-count oracle") {
    Rng rng(51);
    for (int i = 0; i < 30; ++i) {
        PorismScene sc = random_scene(rng);
        const FertileArcs& arcs = sc.arcs();
        int mismatches = 0;
        for (int s = 0; s < 360; ++s) {
            double th = kTau * s / 360;
            bool fertile = tangent_count(sc.start_point(th), sc.inconic()) == 2;
            if (arcs.contains(th) != fertile) ++mismatches;
        }
        CHECK(mismatches <= 2); // boundary samples only
        // the seed triangle's vertices are always fertile
        for (const Point& v : sc.seed().vertices())
            CHECK(arcs.contains(sc.circumcircle().angle_of(v)));
    }
}

TEST_CASE("pedal step on the equilateral scene: closed-form family") {
    PorismScene sc = equilateral_scene();
    for (int i = 0; i < 24; ++i) {
        double t = kTau * i / 24;
        auto step = pedal_porism_step(sc, sc.start_point(t));
        Circle c = sc.circumcircle();
        std::array<double, 3> want{t, std::fmod(t + kTau / 3, kTau),
                                   std::fmod(t + 2 * kTau / 3, kTau)};
        for (double w : want) {
            double best = 1e9;
            for (const Point& v : step.vertices) {
                double d = std::abs(c.angle_of(v) - w);
                best = std::min(best, std::min(d, kTau - d));
            }
            CHECK(best < 1e-9);
        }
    }
}

TEST_CASE("pedal step from a seed vertex reproduces the seed") {
    Rng rng(52);
    for (int i = 0; i < 50; ++i) {
        PorismScene sc = random_scene(rng);
        for (const Point& v : sc.seed().vertices()) {
            auto step = pedal_porism_step(sc, v);
            CHECK(triangle_set_dist(Triangle(step.vertices), sc.seed()) <
                  1e-7 * sc.circumcircle().radius);
        }
    }
}

TEST_CASE("pedal step contract at random fertile starts") {
    Rng rng(53);
    for (int i = 0; i < 20; ++i) {
        PorismScene sc = random_scene(rng);
        double R = sc.circumcircle().radius;
        for (int s = 0; s < 50; ++s) {
            double th = fertile_start(sc, rng);
            auto step = pedal_porism_step(sc, sc.start_point(th));
            Triangle t(step.vertices);
            // side opposite the start vertex tangent to the inconic
            for (int k = 0; k < 3; ++k)
                CHECK(line_conic_tangency_defect(t.side(k), sc.inconic()) < 1e-7 * R);
            // foot of D on each side lies on the pedal circle
            for (int k = 0; k < 3; ++k) {
                Point f = foot_of_perpendicular(sc.pedal_point(), t.side(k));
                CHECK(std::abs(dist(f, sc.pedal_circle().center) - sc.pedal_circle().radius) <
                      1e-7 * R);
            }
            // pedal circle of the result equals E_D
            Circle ped = porism::pedal_circle(PedalConfig(t, sc.pedal_point()));
            CHECK(dist(ped.center, sc.pedal_circle().center) < 1e-7 * R);
            CHECK(std::abs(ped.radius - sc.pedal_circle().radius) < 1e-7 * R);
        }
    }
}

TEST_CASE("pedal step throws InfertileStart inside the infertile arc") {
    PorismScene sc = hyperbolic_scene();
    CHECK(sc.inconic().kind() == ConicKind::Hyperbola);
    REQUIRE(sc.arcs().fraction() < 1.0);
    // midpoint of an infertile gap
    double bad = -1;
    for (int i = 0; i < 3600; ++i) {
        double th = kTau * i / 3600;
        if (!sc.arcs().contains(th)) {
            bad = th;
            break;
        }
    }
    REQUIRE(bad >= 0);
    // walk to the middle of the gap for a robust witness
    double end = bad;
    while (end < kTau && !sc.arcs().contains(end)) end += kTau / 3600;
    double mid = (bad + end) / 2;
    CHECK_THROWS_AS(pedal_porism_step(sc, sc.start_point(mid)), InfertileStart);
}

TEST_CASE("polar step contract") {
    Rng rng(54);
    for (int i = 0; i < 20; ++i) {
        PorismScene sc = random_scene(rng, /*inversion_r2=*/1.0);
        double R = sc.circumcircle().radius;
        for (int s = 0; s < 50; ++s) {
            double th = fertile_start(sc, rng);
            auto step = polar_porism_step(sc, sc.start_point(th));
            Triangle abc(step.vertices);
            // A_p lies on the polar circle
            Point ap = step.polar_vertices[0];
            CHECK(std::abs(dist(ap, sc.polar_circle().center) - sc.polar_circle().radius) <
                  1e-7 * R);
            // mutual polarity both directions
            for (int k = 0; k < 3; ++k) {
                Line side = Triangle(step.vertices).side(k);
                // poles computed independently from the labeled arrays
                Line lab = line_through(step.vertices[(k + 1) % 3], step.vertices[(k + 2) % 3]);
                Point pole = pole_of_line(lab, sc.inversion());
                CHECK(dist(pole, step.polar_vertices[k]) < 1e-7 * R);
                Line pol_side = line_through(step.polar_vertices[(k + 1) % 3],
                                             step.polar_vertices[(k + 2) % 3]);
                CHECK(dist(pole_of_line(pol_side, sc.inversion()), step.vertices[k]) < 1e-7 * R);
                (void)side;
            }
            // ABC has the scene's pedal circle; polar sides tangent the caustic
            Circle ped = porism::pedal_circle(PedalConfig(abc, sc.pedal_point()));
            CHECK(dist(ped.center, sc.pedal_circle().center) < 1e-7 * R);
            CHECK(std::abs(ped.radius - sc.pedal_circle().radius) < 1e-7 * R);
            Triangle tp(step.polar_vertices);
            for (int k = 0; k < 3; ++k)
                CHECK(line_conic_tangency_defect(tp.side(k), sc.polar_caustic()) < 1e-7 * R);
        }
    }
}

TEST_CASE("negative-pedal step contract") {
    Rng rng(55);
    for (int i = 0; i < 20; ++i) {
        PorismScene sc = random_scene(rng);
        double R = sc.circumcircle().radius;
        for (int s = 0; s < 50; ++s) {
            double th = fertile_start(sc, rng);
            auto step = negative_pedal_porism_step(sc, sc.start_point(th));
            // A' lies on the negative-pedal circle
            Point a1 = step.np_vertices[0];
            CHECK(std::abs(dist(a1, sc.negative_pedal_circle().center) -
                           sc.negative_pedal_circle().radius) < 1e-7 * R);
            // A'B'C' is the negative-pedal triangle of ABC
            Triangle abc(step.vertices);
            auto np = negative_pedal_vertices(PedalConfig(abc, sc.pedal_point()));
            CHECK(triangle_set_dist(Triangle(np), Triangle(step.np_vertices)) < 1e-7 * R);
            // pedal circle of A'B'C' is the circumcircle
            Circle ped = porism::pedal_circle(
                PedalConfig(Triangle(step.np_vertices), sc.pedal_point()));
            CHECK(dist(ped.center, sc.circumcircle().center) < 1e-7 * R);
            CHECK(std::abs(ped.radius - R) < 1e-7 * R);
            // sides of A'B'C' tangent the negative-pedal caustic
            Triangle tnp(step.np_vertices);
            for (int k = 0; k < 3; ++k)
                CHECK(line_conic_tangency_defect(tnp.side(k), sc.negative_pedal_caustic()) <
                      1e-7 * R);
        }
    }
}

TEST_CASE("algorithm equivalence: pedal and polar steps build the same triangle") {
    Rng rng(56);
    for (int i = 0; i < 100; ++i) {
        PorismScene sc = random_scene(rng);
        double th = fertile_start(sc, rng);
        auto s1 = pedal_porism_step(sc, sc.start_point(th));
        auto s2 = polar_porism_step(sc, sc.start_point(th));
        CHECK(max_vertex_dist(s1.vertices, s2.vertices) < 1e-7 * sc.circumcircle().radius);
    }
}

TEST_CASE("inversion-radius independence of the polar step") {
    Rng rng(57);
    for (int i = 0; i < 50; ++i) {
        Triangle t = random_triangle(rng);
        Point d = random_pedal_point(rng, t);
        PorismScene a(t, d, 1.0), b(t, d, 100.0);
        double th = fertile_start(a, rng);
        auto sa = polar_porism_step(a, a.start_point(th));
        auto sb = polar_porism_step(b, b.start_point(th));
        CHECK(max_vertex_dist(sa.vertices, sb.vertices) < 1e-9 * a.circumcircle().radius);
    }
}

TEST_CASE("run_sweep on the equilateral scene: all constructed") {
    PorismScene sc = equilateral_scene();
    for (Algorithm alg : {Algorithm::Pedal, Algorithm::Polar, Algorithm::NegativePedal}) {
        auto rep = run_sweep(sc, alg, 360);
        CHECK(rep.records.size() == 360);
        CHECK(rep.count(Outcome::Constructed) == 360);
        CHECK(rep.count(Outcome::Infertile) == 0);
        CHECK(rep.passed());
    }
}

TEST_CASE("run_sweep infertile fraction matches arc length") {
    PorismScene sc = hyperbolic_scene();
    auto rep = run_sweep(sc, Algorithm::Pedal, 1000);
    CHECK(rep.passed());
    double measured = rep.infertile_fraction();
    double arc_fraction = 1.0 - sc.arcs().fraction();
    CHECK(std::abs(measured - arc_fraction) < 0.01);
    // classification agrees with arc membership except near boundaries
    int mismatches = 0;
    for (const auto& r : rep.records) {
        if (r.outcome == Outcome::Degenerate || r.outcome == Outcome::Failed) continue;
        bool infertile = r.outcome == Outcome::Infertile;
        if (infertile == sc.arcs().contains(r.start_angle)) ++mismatches;
    }
    CHECK(mismatches <= 4);
}

TEST_CASE("cross_family_consistency on random scenes") {
    Rng rng(58);
    for (int i = 0; i < 20; ++i) {
        PorismScene sc = random_scene(rng);
        double R = sc.circumcircle().radius;
        for (int s = 0; s < 5; ++s) {
            auto rec = cross_family_consistency(sc, sc.start_point(fertile_start(sc, rng)));
            CHECK(rec.np_center_err < 1e-7 * R);
            CHECK(rec.np_radius_err < 1e-7 * R);
            CHECK(rec.max_parallel_defect < 1e-9);
            CHECK(rec.ratio_spread < 1e-7);
            CHECK(rec.circle_ratio_err < 1e-7);
        }
    }
}

TEST_CASE("incenter ground case: incircle family and Euler-Chapple relation") {
    Rng rng(59);
    for (int i = 0; i < 20; ++i) {
        Triangle t = random_triangle(rng);
        PorismScene sc(t, incenter(t));
        double R = sc.circumcircle().radius;
        // the inconic is the incircle: pedal circle tangent to every family
        // member's own three sides
        for (int s = 0; s < 10; ++s) {
            double th = fertile_start(sc, rng);
            Triangle fam(pedal_porism_step(sc, sc.start_point(th)).vertices);
            Conic ped = circle_as_conic(porism::pedal_circle(PedalConfig(fam, sc.pedal_point())));
            for (int k = 0; k < 3; ++k)
                CHECK(line_conic_tangency_defect(fam.side(k), ped) < 1e-7 * R);
            // |OD|^2 = R (R - 2 r) with r the member's own inradius
            double od2 = (sc.circumcircle().center - sc.pedal_point()).norm_sq();
            double rhs = R * (R - 2 * inradius(fam));
            CHECK(std::abs(od2 - rhs) < 1e-7 * R * R);
        }
    }
}
