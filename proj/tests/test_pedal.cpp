#include <doctest.h>

#include "oracles.hpp"

using namespace porism;
using namespace testutil;
using doctest::Approx;

namespace {

Triangle unit_equilateral() {
    return Triangle(Point{1, 0}, Point{-0.5, std::sqrt(3.0) / 2},
                    Point{-0.5, -std::sqrt(3.0) / 2});
}

const Triangle k345{Point{0, 0}, Point{4, 0}, Point{0, 3}};

} // namespace

TEST_CASE("PedalConfig precondition: D on a side or the circumcircle rejected") {
    CHECK_THROWS_AS(PedalConfig(k345, Point{2, 0}), ValidationError);     // on side AB
    CHECK_THROWS_AS(PedalConfig(k345, Point{0, 0}), ValidationError);     // vertex
    CHECK_THROWS_AS(PedalConfig(k345, Point{4.5, 1.5}), ValidationError); // on circumcircle
    CHECK_NOTHROW(PedalConfig(k345, Point{1, 1}));
}

TEST_CASE("pedal triangle of the equilateral w.r.t. the center is medial") {
    PedalConfig cfg(unit_equilateral(), {0, 0});
    auto feet = pedal_feet(cfg);
    for (const Point& f : feet) CHECK(f.norm() == Approx(0.5));
    // feet are the side midpoints
    auto v = cfg.triangle.vertices();
    for (int i = 0; i < 3; ++i) {
        Point mid = midpoint(v[(i + 1) % 3], v[(i + 2) % 3]);
        CHECK(dist(feet[i], mid) < 1e-12);
    }
}

TEST_CASE("pedal circle w.r.t. the incenter is the incircle") {
    Point inc = incenter(k345);
    CHECK(inc.x == Approx(1.0));
    CHECK(inc.y == Approx(1.0));
    Circle ped = pedal_circle(PedalConfig(k345, inc));
    CHECK(dist(ped.center, inc) < 1e-12);
    CHECK(ped.radius == Approx(1.0));
}

TEST_CASE("pedal circle w.r.t. the orthocenter is the nine-point circle") {
    Triangle t{Point{0, 0}, Point{4, 0}, Point{1, 3}};
    Point h = orthocenter(t);
    Circle circ = circumcircle(t);
    PedalConfig cfg(t, h);
    Circle ped = pedal_circle(cfg);
    // oracle: center = midpoint(O, H), radius = R / 2
    CHECK(dist(ped.center, midpoint(circ.center, h)) < 1e-9);
    CHECK(ped.radius == Approx(circ.radius / 2).epsilon(1e-9));
}

TEST_CASE("inconic: tangent to all three sides; incircle cases") {
    PedalConfig eq(unit_equilateral(), {0, 0});
    Conic inc = inconic_focused(eq);
    CHECK(inc.kind() == ConicKind::Circle);
    CHECK((inc.matrix() - circle_as_conic(Circle{{0, 0}, 0.5}).matrix()).norm() < 1e-9);

    PedalConfig c345(k345, incenter(k345));
    Conic inc2 = inconic_focused(c345);
    CHECK((inc2.matrix() - circle_as_conic(Circle{{1, 1}, 1}).matrix()).norm() < 1e-9);

    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        PorismScene sc = random_scene(rng);
        PedalConfig cfg = sc.pedal_config();
        Conic g = inconic_focused(cfg);
        for (int s = 0; s < 3; ++s)
            CHECK(line_conic_tangency_defect(cfg.triangle.side(s), g) < 1e-7);
        // one focus of the inconic is the pedal point
        auto f = g.foci();
        CHECK(std::min(dist(f[0], cfg.pedal_point), dist(f[1], cfg.pedal_point)) < 1e-7);
    }
}

TEST_CASE("negative-pedal triangle: tangential and anticomplementary cases") {
    // D = circumcenter -> tangential triangle: each side at distance R from O
    Triangle t{Point{0, 0}, Point{4, 0}, Point{1, 3}};
    Circle circ = circumcircle(t);
    PedalConfig cfg(t, circ.center);
    Triangle tang = negative_pedal_triangle(cfg);
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(tang.side(i).eval(circ.center)) == Approx(circ.radius).epsilon(1e-9));

    // equilateral, D = center: circumscribed equilateral, circumradius 2
    PedalConfig eq(unit_equilateral(), {0, 0});
    Circle npc = negative_pedal_circle(eq);
    CHECK(npc.center.norm() < 1e-9);
    CHECK(npc.radius == Approx(2.0));

    // D = orthocenter -> anticomplementary triangle (vertices B + C - A, ...)
    Point h = orthocenter(t);
    PedalConfig cfg_h(t, h);
    auto np = negative_pedal_vertices(cfg_h);
    auto v = t.vertices();
    for (int i = 0; i < 3; ++i) {
        Point anti = v[(i + 1) % 3] + v[(i + 2) % 3] - v[i];
        CHECK(dist(np[i], anti) < 1e-9);
    }
}

TEST_CASE("pedal triangle of the negative-pedal triangle is the original") {
    Rng rng(42);
    for (int i = 0; i < 100; ++i) {
        PorismScene sc = random_scene(rng);
        PedalConfig cfg = sc.pedal_config();
        Triangle np = negative_pedal_triangle(cfg);
        Circle back = pedal_circle(PedalConfig(np, cfg.pedal_point));
        Circle circ = cfg.circumcircle;
        CHECK(dist(back.center, circ.center) < 1e-7 * circ.radius);
        CHECK(std::abs(back.radius - circ.radius) < 1e-7 * circ.radius);
    }
}

TEST_CASE("polar triangle: equilateral scale and mutual polarity") {
    PedalConfig eq(unit_equilateral(), {0, 0});
    InversionCircle inv{{0, 0}, 1.0};
    auto pv = polar_vertices(eq, inv);
    // sides of the equilateral are at distance 1/2 from the center, so the
    // poles sit at distance k^2 / (1/2) = 2
    for (const Point& p : pv) CHECK(p.norm() == Approx(2.0));

    Rng rng(43);
    for (int i = 0; i < 100; ++i) {
        PorismScene sc = random_scene(rng);
        PedalConfig cfg = sc.pedal_config();
        InversionCircle ic = sc.inversion();
        auto poles = polar_vertices(cfg, ic);
        Triangle tp(poles);
        // mutual polarity: poles of the polar triangle's sides recover the
        // original vertices (as a set; Triangle() may relabel for orientation)
        auto back = polar_vertices(PedalConfig(tp, cfg.pedal_point), ic);
        CHECK(triangle_set_dist(Triangle(back), cfg.triangle) < 1e-7);

        // circumcircle of the polar triangle inverts to the pedal circle
        auto img = invert_circle(circumcircle(tp), ic);
        REQUIRE(std::holds_alternative<Circle>(img));
        Circle ped = porism::pedal_circle(cfg);
        CHECK(dist(std::get<Circle>(img).center, ped.center) < 1e-7 * ped.radius);
        CHECK(std::abs(std::get<Circle>(img).radius - ped.radius) < 1e-7 * ped.radius);

        // lines D -> polar vertices hit the matching sides at the pedal feet
        auto feet = pedal_feet(cfg);
        for (int s = 0; s < 3; ++s) {
            Line ray = line_through(cfg.pedal_point, poles[s]);
            Point hit = line_line_intersection(ray, cfg.triangle.side(s));
            CHECK(dist(hit, feet[s]) < 1e-7);
        }
    }
}

TEST_CASE("homothety of negative-pedal and polar triangles") {
    Rng rng(44);
    for (int i = 0; i < 100; ++i) {
        PorismScene sc = random_scene(rng);
        PedalConfig cfg = sc.pedal_config();
        auto np = negative_pedal_vertices(cfg);
        auto pv = polar_vertices(cfg, sc.inversion());
        // corresponding sides parallel
        std::array<double, 3> ratios{};
        for (int s = 0; s < 3; ++s) {
            Point e_np = np[(s + 2) % 3] - np[(s + 1) % 3];
            Point e_pv = pv[(s + 2) % 3] - pv[(s + 1) % 3];
            CHECK(std::abs(e_np.cross(e_pv)) / (e_np.norm() * e_pv.norm()) < 1e-9);
            ratios[s] = e_np.norm() / e_pv.norm();
        }
        double spread = (*std::max_element(ratios.begin(), ratios.end()) -
                         *std::min_element(ratios.begin(), ratios.end())) /
                        ratios[0];
        CHECK(spread < 1e-7);
    }
}

TEST_CASE("pedal-circle characterization: tangent triangles share the pedal circle") {
    Rng rng(45);
    for (int i = 0; i < 50; ++i) {
        PorismScene sc = random_scene(rng);
        Circle ped = sc.pedal_circle();
        // pick three distinct tangent lines of gamma_D from fertile points
        double t0 = fertile_start(sc, rng);
        Triangle fam = Triangle(pedal_porism_step(sc, sc.start_point(t0)).vertices);
        for (int s = 0; s < 3; ++s)
            CHECK(line_conic_tangency_defect(fam.side(s), sc.inconic()) < 1e-7);
        Circle ped2 = porism::pedal_circle(PedalConfig(fam, sc.pedal_point()));
        CHECK(dist(ped2.center, ped.center) < 1e-7 * sc.circumcircle().radius);
        CHECK(std::abs(ped2.radius - ped.radius) < 1e-7 * sc.circumcircle().radius);
    }
}
