#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "porism/scene_io.hpp"

using namespace porism;

namespace {

constexpr double kPi = 3.14159265358979323846;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfertile = 2;
constexpr int kExitThreshold = 3;

struct CommonOpts {
    std::string scene_path;
    std::string algorithm = "pedal";
    double inversion_r2 = 0.0; // 0 = use the scene file value
    double tolerance_scale = 1.0;
};

PorismScene load_scene(const CommonOpts& o) {
    SceneFile sf = load_scene_file(o.scene_path);
    if (o.inversion_r2 > 0.0)
        sf.inversion_radius_sq = o.inversion_r2;
    PorismScene scene = make_scene(sf);
    scene.tolerance_scale = o.tolerance_scale;
    return scene;
}

Algorithm parse_algorithm(const std::string& s) {
    const auto alg = algorithm_from_string(s);
    if (!alg)
        throw ValidationError("unknown algorithm: " + s);
    return *alg;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out)
        throw std::runtime_error("failed writing output file: " + path);
}

int cmd_construct(const CommonOpts& o, double start_angle) {
    const PorismScene scene = load_scene(o);
    const Algorithm alg = parse_algorithm(o.algorithm);
    const SweepRecord rec = evaluate_start(scene, alg, start_angle);
    if (rec.outcome == Outcome::Infertile) {
        std::cout << "infertile start\n";
        return kExitInfertile;
    }
    if (rec.outcome == Outcome::Degenerate) {
        std::cerr << "error: degenerate construction at this start angle\n";
        return kExitError;
    }
    std::array<Point, 3> v;
    const Point start = scene.start_point(start_angle);
    switch (alg) {
    case Algorithm::Pedal:
        v = pedal_porism_step(scene, start).vertices;
        break;
    case Algorithm::Polar: {
        const PolarStep st = polar_porism_step(scene, start);
        v = st.vertices;
        std::printf("polar_triangle:\n");
        for (const Point& p : st.polar_vertices)
            std::printf("  %.12g %.12g\n", p.x, p.y);
        break;
    }
    case Algorithm::NegativePedal: {
        const NegativePedalStep st = negative_pedal_porism_step(scene, start);
        v = st.vertices;
        std::printf("negative_pedal_triangle:\n");
        for (const Point& p : st.np_vertices)
            std::printf("  %.12g %.12g\n", p.x, p.y);
        break;
    }
    }
    std::printf("triangle:\n");
    for (const Point& p : v)
        std::printf("  %.12g %.12g\n", p.x, p.y);
    std::printf("tangency_defect: %.12g\n", rec.tangency_defect);
    std::printf("center_err: %.12g\n", rec.center_err);
    std::printf("radius_err: %.12g\n", rec.radius_err);
    std::printf("closure_defect: %.12g\n", rec.closure_defect);
    std::printf("threshold: %.12g\n", scene.defect_threshold());
    return rec.outcome == Outcome::Constructed ? kExitOk : kExitThreshold;
}

int cmd_sweep(const CommonOpts& o, int samples, const std::string& out_path) {
    const PorismScene scene = load_scene(o);
    const PorismSweepReport rep = run_sweep(scene, parse_algorithm(o.algorithm), samples);
    write_file(out_path, report_to_csv(rep));
    std::printf("constructed: %zu  infertile: %zu  degenerate: %zu  failed: %zu\n",
                rep.count(Outcome::Constructed), rep.count(Outcome::Infertile),
                rep.count(Outcome::Degenerate), rep.count(Outcome::Failed));
    return rep.passed() ? kExitOk : kExitThreshold;
}

int cmd_figure(const CommonOpts& o, const std::string& figure_path,
               const std::string& out_path) {
    const PorismScene scene = load_scene(o);
    const FigureSpec spec =
        figure_path.empty() ? FigureSpec{} : load_figure_spec(figure_path);
    write_file(out_path, render_svg(scene, spec));
    return kExitOk;
}

int cmd_verify(const CommonOpts& o, int samples) {
    const PorismScene scene = load_scene(o);
    bool all_ok = true;
    auto report = [&](const char* name, bool ok, double worst) {
        std::printf("[%s] %s (worst defect %.3g, threshold %.3g)\n", ok ? "PASS" : "FAIL", name,
                    worst, scene.defect_threshold());
        all_ok = all_ok && ok;
    };

    for (Algorithm alg : {Algorithm::Pedal, Algorithm::Polar, Algorithm::NegativePedal}) {
        const PorismSweepReport rep = run_sweep(scene, alg, samples);
        double worst = 0;
        for (const SweepRecord& r : rep.records)
            if (r.outcome == Outcome::Constructed || r.outcome == Outcome::Failed)
                worst = std::max({worst, r.tangency_defect, r.center_err, r.radius_err,
                                  r.closure_defect});
        std::string name = std::string("porism sweep: ") + to_string(alg);
        report(name.c_str(), rep.passed() && rep.count(Outcome::Constructed) > 0, worst);

        // Sweep infertility must agree with the fertile-arc computation.
        std::size_t mismatches = 0;
        for (const SweepRecord& r : rep.records) {
            if (r.outcome == Outcome::Degenerate)
                continue;
            if ((r.outcome == Outcome::Infertile) == scene.arcs().contains(r.start_angle))
                ++mismatches;
        }
        name = std::string("infertile-arc agreement: ") + to_string(alg);
        report(name.c_str(), mismatches <= 2 + static_cast<std::size_t>(samples) / 500,
               static_cast<double>(mismatches));
    }

    // Envelope property of the inconic: perpendiculars at pedal-circle points.
    {
        double worst = 0;
        const Circle& e = scene.pedal_circle();
        for (int i = 0; i < 360; ++i) {
            const Point p = e.point_at(2 * kPi * i / 360);
            if (dist(p, scene.pedal_point()) <= scene.tol().eps())
                continue;
            worst = std::max(worst, line_conic_tangency_defect(
                                        perpendicular_at(p, scene.pedal_point()), scene.inconic()));
        }
        report("inconic envelope property", worst < kDefectTol, worst);
    }

    // The two construction routes of the inconic must agree.
    {
        const Conic via_dual = dual_of_conic(circle_as_conic(scene.polar_circle()),
                                             scene.inversion());
        const double diff = (via_dual.matrix() - scene.inconic().matrix()).norm();
        report("inconic closed form vs dual-of-inverse", diff < 1e-9, diff);
    }

    // Inversion-radius independence of the polar construction.
    {
        SceneFile sf = load_scene_file(o.scene_path);
        sf.inversion_radius_sq =
            (o.inversion_r2 > 0.0 ? o.inversion_r2 : sf.inversion_radius_sq) * 100.0;
        const PorismScene rescaled = make_scene(sf);
        double worst = 0;
        bool comparable = false;
        for (int i = 0; i < 8; ++i) {
            const double th = 2 * kPi * i / 8;
            if (!scene.arcs().contains(th))
                continue;
            try {
                const auto t1 = polar_porism_step(scene, scene.start_point(th)).vertices;
                const auto t2 = polar_porism_step(rescaled, rescaled.start_point(th)).vertices;
                for (int j = 0; j < 3; ++j)
                    worst = std::max(worst, dist(t1[j], t2[j]));
                comparable = true;
            } catch (const GeometryError&) {
            }
        }
        report("inversion-radius independence", comparable && worst < 1e-9 * 2 *
                                                                  scene.circumcircle().radius,
               worst);
    }

    return all_ok ? kExitOk : kExitThreshold;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pedal / polar / negative-pedal porism constructions"};
    app.require_subcommand(1);

    CommonOpts opts;
    double start_angle = 0.0;
    int samples = 360;
    std::string out_path;
    std::string figure_path;

    auto add_common = [&](CLI::App* cmd, bool need_algorithm) {
        cmd->add_option("--scene", opts.scene_path, "Scene JSON file")->required();
        if (need_algorithm)
            cmd->add_option("--algorithm", opts.algorithm,
                            "pedal | polar | negative-pedal");
        cmd->add_option("--inversion-r2", opts.inversion_r2,
                        "Override the inversion radius squared");
        cmd->add_option("--tolerance-scale", opts.tolerance_scale,
                        "Multiplier on the defect threshold");
    };

    CLI::App* construct = app.add_subcommand("construct", "Run one porism step");
    add_common(construct, true);
    construct->add_option("--start", start_angle, "Start angle on the circumcircle (radians)")
        ->required();

    CLI::App* sweep = app.add_subcommand("sweep", "Sweep start angles and write a CSV report");
    add_common(sweep, true);
    sweep->add_option("--samples", samples, "Number of uniformly spaced start angles");
    sweep->add_option("--out", out_path, "Output CSV path")->required();

    CLI::App* figure = app.add_subcommand("figure", "Emit an SVG figure");
    add_common(figure, false);
    figure->add_option("--figure", figure_path, "Figure spec JSON (default: draw everything)");
    figure->add_option("--out", out_path, "Output SVG path")->required();

    CLI::App* verify = app.add_subcommand("verify", "Run the verification battery on a scene");
    add_common(verify, false);
    verify->add_option("--samples", samples, "Sweep samples per algorithm");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed())
            return cmd_construct(opts, start_angle);
        if (sweep->parsed())
            return cmd_sweep(opts, samples, out_path);
        if (figure->parsed())
            return cmd_figure(opts, figure_path, out_path);
        if (verify->parsed())
            return cmd_verify(opts, samples);
    } catch (const InfertileStart&) {
        std::cout << "infertile start\n";
        return kExitInfertile;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
