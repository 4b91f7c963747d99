#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "porism/scene_io.hpp"

namespace py = pybind11;
using namespace porism;

namespace {

std::array<std::array<double, 3>, 3> matrix_rows(const Conic& k) {
    std::array<std::array<double, 3>, 3> rows;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            rows[i][j] = k.matrix()(i, j);
    return rows;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Pedal, polar and negative-pedal porism constructions";

    py::register_exception<GeometryError>(m, "GeometryError");
    py::register_exception<InfertileStart>(m, "InfertileStartError");
    py::register_exception<ParseError>(m, "SceneParseError");
    py::register_exception<ValidationError>(m, "SceneValidationError");

    py::class_<Point>(m, "Point")
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def_readwrite("x", &Point::x)
        .def_readwrite("y", &Point::y)
        .def("__repr__", [](Point p) {
            return "Point(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
        });

    py::class_<Line>(m, "Line")
        .def_static("from_coeffs", &Line::from_coeffs)
        .def_property_readonly("a", &Line::a)
        .def_property_readonly("b", &Line::b)
        .def_property_readonly("c", &Line::c)
        .def("eval", &Line::eval);

    py::class_<Circle>(m, "Circle")
        .def(py::init([](Point c, double r) { return Circle{c, r}; }),
             py::arg("center"), py::arg("radius"))
        .def_readwrite("center", &Circle::center)
        .def_readwrite("radius", &Circle::radius)
        .def("point_at", &Circle::point_at)
        .def("angle_of", &Circle::angle_of);

    py::class_<Triangle>(m, "Triangle")
        .def(py::init<Point, Point, Point>())
        .def_property_readonly("vertices", &Triangle::vertices)
        .def("signed_area", &Triangle::signed_area);

    py::enum_<ConicKind>(m, "ConicKind")
        .value("circle", ConicKind::Circle)
        .value("ellipse", ConicKind::Ellipse)
        .value("parabola", ConicKind::Parabola)
        .value("hyperbola", ConicKind::Hyperbola)
        .value("degenerate", ConicKind::Degenerate);

    py::class_<Conic>(m, "Conic")
        .def_property_readonly("kind", &Conic::kind)
        .def_property_readonly("matrix", &matrix_rows)
        .def("eval", &Conic::eval);

    py::class_<InversionCircle>(m, "InversionCircle")
        .def(py::init([](Point c, double r2) { return InversionCircle{c, r2}; }),
             py::arg("center"), py::arg("radius_sq") = 1.0)
        .def_readwrite("center", &InversionCircle::center)
        .def_readwrite("radius_sq", &InversionCircle::radius_sq);

    m.def("line_through", &line_through, py::arg("p"), py::arg("q"), py::arg("eps") = kEps);
    m.def("perpendicular_at", &perpendicular_at, py::arg("p"), py::arg("through"),
          py::arg("eps") = kEps);
    m.def("foot_of_perpendicular", &foot_of_perpendicular);
    m.def("circumcircle", py::overload_cast<const Triangle&>(&circumcircle));
    m.def("incenter", &incenter);
    m.def("circle_line_intersection", &circle_line_intersection, py::arg("c"), py::arg("l"),
          py::arg("eps") = kEps);
    m.def("circle_circle_intersection", &circle_circle_intersection, py::arg("c1"),
          py::arg("c2"), py::arg("eps") = kEps);
    m.def("circle_as_conic", &circle_as_conic);
    m.def("line_conic_tangency_defect", &line_conic_tangency_defect);
    m.def("tangents_from_point", &tangents_from_point);
    m.def("circle_conic_intersection", &circle_conic_intersection, py::arg("c"), py::arg("k"),
          py::arg("eps") = kEps);
    m.def("invert_point", &invert_point, py::arg("p"), py::arg("inv"), py::arg("eps") = kEps);
    m.def("invert_circle", &invert_circle, py::arg("c"), py::arg("inv"), py::arg("eps") = kEps);
    m.def("polar_of_point", &polar_of_point, py::arg("p"), py::arg("inv"), py::arg("eps") = kEps);
    m.def("pole_of_line", &pole_of_line, py::arg("l"), py::arg("inv"), py::arg("eps") = kEps);
    m.def("dual_of_conic", &dual_of_conic);
    m.def("negative_pedal_of_circle", &negative_pedal_of_circle, py::arg("c"), py::arg("d"),
          py::arg("eps") = kEps);

    py::class_<PedalConfig>(m, "PedalConfig")
        .def(py::init<Triangle, Point>(), py::arg("triangle"), py::arg("pedal_point"));
    m.def("pedal_feet", &pedal_feet);
    m.def("pedal_triangle", &pedal_triangle);
    m.def("pedal_circle", &pedal_circle);
    m.def("inconic_focused", &inconic_focused);
    m.def("negative_pedal_triangle", &negative_pedal_triangle);
    m.def("negative_pedal_circle", &negative_pedal_circle);
    m.def("polar_triangle", &polar_triangle);

    py::enum_<Algorithm>(m, "Algorithm")
        .value("pedal", Algorithm::Pedal)
        .value("polar", Algorithm::Polar)
        .value("negative_pedal", Algorithm::NegativePedal);

    py::enum_<Outcome>(m, "Outcome")
        .value("constructed", Outcome::Constructed)
        .value("infertile", Outcome::Infertile)
        .value("degenerate", Outcome::Degenerate)
        .value("failed", Outcome::Failed);

    py::class_<FertileArcs>(m, "FertileArcs")
        .def_readonly("intervals", &FertileArcs::intervals)
        .def("contains", &FertileArcs::contains)
        .def("total_length", &FertileArcs::total_length)
        .def("fraction", &FertileArcs::fraction);
    m.def("fertile_arcs", &fertile_arcs, py::arg("c"), py::arg("k"), py::arg("eps") = kEps);

    py::class_<PorismScene>(m, "PorismScene")
        .def(py::init<Triangle, Point, double>(), py::arg("seed"), py::arg("pedal_point"),
             py::arg("inversion_r2") = 1.0)
        .def_property_readonly("circumcircle", &PorismScene::circumcircle)
        .def_property_readonly("pedal_circle", &PorismScene::pedal_circle)
        .def_property_readonly("polar_circle", &PorismScene::polar_circle)
        .def_property_readonly("negative_pedal_circle", &PorismScene::negative_pedal_circle)
        .def_property_readonly("inconic", &PorismScene::inconic)
        .def_property_readonly("negative_pedal_caustic", &PorismScene::negative_pedal_caustic)
        .def_property_readonly("polar_caustic", &PorismScene::polar_caustic)
        .def_property_readonly("pedal_point", &PorismScene::pedal_point)
        .def_property_readonly("arcs", &PorismScene::arcs)
        .def("start_point", &PorismScene::start_point)
        .def_readwrite("tolerance_scale", &PorismScene::tolerance_scale)
        .def_property_readonly("defect_threshold", &PorismScene::defect_threshold);

    py::class_<PedalStep>(m, "PedalStep").def_readonly("vertices", &PedalStep::vertices);
    py::class_<PolarStep>(m, "PolarStep")
        .def_readonly("vertices", &PolarStep::vertices)
        .def_readonly("polar_vertices", &PolarStep::polar_vertices);
    py::class_<NegativePedalStep>(m, "NegativePedalStep")
        .def_readonly("vertices", &NegativePedalStep::vertices)
        .def_readonly("np_vertices", &NegativePedalStep::np_vertices);

    m.def("pedal_porism_step", &pedal_porism_step);
    m.def("polar_porism_step", &polar_porism_step);
    m.def("negative_pedal_porism_step", &negative_pedal_porism_step);

    py::class_<SweepRecord>(m, "SweepRecord")
        .def_readonly("start_angle", &SweepRecord::start_angle)
        .def_readonly("outcome", &SweepRecord::outcome)
        .def_readonly("tangency_defect", &SweepRecord::tangency_defect)
        .def_readonly("center_err", &SweepRecord::center_err)
        .def_readonly("radius_err", &SweepRecord::radius_err)
        .def_readonly("closure_defect", &SweepRecord::closure_defect);

    py::class_<PorismSweepReport>(m, "PorismSweepReport")
        .def_readonly("records", &PorismSweepReport::records)
        .def_readonly("threshold", &PorismSweepReport::threshold)
        .def("passed", &PorismSweepReport::passed)
        .def("infertile_fraction", &PorismSweepReport::infertile_fraction);

    m.def("run_sweep", &run_sweep, py::arg("scene"), py::arg("algorithm"),
          py::arg("n_samples"));
    m.def("evaluate_start", &evaluate_start);

    m.def("parse_scene", &parse_scene, py::arg("path_or_text"), py::arg("is_path") = true);
    m.def("report_to_csv", &report_to_csv);
    m.def("render_svg",
          [](const PorismScene& scene) { return render_svg(scene, FigureSpec{}); });
    m.def("render_svg", [](const PorismScene& scene, const std::string& spec_json) {
        return render_svg(scene, parse_figure_spec_text(spec_json));
    });
}
