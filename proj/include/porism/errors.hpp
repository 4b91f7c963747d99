#pragma once

#include <stdexcept>
#include <string>

namespace porism {

// Base for every geometric failure the library reports.
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define PORISM_DEFINE_ERROR(Name, default_msg)                                 \
    class Name : public GeometryError {                                        \
    public:                                                                    \
        Name() : GeometryError(default_msg) {}                                 \
        explicit Name(const std::string& msg) : GeometryError(msg) {}          \
    }

PORISM_DEFINE_ERROR(CoincidentPoints, "coincident points");
PORISM_DEFINE_ERROR(DegenerateTriangle, "degenerate (collinear) triangle");
PORISM_DEFINE_ERROR(CoincidentCircles, "coincident circles");
PORISM_DEFINE_ERROR(CoincidentCurves, "coincident curves");
PORISM_DEFINE_ERROR(ZeroMatrix, "zero conic matrix");
PORISM_DEFINE_ERROR(DegenerateConic, "degenerate conic");
PORISM_DEFINE_ERROR(CenterInversion, "point at inversion center");
PORISM_DEFINE_ERROR(LineThroughCenter, "line through inversion center");
PORISM_DEFINE_ERROR(PointOnCircle, "pedal point on the circle");
PORISM_DEFINE_ERROR(DegenerateOutput, "degenerate construction output");
PORISM_DEFINE_ERROR(InfertileStart, "infertile start");

#undef PORISM_DEFINE_ERROR

// Scene/file level failures (CLI surface).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace porism
