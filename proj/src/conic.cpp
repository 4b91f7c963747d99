#include "porism/conic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace porism {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kClassifyTol = 1e-10;

double wrap_angle(double th) {
    th = std::fmod(th, 2 * kPi);
    if (th < 0.0)
        th += 2 * kPi;
    return th;
}

} // namespace

const char* to_string(ConicKind k) {
    switch (k) {
    case ConicKind::Circle: return "circle";
    case ConicKind::Ellipse: return "ellipse";
    case ConicKind::Parabola: return "parabola";
    case ConicKind::Hyperbola: return "hyperbola";
    case ConicKind::Degenerate: return "degenerate";
    }
    return "unknown";
}

Conic Conic::from_matrix(const Eigen::Matrix3d& m_in) {
    Eigen::Matrix3d m = 0.5 * (m_in + m_in.transpose());
    const double n = m.norm();
    if (!(n > 1e-300) || !std::isfinite(n))
        throw ZeroMatrix();
    m /= n;
    // Sign: largest-magnitude entry positive (row-major scan breaks ties).
    double best = 0.0;
    double best_val = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (std::abs(m(i, j)) > best) {
                best = std::abs(m(i, j));
                best_val = m(i, j);
            }
    if (best_val < 0.0)
        m = -m;

    Conic k;
    k.m_ = m;
    const double det3 = m.determinant();
    const double d2 = m(0, 0) * m(1, 1) - m(0, 1) * m(0, 1);
    if (std::abs(det3) < kClassifyTol)
        k.kind_ = ConicKind::Degenerate;
    else if (d2 > kClassifyTol)
        k.kind_ = (std::abs(m(0, 0) - m(1, 1)) < 1e-9 && std::abs(m(0, 1)) < 1e-9)
                      ? ConicKind::Circle
                      : ConicKind::Ellipse;
    else if (d2 < -kClassifyTol)
        k.kind_ = ConicKind::Hyperbola;
    else
        k.kind_ = ConicKind::Parabola;
    return k;
}

double Conic::eval(Point p) const {
    Eigen::Vector3d v(p.x, p.y, 1.0);
    return v.dot(m_ * v);
}

Eigen::Matrix3d Conic::adjugate() const {
    Eigen::Matrix3d a;
    const Eigen::Matrix3d& m = m_;
    a(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    a(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    a(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    a(1, 0) = a(0, 1);
    a(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    a(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    a(2, 0) = a(0, 2);
    a(2, 1) = a(1, 2);
    a(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return a;
}

Conic::Axes Conic::axes() const {
    if (!non_degenerate())
        throw DegenerateConic();
    Eigen::Matrix2d q = m_.topLeftCorner<2, 2>();
    Eigen::Vector2d rhs(-m_(0, 2), -m_(1, 2));
    Eigen::Vector2d ctr = q.fullPivLu().solve(rhs);
    Point center{ctr(0), ctr(1)};
    const double k0 = eval(center);

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(q);
    const Eigen::Vector2d ev = es.eigenvalues();
    const Eigen::Matrix2d evec = es.eigenvectors();

    // Along eigendirection i the equation reads  ev(i) t^2 + k0 = 0.
    double t2[2];
    for (int i = 0; i < 2; ++i)
        t2[i] = -k0 / ev(i);

    Axes ax;
    ax.kind = kind_;
    ax.center = center;
    if (kind_ == ConicKind::Hyperbola) {
        const int trans = t2[0] > 0 ? 0 : 1;
        const int conj = 1 - trans;
        if (!(t2[trans] > 0))
            throw DegenerateConic("hyperbola without real transverse axis");
        ax.a = std::sqrt(t2[trans]);
        ax.b = std::sqrt(-t2[conj]);
        ax.major_dir = {evec(0, trans), evec(1, trans)};
    } else {
        if (!(t2[0] > 0 && t2[1] > 0))
            throw DegenerateConic("conic has no real points");
        const int major = t2[0] >= t2[1] ? 0 : 1;
        ax.a = std::sqrt(t2[major]);
        ax.b = std::sqrt(t2[1 - major]);
        ax.major_dir = {evec(0, major), evec(1, major)};
    }
    return ax;
}

std::array<Point, 2> Conic::foci() const {
    const Axes ax = axes();
    double c2;
    if (ax.kind == ConicKind::Hyperbola)
        c2 = ax.a * ax.a + ax.b * ax.b;
    else
        c2 = ax.a * ax.a - ax.b * ax.b;
    const double c = std::sqrt(std::max(0.0, c2));
    return {ax.center + c * ax.major_dir, ax.center - c * ax.major_dir};
}

Conic conic_from_matrix(const Eigen::Matrix3d& m) {
    return Conic::from_matrix(m);
}

Conic circle_as_conic(const Circle& c) {
    Eigen::Matrix3d m;
    m << 1, 0, -c.center.x,
         0, 1, -c.center.y,
         -c.center.x, -c.center.y, c.center.norm_sq() - c.radius * c.radius;
    return Conic::from_matrix(m);
}

double line_conic_tangency_defect(const Line& l, const Conic& k) {
    if (!k.non_degenerate())
        throw DegenerateConic();
    const Eigen::Matrix3d adj = k.adjugate();
    Eigen::Vector3d v(l.a(), l.b(), l.c());
    return std::abs(v.dot(adj * v)) / (v.squaredNorm() * adj.norm());
}

std::vector<Line> tangents_from_point(Point p, const Conic& k) {
    if (!k.non_degenerate())
        throw DegenerateConic();
    Eigen::Matrix3d adj = k.adjugate();
    adj /= adj.norm();
    // Pencil of lines through p, spanned by x = px and y = py.
    const Eigen::Vector3d l1(1, 0, -p.x);
    const Eigen::Vector3d l2(0, 1, -p.y);
    const double q11 = l1.dot(adj * l1);
    const double q12 = l1.dot(adj * l2);
    const double q22 = l2.dot(adj * l2);
    const double disc = q12 * q12 - q11 * q22;
    const double tol = 1e-12 * std::max(q11 * q11 + q22 * q22 + q12 * q12, 1e-300);

    auto make_line = [&](double lam, double mu) {
        const Eigen::Vector3d l = lam * l1 + mu * l2;
        return Line::from_coeffs(l(0), l(1), l(2));
    };

    std::vector<Line> out;
    if (disc < -tol)
        return out; // interior point
    if (disc <= tol) {
        if (std::abs(q11) >= std::abs(q22))
            out.push_back(make_line(-q12, q11));
        else
            out.push_back(make_line(q22, -q12));
        return out;
    }
    const double s = std::sqrt(disc);
    if (std::abs(q11) >= std::abs(q22)) {
        // q11 t^2 + 2 q12 t + q22 = 0, line = t*l1 + l2
        const double qq = -(q12 + (q12 >= 0 ? s : -s));
        out.push_back(make_line(qq / q11, 1.0));
        if (std::abs(qq) > 0)
            out.push_back(make_line(q22 / qq, 1.0));
        else
            out.push_back(make_line(-qq / q11, 1.0));
    } else {
        // q22 t^2 + 2 q12 t + q11 = 0, line = l1 + t*l2
        const double qq = -(q12 + (q12 >= 0 ? s : -s));
        out.push_back(make_line(1.0, qq / q22));
        if (std::abs(qq) > 0)
            out.push_back(make_line(1.0, q11 / qq));
        else
            out.push_back(make_line(1.0, -qq / q22));
    }
    return out;
}

namespace {

// Real roots of sum_i coeffs[i] t^i via companion-matrix eigenvalues.
std::vector<double> real_polynomial_roots(std::vector<double> coeffs) {
    double maxc = 0.0;
    for (double c : coeffs)
        maxc = std::max(maxc, std::abs(c));
    if (maxc <= 0.0)
        return {};
    while (coeffs.size() > 1 && std::abs(coeffs.back()) < 1e-13 * maxc)
        coeffs.pop_back(); // root escaped to infinity; theta = pi handled by caller
    const int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<double> roots;
    if (n <= 0)
        return roots;
    if (n == 1) {
        roots.push_back(-coeffs[0] / coeffs[1]);
        return roots;
    }
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i)
        comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i)
        comp(i, n - 1) = -coeffs[i] / coeffs[n];
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
    for (int i = 0; i < n; ++i) {
        const std::complex<double> z = es.eigenvalues()(i);
        if (std::abs(z.imag()) < 1e-7 * (1.0 + std::abs(z.real())))
            roots.push_back(z.real());
    }
    return roots;
}

// degree-2 polynomial product, ascending coefficients
std::array<double, 5> conv(const std::array<double, 3>& p, const std::array<double, 3>& q) {
    std::array<double, 5> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[i + j] += p[i] * q[j];
    return r;
}

} // namespace

std::vector<Point> circle_conic_intersection(const Circle& c, const Conic& k, double eps) {
    if (!k.non_degenerate())
        throw DegenerateConic();
    if (k.kind() == ConicKind::Circle) {
        const Conic cc = circle_as_conic(c);
        if ((cc.matrix() - k.matrix()).norm() < 1e-9)
            throw CoincidentCurves();
    }
    const Eigen::Matrix3d& m = k.matrix();
    const double A = m(0, 0), B = 2 * m(0, 1), C = m(1, 1);
    const double D = 2 * m(0, 2), E = 2 * m(1, 2), F = m(2, 2);
    const double cx = c.center.x, cy = c.center.y, r = c.radius;

    // x = cx + r(1-t^2)/(1+t^2), y = cy + 2rt/(1+t^2); clear denominators.
    const std::array<double, 3> X{cx + r, 0.0, cx - r};
    const std::array<double, 3> Y{cy, 2 * r, cy};
    const std::array<double, 3> W{1.0, 0.0, 1.0};

    std::array<double, 5> P{};
    auto add = [&P](double s, const std::array<double, 5>& q) {
        for (int i = 0; i < 5; ++i)
            P[i] += s * q[i];
    };
    add(A, conv(X, X));
    add(B, conv(X, Y));
    add(C, conv(Y, Y));
    add(D, conv(X, W));
    add(E, conv(Y, W));
    add(F, conv(W, W));

    double maxc = 0.0;
    for (double v : P)
        maxc = std::max(maxc, std::abs(v));
    const double fscale = std::max(1.0, (1.0 + c.center.norm() + r) * (1.0 + c.center.norm() + r));
    if (maxc < 1e-11 * fscale)
        throw CoincidentCurves();

    auto f = [&](double th) {
        return k.eval(c.point_at(th));
    };
    auto fprime = [&](double th) {
        const Point p = c.point_at(th);
        Eigen::Vector3d v(p.x, p.y, 1.0);
        Eigen::Vector3d dv(-r * std::sin(th), r * std::cos(th), 0.0);
        return 2.0 * v.dot(m * dv);
    };

    std::vector<double> thetas;
    for (double t : real_polynomial_roots({P.begin(), P.end()}))
        thetas.push_back(2.0 * std::atan(t));
    thetas.push_back(kPi); // the tan-half parametrization misses theta = pi

    std::vector<double> accepted;
    for (double th : thetas) {
        for (int it = 0; it < 3; ++it) {
            const double fp = fprime(th);
            if (std::abs(fp) < 1e-300)
                break;
            th -= f(th) / fp;
        }
        if (std::abs(f(th)) < 1e-7 * fscale * std::max(eps / kEps, 1.0))
            accepted.push_back(wrap_angle(th));
    }
    std::sort(accepted.begin(), accepted.end());
    std::vector<double> unique_th;
    for (double th : accepted) {
        if (!unique_th.empty() && th - unique_th.back() < 1e-7)
            continue;
        unique_th.push_back(th);
    }
    // wraparound duplicate
    if (unique_th.size() > 1 && (2 * kPi - unique_th.back()) + unique_th.front() < 1e-7)
        unique_th.pop_back();

    std::vector<Point> out;
    out.reserve(unique_th.size());
    for (double th : unique_th)
        out.push_back(c.point_at(th));
    return out;
}

} // namespace porism
