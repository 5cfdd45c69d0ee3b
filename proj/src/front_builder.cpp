#include "flatfront/front_builder.hpp"

#include <cmath>

#include "flatfront/quadrature.hpp"

namespace flatfront {

CumulativeIntegral::CumulativeIntegral(std::function<Vec(double)> integrand,
                                       Domain dom, int knots, double tol)
    : integrand_(std::move(integrand)), dom_(dom) {
    std::vector<Vec> cum = cumulative_integral(integrand_, dom_, knots, tol);
    total_ = cum.back();
    std::vector<Vec> ders(knots);
    const double h = dom_.length() / (knots - 1);
    for (int k = 0; k < knots; ++k) ders[k] = integrand_(dom_.t0 + k * h);
    Domain spline_dom = dom_;
    spline_dom.periodic = false;
    spline_ = HermiteSpline(spline_dom, std::move(cum), std::move(ders));
}

Vec CumulativeIntegral::eval(double t) const {
    if (!dom_.periodic) return spline_.eval(t);
    const double L = dom_.length();
    const double q = std::floor((t - dom_.t0) / L);
    return q * total_ + spline_.eval(t - q * L);
}

// ---- MUFront --------------------------------------------------------------

Vec closure_check(const MUFrontSpec& spec) {
    const auto& xi = *spec.xi;
    auto integrand = [&](double t) -> Vec { return spec.a(t) * xi.point(t); };
    return periodic_trapezoid(integrand, xi.domain().t0, xi.domain().length());
}

MUFront::MUFront(MUFrontSpec spec) : spec_(std::move(spec)) {
    const SphericalCurve& xi = *spec_.xi;
    if (xi.ambient_dim() != 3)
        throw FlatFrontError("MUFront: xi must live in S^2");
    const auto bad = inflection_points(xi);
    if (!bad.empty() && spec_.strict_inflection)
        throw InflectionPoint("MUFront: xi has inflection points (kappa below tolerance)");
    ScalarFunction a = spec_.a;
    auto xi_ptr = spec_.xi;
    sigma_ = CumulativeIntegral(
        [a, xi_ptr](double t) -> Vec { return a(t) * xi_ptr->point(t); },
        xi.domain());
    closure_ = closure_check(spec_);
    complete_ = closure_.lpNorm<Eigen::Infinity>() < 1e-9;
}

Vec MUFront::position(const Vec& p) const {
    return sigma_.eval(p[0]) + p[1] * spec_.xi->point(p[0]);
}

Vec MUFront::normal(const Vec& p) const {
    const Vec xi = spec_.xi->point(p[0]);
    const Vec dxi = spec_.xi->derivative(p[0], 1);
    Eigen::Vector3d c = Eigen::Vector3d(xi).cross(Eigen::Vector3d(dxi));
    c.normalize();
    return c;
}

Mat MUFront::jacobian(const Vec& p) const {
    Mat J(3, 2);
    J.col(0) = spec_.a(p[0]) * spec_.xi->point(p[0]) +
               p[1] * spec_.xi->derivative(p[0], 1);
    J.col(1) = spec_.xi->point(p[0]);
    return J;
}

std::shared_ptr<MUFront> build_mu_front(MUFrontSpec spec) {
    return std::make_shared<MUFront>(std::move(spec));
}

// ---- GeneralRuledFront ----------------------------------------------------

GeneralRuledFront::GeneralRuledFront(GeneralRuledSpec spec)
    : spec_(std::move(spec)) {
    const auto frame = spec_.frame;
    const SphericalCurve& curve = frame->curve();
    if (static_cast<int>(spec_.a.size()) != curve.sphere_dim())
        throw FlatFrontError("GeneralRuledSpec: expected n density functions");
    auto a = spec_.a;
    auto eta = [frame, a](double t) {
        Vec v = a[0](t) * frame->curve().derivative(t, 1);
        for (int j = 0; j + 1 < static_cast<int>(a.size()); ++j)
            v += a[j + 1](t) * frame->frame_vector(j, t);
        return v;
    };
    sigma_ = CumulativeIntegral(eta, curve.domain());
}

int GeneralRuledFront::dim() const { return spec_.frame->curve().sphere_dim(); }

Vec GeneralRuledFront::position(const Vec& p) const {
    Vec x = sigma_.eval(p[0]);
    for (int j = 1; j < dim(); ++j)
        x += p[j] * spec_.frame->frame_vector(j - 1, p[0]);
    return x;
}

Vec GeneralRuledFront::normal(const Vec& p) const {
    return spec_.frame->curve().point(p[0]);
}

Mat GeneralRuledFront::jacobian(const Vec& p) const {
    const int n = dim();
    Mat J(n + 1, n);
    Vec ft = sigma_.derivative(p[0]);
    for (int j = 1; j < n; ++j)
        ft += p[j] * spec_.frame->frame_derivative(j - 1, p[0]);
    J.col(0) = ft;
    for (int j = 1; j < n; ++j) J.col(j) = spec_.frame->frame_vector(j - 1, p[0]);
    return J;
}

Mat GeneralRuledFront::normal_jacobian(const Vec& p) const {
    const int n = dim();
    Mat N = Mat::Zero(n + 1, n);
    N.col(0) = spec_.frame->curve().derivative(p[0], 1);
    return N;
}

std::shared_ptr<GeneralRuledFront> build_general_front(GeneralRuledSpec spec) {
    return std::make_shared<GeneralRuledFront>(std::move(spec));
}

// ---- FlatFront ------------------------------------------------------------

FlatFront::FlatFront(FlatFrontSpec spec) : spec_(std::move(spec)) {
    const auto frame = spec_.frame;
    const SphericalCurve& curve = frame->curve();
    auto a = spec_.a;
    sigma_ = CumulativeIntegral(
        [frame, a](double t) -> Vec {
            return a(t) * frame->curve().derivative(t, 1);
        },
        curve.domain());

    double max_a = 0.0, max_kappa = 0.0;
    for (int k = 0; k < 64; ++k) {
        const double t = curve.domain().t0 + curve.domain().length() * (k + 0.5) / 64;
        max_a = std::max(max_a, std::abs(spec_.a(t)));
        max_kappa = std::max(max_kappa, frame->curvature_from_bishop(t));
    }
    degenerate_ = max_a < 1e-12 && max_kappa < 1e-12;
}

int FlatFront::dim() const { return spec_.frame->curve().sphere_dim(); }

Vec FlatFront::position(const Vec& p) const {
    Vec x = sigma_.eval(p[0]);
    for (int j = 1; j < dim(); ++j)
        x += p[j] * spec_.frame->frame_vector(j - 1, p[0]);
    return x;
}

Vec FlatFront::normal(const Vec& p) const {
    return spec_.frame->curve().point(p[0]);
}

double FlatFront::rho_hat(const Vec& p) const {
    double r = spec_.a(p[0]);
    for (int j = 1; j < dim(); ++j) r -= p[j] * spec_.frame->mu(j - 1, p[0]);
    return r;
}

Mat FlatFront::jacobian(const Vec& p) const {
    const int n = dim();
    Mat J(n + 1, n);
    J.col(0) = rho_hat(p) * spec_.frame->curve().derivative(p[0], 1);
    for (int j = 1; j < n; ++j) J.col(j) = spec_.frame->frame_vector(j - 1, p[0]);
    return J;
}

Mat FlatFront::normal_jacobian(const Vec& p) const {
    const int n = dim();
    Mat N = Mat::Zero(n + 1, n);
    N.col(0) = spec_.frame->curve().derivative(p[0], 1);
    return N;
}

Mat FlatFront::lift_metric_closed_form(const Vec& p) const {
    const int n = dim();
    Mat g = Mat::Identity(n, n);
    const double r = rho_hat(p);
    g(0, 0) = 1.0 + r * r;
    return g;
}

std::shared_ptr<FlatFront> build_flat_front(FlatFrontSpec spec) {
    return std::make_shared<FlatFront>(std::move(spec));
}

// ---- Normal form reduction ------------------------------------------------

NormalFormReduction normal_form_reduction(const GeneralRuledSpec& spec,
                                          double tol) {
    const auto frame = spec.frame;
    if (frame->bishop_residual() > tol)
        throw NotBishopFrame("frame derivatives have components off the tangent");

    const int n = frame->curve().sphere_dim();
    auto a = spec.a;
    auto tail = [a, n](double t) {
        Vec v(n - 1);
        for (int j = 0; j < n - 1; ++j) v[j] = -a[j + 1](t);
        return v;
    };
    auto b = std::make_shared<CumulativeIntegral>(tail, frame->curve().domain());

    ScalarFunction a1 = spec.a[0];
    ScalarFunction reduced{
        [frame, a1, b, n](double t) {
            double v = a1(t);
            const Vec bt = b->eval(t);
            for (int j = 0; j < n - 1; ++j) v -= bt[j] * frame->mu(j, t);
            return v;
        },
        [frame, a1, a, b, n](double t) {
            double v = a1.derivative(t);
            const Vec bt = b->eval(t);
            for (int j = 0; j < n - 1; ++j)
                v += a[j + 1](t) * frame->mu(j, t) - bt[j] * frame->mu_derivative(j, t);
            return v;
        }};
    NormalFormReduction red;
    red.spec = FlatFrontSpec{frame, reduced};
    red.b = [b](double t) { return b->eval(t); };
    return red;
}

std::shared_ptr<ParallelFront> parallel_front(std::shared_ptr<const Front> base,
                                              double delta) {
    return std::make_shared<ParallelFront>(std::move(base), delta);
}

}  // namespace flatfront
