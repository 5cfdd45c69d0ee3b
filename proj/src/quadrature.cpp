#include "flatfront/quadrature.hpp"

#include <cmath>

namespace flatfront {

namespace {

Vec simpson_step(const std::function<Vec(double)>& f, double a, double b,
                 const Vec& fa, const Vec& fm, const Vec& fb, const Vec& whole,
                 double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const Vec flm = f(lm), frm = f(rm);
    const double h = b - a;
    Vec left = (h / 12.0) * (fa + 4.0 * flm + fm);
    Vec right = (h / 12.0) * (fm + 4.0 * frm + fb);
    Vec s2 = left + right;
    Vec err = s2 - whole;
    if (depth <= 0 || err.lpNorm<Eigen::Infinity>() <= 15.0 * tol)
        return s2 + err / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, tol * 0.5, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, tol * 0.5, depth - 1);
}

}  // namespace

Vec adaptive_simpson(const std::function<Vec(double)>& f, double a, double b,
                     double tol, int max_depth) {
    const double m = 0.5 * (a + b);
    const Vec fa = f(a), fm = f(m), fb = f(b);
    Vec whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

double adaptive_simpson_scalar(const std::function<double(double)>& f, double a,
                               double b, double tol, int max_depth) {
    auto g = [&f](double t) {
        Vec v(1);
        v[0] = f(t);
        return v;
    };
    return adaptive_simpson(g, a, b, tol, max_depth)[0];
}

Vec periodic_trapezoid(const std::function<Vec(double)>& f, double a, double period,
                       int samples) {
    const double h = period / samples;
    Vec acc = f(a);
    for (int k = 1; k < samples; ++k) acc += f(a + k * h);
    return h * acc;
}

std::vector<Vec> cumulative_integral(const std::function<Vec(double)>& f,
                                     const Domain& dom, int knots, double tol) {
    std::vector<Vec> out;
    out.reserve(knots);
    const double h = dom.length() / (knots - 1);
    Vec acc = Vec::Zero(f(dom.t0).size());
    out.push_back(acc);
    for (int k = 1; k < knots; ++k) {
        const double a = dom.t0 + (k - 1) * h;
        acc += adaptive_simpson(f, a, a + h, tol);
        out.push_back(acc);
    }
    return out;
}

}  // namespace flatfront
