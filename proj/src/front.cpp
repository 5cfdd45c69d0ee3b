#include "flatfront/front.hpp"

#include <cmath>

namespace flatfront {

namespace {

Mat fd_map_jacobian(const std::function<Vec(const Vec&)>& f, const Vec& p,
                    double h, int ambient) {
    Mat J(ambient, p.size());
    for (int i = 0; i < p.size(); ++i) {
        Vec q = p;
        q[i] = p[i] + h;
        const Vec fp1 = f(q);
        q[i] = p[i] + 2 * h;
        const Vec fp2 = f(q);
        q[i] = p[i] - h;
        const Vec fm1 = f(q);
        q[i] = p[i] - 2 * h;
        const Vec fm2 = f(q);
        J.col(i) = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
    }
    return J;
}

}  // namespace

Mat Front::fd_jacobian(const Vec& p, double h) const {
    return fd_map_jacobian([this](const Vec& q) { return position(q); }, p, h,
                           ambient_dim());
}

Mat Front::fd_normal_jacobian(const Vec& p, double h) const {
    return fd_map_jacobian([this](const Vec& q) { return normal(q); }, p, h,
                           ambient_dim());
}

Mat Front::first_fundamental_form(const Vec& p) const {
    const Mat J = jacobian(p);
    return J.transpose() * J;
}

Mat Front::lift_metric(const Vec& p) const {
    const Mat J = jacobian(p);
    const Mat N = normal_jacobian(p);
    return J.transpose() * J + N.transpose() * N;
}

PlanePatch::PlanePatch(int n) : n_(n) {}

Vec PlanePatch::position(const Vec& p) const {
    Vec x = Vec::Zero(n_ + 1);
    x.head(n_) = p;
    return x;
}

Vec PlanePatch::normal(const Vec&) const { return Vec::Unit(n_ + 1, n_); }

Mat PlanePatch::jacobian(const Vec&) const {
    Mat J = Mat::Zero(n_ + 1, n_);
    J.topRows(n_).setIdentity();
    return J;
}

Mat PlanePatch::normal_jacobian(const Vec&) const {
    return Mat::Zero(n_ + 1, n_);
}

Vec SpherePatch::position(const Vec& p) const {
    Vec x(3);
    x[0] = std::cos(p[0]) * std::cos(p[1]);
    x[1] = std::cos(p[0]) * std::sin(p[1]);
    x[2] = std::sin(p[0]);
    return x;
}

Vec CylinderFront::position(const Vec& p) const {
    Vec x(n_ + 1);
    x[0] = r_ * std::cos(p[0]);
    x[1] = r_ * std::sin(p[0]);
    for (int j = 1; j < n_; ++j) x[j + 1] = p[j];
    return x;
}

Vec CylinderFront::normal(const Vec& p) const {
    Vec nu = Vec::Zero(n_ + 1);
    nu[0] = -std::cos(p[0]);
    nu[1] = -std::sin(p[0]);
    return nu;
}

}  // namespace flatfront
