#include "flatfront/bishop.hpp"

#include <cmath>

namespace flatfront {

namespace {

// Project the columns of E back onto the orthonormal complement of
// {gamma, gamma'} and re-orthonormalize among themselves (modified
// Gram-Schmidt).  Returns the largest correction applied to any column.
double reproject(Mat& E, const Vec& g, const Vec& gp) {
    double drift = 0.0;
    for (int j = 0; j < E.cols(); ++j) {
        Vec v = E.col(j);
        const Vec before = v;
        v -= v.dot(g) * g;
        v -= v.dot(gp) * gp;
        for (int k = 0; k < j; ++k) v -= v.dot(E.col(k)) * E.col(k);
        const double nrm = v.norm();
        if (nrm < 1e-12)
            throw FrameDriftExceeded("frame column collapsed during re-orthonormalization");
        v /= nrm;
        drift = std::max(drift, (v - before).norm());
        E.col(j) = v;
    }
    return drift;
}

Mat rhs(const CurveJet& jet, const Mat& E) {
    Mat d(E.rows(), E.cols());
    for (int j = 0; j < E.cols(); ++j)
        d.col(j) = -(jet.d2.dot(E.col(j))) * jet.d1;
    return d;
}

}  // namespace

BishopFrameField::BishopFrameField(std::shared_ptr<const SphericalCurve> curve,
                                   std::vector<HermiteSpline> frame_splines,
                                   double max_drift, double holonomy_angle)
    : curve_(std::move(curve)),
      splines_(std::move(frame_splines)),
      max_drift_(max_drift),
      holonomy_angle_(holonomy_angle) {}

BishopFrameField BishopFrameField::analytic(
    std::shared_ptr<const SphericalCurve> curve,
    std::vector<std::function<Vec(double)>> frame_fns) {
    BishopFrameField f(curve, {}, 0.0, 0.0);
    f.analytic_ = std::move(frame_fns);
    return f;
}

int BishopFrameField::count() const {
    return analytic_.empty() ? static_cast<int>(splines_.size())
                             : static_cast<int>(analytic_.size());
}

Vec BishopFrameField::frame_vector(int j, double t) const {
    if (!analytic_.empty()) return analytic_[j](t);
    return splines_[j].eval(t);
}

Vec BishopFrameField::frame_derivative(int j, double t) const {
    if (!analytic_.empty()) {
        const double h = 1e-4;
        return (-analytic_[j](t + 2 * h) + 8.0 * analytic_[j](t + h) -
                8.0 * analytic_[j](t - h) + analytic_[j](t - 2 * h)) /
               (12.0 * h);
    }
    return splines_[j].derivative(t);
}

double BishopFrameField::mu(int j, double t) const {
    return curve_->derivative(t, 2).dot(frame_vector(j, t));
}

double BishopFrameField::mu_derivative(int j, double t) const {
    return curve_->derivative(t, 3).dot(frame_vector(j, t)) +
           curve_->derivative(t, 2).dot(frame_derivative(j, t));
}

double BishopFrameField::curvature_from_bishop(double t) const {
    double s = 0.0;
    for (int j = 0; j < count(); ++j) {
        const double m = mu(j, t);
        s += m * m;
    }
    return std::sqrt(s);
}

double BishopFrameField::bishop_residual(int samples) const {
    const Domain& dom = curve_->domain();
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double t = dom.t0 + dom.length() * (k + 0.5) / samples;
        const Vec e = curve_->derivative(t, 1);
        for (int j = 0; j < count(); ++j) {
            Vec d = frame_derivative(j, t);
            d -= d.dot(e) * e / e.squaredNorm();
            worst = std::max(worst, d.norm());
        }
    }
    return worst;
}

std::vector<Vec> default_initial_frame(const SphericalCurve& curve) {
    const double t0 = curve.domain().t0;
    const int m = curve.ambient_dim();
    const Vec g = curve.point(t0);
    Vec gp = curve.derivative(t0, 1);
    gp.normalize();
    std::vector<Vec> frame;
    for (int axis = 0; axis < m && static_cast<int>(frame.size()) < m - 2; ++axis) {
        Vec v = Vec::Unit(m, axis);
        v -= v.dot(g) * g;
        v -= v.dot(gp) * gp;
        for (const Vec& e : frame) v -= v.dot(e) * e;
        const double nrm = v.norm();
        if (nrm < 1e-6) continue;
        frame.push_back(v / nrm);
    }
    return frame;
}

BishopFrameField integrate_bishop_frame(
    std::shared_ptr<const SphericalCurve> curve,
    const std::vector<Vec>& initial_frame, double tol, int steps) {
    const SphericalCurve& c = *curve;
    if (!c.is_unit_speed())
        throw FlatFrontError("integrate_bishop_frame: curve must be unit speed");
    const int m = c.ambient_dim();
    const int nf = m - 2;
    if (static_cast<int>(initial_frame.size()) != nf)
        throw BadInitialFrame("expected " + std::to_string(nf) + " frame vectors");

    const double t0 = c.domain().t0;
    const Vec g0 = c.point(t0);
    const Vec gp0 = c.derivative(t0, 1);
    Mat E(m, nf);
    for (int j = 0; j < nf; ++j) {
        const Vec& v = initial_frame[j];
        if (std::abs(v.norm() - 1.0) > 1e-10 || std::abs(v.dot(g0)) > 1e-10 ||
            std::abs(v.dot(gp0)) > 1e-10)
            throw BadInitialFrame("initial frame vector fails orthogonality");
        for (int k = 0; k < j; ++k)
            if (std::abs(v.dot(initial_frame[k])) > 1e-10)
                throw BadInitialFrame("initial frame vectors are not orthonormal");
        E.col(j) = v;
    }

    const double h = c.domain().length() / steps;
    std::vector<Mat> values;
    std::vector<Mat> slopes;
    values.reserve(steps + 1);
    slopes.reserve(steps + 1);
    values.push_back(E);
    slopes.push_back(rhs(c.jet(t0), E));
    double drift = 0.0;
    for (int s = 0; s < steps; ++s) {
        const double t = t0 + s * h;
        const CurveJet j0 = c.jet(t);
        const CurveJet jh = c.jet(t + 0.5 * h);
        const CurveJet j1 = c.jet(t + h);
        const Mat k1 = rhs(j0, E);
        const Mat k2 = rhs(jh, E + 0.5 * h * k1);
        const Mat k3 = rhs(jh, E + 0.5 * h * k2);
        const Mat k4 = rhs(j1, E + h * k3);
        E += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        Vec gp1 = j1.d1;
        drift = std::max(drift, reproject(E, j1.p, gp1.normalized()));
        values.push_back(E);
        slopes.push_back(rhs(j1, E));
    }
    if (drift > tol)
        throw FrameDriftExceeded("re-orthonormalization correction " +
                                 std::to_string(drift) + " exceeds tol");

    double holonomy = 0.0;
    if (c.domain().periodic && nf > 0) {
        Mat M(nf, nf);
        for (int j = 0; j < nf; ++j)
            for (int k = 0; k < nf; ++k) M(j, k) = values.front().col(j).dot(E.col(k));
        Eigen::EigenSolver<Mat> es(M);
        for (int i = 0; i < nf; ++i) {
            const auto lam = es.eigenvalues()[i];
            holonomy = std::max(holonomy, std::abs(std::atan2(lam.imag(), lam.real())));
        }
    }

    std::vector<HermiteSpline> splines;
    for (int j = 0; j < nf; ++j) {
        std::vector<Vec> vals(steps + 1), ders(steps + 1);
        for (int s = 0; s <= steps; ++s) {
            vals[s] = values[s].col(j);
            ders[s] = slopes[s].col(j);
        }
        splines.emplace_back(c.domain(), std::move(vals), std::move(ders));
    }
    return BishopFrameField(curve, std::move(splines), drift, holonomy);
}

BishopFrameField integrate_bishop_frame(
    std::shared_ptr<const SphericalCurve> curve, double tol, int steps) {
    return integrate_bishop_frame(curve, default_initial_frame(*curve), tol, steps);
}

}  // namespace flatfront
