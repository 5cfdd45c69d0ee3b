#pragma once

#include <memory>
#include <vector>

#include "flatfront/interp.hpp"
#include "flatfront/sphere_curve.hpp"
#include "flatfront/types.hpp"

namespace flatfront {

// Orthonormal frame {e_2, ..., e_n} of the normal bundle (gamma')^perp along
// a unit-speed spherical curve, with derivatives only along the tangent:
// e_j'(t) = -mu_j(t) e(t).  Frames are sampled on a dense grid during ODE
// integration and interpolated; mu_j(t) = gamma''(t) . e_j(t).
class BishopFrameField {
public:
    // Integrated construction; see integrate_bishop_frame.
    BishopFrameField(std::shared_ptr<const SphericalCurve> curve,
                     std::vector<HermiteSpline> frame_splines, double max_drift,
                     double holonomy_angle);

    // Analytic construction from closed-form frame vectors (e.g. constant
    // frames along great circles).  mu_j is still read off as gamma'' . e_j.
    static BishopFrameField analytic(
        std::shared_ptr<const SphericalCurve> curve,
        std::vector<std::function<Vec(double)>> frame_fns);

    const SphericalCurve& curve() const { return *curve_; }
    std::shared_ptr<const SphericalCurve> curve_ptr() const { return curve_; }

    int count() const;  // n - 1 frame vectors

    // j runs over 0 .. count()-1 and addresses e_{j+2} of the 1-based frame
    // indexing (e_1 is the tangent).
    Vec frame_vector(int j, double t) const;
    Vec frame_derivative(int j, double t) const;

    double mu(int j, double t) const;
    double mu_derivative(int j, double t) const;

    // sqrt(sum_j mu_j^2); equals the geodesic curvature of the base curve.
    double curvature_from_bishop(double t) const;

    double max_drift() const { return max_drift_; }
    // Rotation mismatch of the frame after one period (periodic curves only;
    // 0 for interval domains).
    double holonomy_angle() const { return holonomy_angle_; }

    // Max |component of e_j' off the tangent direction| over a check grid.
    double bishop_residual(int samples = 256) const;

private:
    std::shared_ptr<const SphericalCurve> curve_;
    std::vector<HermiteSpline> splines_;                  // integrated path
    std::vector<std::function<Vec(double)>> analytic_;    // analytic path
    double max_drift_ = 0.0;
    double holonomy_angle_ = 0.0;
};

// Integrate the Bishop frame ODE e_j' = -(gamma'' . e_j) gamma' from an
// orthonormal initial frame of (gamma(t0))^perp ∩ (gamma'(t0))^perp, with
// per-step re-orthonormalization.  The largest per-step correction is the
// drift diagnostic; FrameDriftExceeded is thrown if it exceeds tol.
BishopFrameField integrate_bishop_frame(
    std::shared_ptr<const SphericalCurve> curve,
    const std::vector<Vec>& initial_frame, double tol = 1e-6, int steps = 4096);

// Deterministic default initial frame at t0: Gram-Schmidt of the ambient
// coordinate axes against {gamma(t0), gamma'(t0)}.
std::vector<Vec> default_initial_frame(const SphericalCurve& curve);

BishopFrameField integrate_bishop_frame(
    std::shared_ptr<const SphericalCurve> curve, double tol = 1e-6,
    int steps = 4096);

}  // namespace flatfront
