#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "flatfront/interp.hpp"
#include "flatfront/scalar_function.hpp"
#include "flatfront/types.hpp"

namespace flatfront {

// Position and first three derivatives of a curve at one parameter value.
struct CurveJet {
    Vec p, d1, d2, d3;
};

// A regular curve on the unit sphere S^n in R^{n+1}, with evaluable
// derivatives up to order 3.  Presets carry analytic jets; curves built from
// a bare position evaluator fall back to central finite differences (the
// effective step is recorded in fd_step()).
class SphericalCurve {
public:
    using JetFn = std::function<CurveJet(double)>;

    SphericalCurve(int ambient_dim, JetFn jets, Domain dom, bool unit_speed,
                   double fd_step = 0.0);

    static SphericalCurve from_position(int ambient_dim,
                                        std::function<Vec(double)> pos,
                                        Domain dom, bool unit_speed = false);

    Vec point(double t) const;
    Vec derivative(double t, int order) const;  // order in {1,2,3}
    CurveJet jet(double t) const { return jets_(t); }

    int ambient_dim() const { return ambient_dim_; }
    int sphere_dim() const { return ambient_dim_ - 1; }
    const Domain& domain() const { return dom_; }
    bool is_unit_speed() const { return unit_speed_; }
    double fd_step() const { return fd_step_; }

    // Min and max of |gamma'| over a uniform sampling grid.
    std::pair<double, double> speed_range(int samples = 1000) const;

private:
    int ambient_dim_;
    JetFn jets_;
    Domain dom_;
    bool unit_speed_;
    double fd_step_;
};

// ---- Presets --------------------------------------------------------------

// t -> (cos t, sin t, 0, ..., 0); unit speed, period 2*pi.
SphericalCurve great_circle(int ambient_dim);

// Latitude circle at polar angle theta0, naive parametrization
// t -> (sin(theta0) cos t, sin(theta0) sin t, cos(theta0), 0, ...).
// Constant speed sin(theta0), period 2*pi; not unit speed.
SphericalCurve small_circle(double theta0, int ambient_dim = 3);

// Ambient dim 3: latitude oscillation theta(t) = theta0 + amp*sin(freq*t).
// Ambient dim >= 4: torus-style curve
//   (cos(alpha) cos t, cos(alpha) sin t, sin(alpha) cos(freq t), sin(alpha) sin(freq t), 0, ...)
// with alpha = theta0 (amp ignored).
SphericalCurve spherical_helix(double theta0, double amp, int freq,
                               int ambient_dim);

// Truncated Fourier series per ambient coordinate, normalized pointwise onto
// the sphere:  c_i(t) = sum_k cos_coef[i][k] cos(k t) + sin_coef[i][k] sin(k t),
// gamma = c / |c|.  Period 2*pi.
SphericalCurve fourier_curve(const std::vector<std::vector<double>>& cos_coef,
                             const std::vector<std::vector<double>>& sin_coef);

// ---- Operations -----------------------------------------------------------

// Reparametrize by arc length.  Unit-speed inputs are returned unchanged.
// Throws NonRegularCurve if min |gamma'| < tol * max |gamma'| on the check grid.
// When parameter_map is non-null it receives the map s -> t from arc length
// back to the original parameter, with derivative dt/ds = 1/|gamma'(t(s))|;
// use it to transport densities stated in the original parameter.
SphericalCurve arc_length_reparametrize(const SphericalCurve& curve,
                                        double tol = 1e-6,
                                        ScalarFunction* parameter_map = nullptr);

// Spherical geodesic curvature |gamma'' + gamma| of a unit-speed curve.
double geodesic_curvature(const SphericalCurve& curve, double t);

struct ParameterInterval {
    double t_begin, t_end;
};

// Parameter intervals (on a uniform grid of `grid` samples) where the
// geodesic curvature drops below tol.  Empty result certifies the
// no-inflection hypothesis on the grid.
std::vector<ParameterInterval> inflection_points(const SphericalCurve& curve,
                                                 int grid = 1024,
                                                 double tol = 1e-7);

}  // namespace flatfront
