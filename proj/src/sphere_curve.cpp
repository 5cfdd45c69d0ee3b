#include "flatfront/sphere_curve.hpp"

#include <algorithm>
#include <cmath>

#include "flatfront/jet.hpp"
#include "flatfront/quadrature.hpp"

namespace flatfront {

SphericalCurve::SphericalCurve(int ambient_dim, JetFn jets, Domain dom,
                               bool unit_speed, double fd_step)
    : ambient_dim_(ambient_dim),
      jets_(std::move(jets)),
      dom_(dom),
      unit_speed_(unit_speed),
      fd_step_(fd_step) {}

SphericalCurve SphericalCurve::from_position(int ambient_dim,
                                             std::function<Vec(double)> pos,
                                             Domain dom, bool unit_speed) {
    const double h = dom.length() * 1e-5;
    auto jets = [pos, h](double t) {
        CurveJet j;
        const Vec fm2 = pos(t - 2 * h), fm1 = pos(t - h), f0 = pos(t),
                  fp1 = pos(t + h), fp2 = pos(t + 2 * h);
        j.p = f0;
        j.d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
        j.d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
        j.d3 = (fp2 - 2.0 * fp1 + 2.0 * fm1 - fm2) / (2.0 * h * h * h);
        return j;
    };
    return SphericalCurve(ambient_dim, jets, dom, unit_speed, h);
}

Vec SphericalCurve::point(double t) const { return jets_(t).p; }

Vec SphericalCurve::derivative(double t, int order) const {
    const CurveJet j = jets_(t);
    switch (order) {
        case 1: return j.d1;
        case 2: return j.d2;
        case 3: return j.d3;
        default: throw FlatFrontError("derivative order must be 1, 2 or 3");
    }
}

std::pair<double, double> SphericalCurve::speed_range(int samples) const {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double t =
            dom_.t0 + dom_.length() * (k + 0.5) / static_cast<double>(samples);
        const double v = derivative(t, 1).norm();
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

// ---- Presets --------------------------------------------------------------

SphericalCurve great_circle(int ambient_dim) {
    auto jets = [ambient_dim](double t) {
        CurveJet j;
        j.p = Vec::Zero(ambient_dim);
        j.d1 = Vec::Zero(ambient_dim);
        j.d2 = Vec::Zero(ambient_dim);
        j.d3 = Vec::Zero(ambient_dim);
        const double c = std::cos(t), s = std::sin(t);
        j.p[0] = c;   j.p[1] = s;
        j.d1[0] = -s; j.d1[1] = c;
        j.d2[0] = -c; j.d2[1] = -s;
        j.d3[0] = s;  j.d3[1] = -c;
        return j;
    };
    return SphericalCurve(ambient_dim, jets, {0.0, 2.0 * M_PI, true}, true);
}

SphericalCurve small_circle(double theta0, int ambient_dim) {
    const double r = std::sin(theta0), z = std::cos(theta0);
    auto jets = [r, z, ambient_dim](double t) {
        CurveJet j;
        j.p = Vec::Zero(ambient_dim);
        j.d1 = Vec::Zero(ambient_dim);
        j.d2 = Vec::Zero(ambient_dim);
        j.d3 = Vec::Zero(ambient_dim);
        const double c = std::cos(t), s = std::sin(t);
        j.p[0] = r * c;   j.p[1] = r * s;   j.p[2] = z;
        j.d1[0] = -r * s; j.d1[1] = r * c;
        j.d2[0] = -r * c; j.d2[1] = -r * s;
        j.d3[0] = r * s;  j.d3[1] = -r * c;
        return j;
    };
    return SphericalCurve(ambient_dim, jets, {0.0, 2.0 * M_PI, true}, false);
}

namespace {

CurveJet jets_from_components(const std::vector<Jet3>& comp) {
    const int m = static_cast<int>(comp.size());
    CurveJet j;
    j.p = Vec(m); j.d1 = Vec(m); j.d2 = Vec(m); j.d3 = Vec(m);
    for (int i = 0; i < m; ++i) {
        j.p[i] = comp[i].v;
        j.d1[i] = comp[i].d1;
        j.d2[i] = comp[i].d2;
        j.d3[i] = comp[i].d3;
    }
    return j;
}

std::vector<Jet3> normalize_components(std::vector<Jet3> c) {
    Jet3 s = Jet3::constant(0.0);
    for (const auto& ci : c) s = s + ci * ci;
    const Jet3 w = inv_sqrt(s);
    for (auto& ci : c) ci = ci * w;
    return c;
}

}  // namespace

SphericalCurve spherical_helix(double theta0, double amp, int freq,
                               int ambient_dim) {
    if (ambient_dim == 3) {
        auto jets = [theta0, amp, freq](double t) {
            const Jet3 tt = Jet3::variable(t);
            const Jet3 th = Jet3::constant(theta0) + amp * sin(freq * tt);
            std::vector<Jet3> c = {cos(tt) * sin(th), sin(tt) * sin(th), cos(th)};
            return jets_from_components(c);
        };
        return SphericalCurve(3, jets, {0.0, 2.0 * M_PI, true}, false);
    }
    const double ca = std::cos(theta0), sa = std::sin(theta0);
    auto jets = [ca, sa, freq, ambient_dim](double t) {
        const Jet3 tt = Jet3::variable(t);
        std::vector<Jet3> c(ambient_dim, Jet3::constant(0.0));
        c[0] = ca * cos(tt);
        c[1] = ca * sin(tt);
        c[2] = sa * cos(freq * tt);
        c[3] = sa * sin(freq * tt);
        return jets_from_components(c);
    };
    return SphericalCurve(ambient_dim, jets, {0.0, 2.0 * M_PI, true}, false);
}

SphericalCurve fourier_curve(const std::vector<std::vector<double>>& cos_coef,
                             const std::vector<std::vector<double>>& sin_coef) {
    if (cos_coef.size() != sin_coef.size() || cos_coef.empty())
        throw FlatFrontError("fourier_curve: coefficient arrays must have equal, nonzero size");
    const int m = static_cast<int>(cos_coef.size());
    auto jets = [cos_coef, sin_coef, m](double t) {
        const Jet3 tt = Jet3::variable(t);
        std::vector<Jet3> c(m, Jet3::constant(0.0));
        for (int i = 0; i < m; ++i) {
            for (std::size_t k = 0; k < cos_coef[i].size(); ++k)
                c[i] = c[i] + cos_coef[i][k] * cos(static_cast<int>(k) * tt);
            for (std::size_t k = 0; k < sin_coef[i].size(); ++k)
                c[i] = c[i] + sin_coef[i][k] * sin(static_cast<int>(k) * tt);
        }
        return jets_from_components(normalize_components(c));
    };
    SphericalCurve curve(m, jets, {0.0, 2.0 * M_PI, true}, false);
    const auto [lo, hi] = curve.speed_range();
    if (lo <= 0.0 || !(hi > 0.0))
        throw NonRegularCurve("fourier_curve: curve fails the regularity check");
    return curve;
}

// ---- Arc-length reparametrization -----------------------------------------

namespace {

// Number of spline knots used for cached curve data.
constexpr int kArcKnots = 4097;

struct ArcData {
    SphericalCurve base;
    HermiteSpline s_of_t;  // 1-d spline: cumulative arc length over base parameter
    std::vector<double> s_knots;
    double total = 0.0;

    double t_of_s(double s) const {
        const Domain& bd = base.domain();
        if (bd.periodic) {
            double q = std::floor(s / total);
            s -= q * total;
        }
        // Bracket on the knot table, then Newton on the spline.
        auto it = std::upper_bound(s_knots.begin(), s_knots.end(), s);
        int k = static_cast<int>(it - s_knots.begin()) - 1;
        k = std::clamp(k, 0, static_cast<int>(s_knots.size()) - 2);
        const double h = bd.length() / (kArcKnots - 1);
        double t = bd.t0 + k * h;
        for (int iter = 0; iter < 8; ++iter) {
            const double r = s_of_t.eval(t)[0] - s;
            const double v = s_of_t.derivative(t)[0];
            const double step = r / v;
            t -= step;
            if (std::abs(step) < 1e-14 * (1.0 + std::abs(t))) break;
        }
        return t;
    }
};

CurveJet reparametrized_jet(const ArcData& d, double s) {
    const double t = d.t_of_s(s);
    const CurveJet b = d.base.jet(t);
    const double v = b.d1.norm();
    const double vp = b.d1.dot(b.d2) / v;
    const double vpp = (b.d2.squaredNorm() + b.d1.dot(b.d3)) / v - vp * vp / v;
    const double tp = 1.0 / v;
    const double tpp = -vp / (v * v * v);
    const double tppp = (3.0 * vp * vp - v * vpp) / (v * v * v * v * v);
    CurveJet j;
    j.p = b.p;
    j.d1 = b.d1 * tp;
    j.d2 = b.d2 * (tp * tp) + b.d1 * tpp;
    j.d3 = b.d3 * (tp * tp * tp) + 3.0 * b.d2 * (tp * tpp) + b.d1 * tppp;
    return j;
}

}  // namespace

SphericalCurve arc_length_reparametrize(const SphericalCurve& curve, double tol,
                                        ScalarFunction* parameter_map) {
    const auto [lo, hi] = curve.speed_range();
    if (lo < tol * hi)
        throw NonRegularCurve("arc_length_reparametrize: speed drops below " +
                              std::to_string(tol) + " of maximum");
    if (curve.is_unit_speed()) {
        if (parameter_map)
            *parameter_map = {[](double s) { return s; },
                              [](double) { return 1.0; }};
        return curve;
    }

    auto speed = [&curve](double t) {
        Vec v(1);
        v[0] = curve.derivative(t, 1).norm();
        return v;
    };
    auto d = std::make_shared<ArcData>(ArcData{curve, {}, {}, 0.0});
    const std::vector<Vec> cum =
        cumulative_integral(speed, curve.domain(), kArcKnots, 1e-10);
    std::vector<Vec> derivs(kArcKnots);
    d->s_knots.resize(kArcKnots);
    const double h = curve.domain().length() / (kArcKnots - 1);
    for (int k = 0; k < kArcKnots; ++k) {
        derivs[k] = speed(curve.domain().t0 + k * h);
        d->s_knots[k] = cum[k][0];
    }
    Domain base_dom = curve.domain();
    base_dom.periodic = false;  // spline over one fundamental interval
    d->s_of_t = HermiteSpline(base_dom, cum, derivs);
    d->total = d->s_knots.back();

    Domain new_dom{0.0, d->total, curve.domain().periodic};
    if (parameter_map)
        // t(s) is reduced to the base fundamental domain; dt/ds = 1/|gamma'|.
        *parameter_map = {
            [d](double s) { return d->t_of_s(s); },
            [d](double s) {
                return 1.0 / d->base.derivative(d->t_of_s(s), 1).norm();
            }};
    auto jets = [d](double s) { return reparametrized_jet(*d, s); };
    return SphericalCurve(curve.ambient_dim(), jets, new_dom, true,
                          curve.fd_step());
}

double geodesic_curvature(const SphericalCurve& curve, double t) {
    const CurveJet j = curve.jet(t);
    return (j.d2 + j.p).norm();
}

std::vector<ParameterInterval> inflection_points(const SphericalCurve& curve,
                                                 int grid, double tol) {
    std::vector<ParameterInterval> out;
    const Domain& dom = curve.domain();
    const double h = dom.length() / grid;
    bool open = false;
    double start = 0.0;
    for (int k = 0; k <= grid; ++k) {
        const double t = dom.t0 + k * h;
        const bool low = geodesic_curvature(curve, t) < tol;
        if (low && !open) {
            open = true;
            start = t;
        } else if (!low && open) {
            open = false;
            out.push_back({start, t});
        }
    }
    if (open) out.push_back({start, dom.t1});
    return out;
}

}  // namespace flatfront
