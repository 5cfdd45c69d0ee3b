#include "flatfront/singular.hpp"

#include <algorithm>
#include <cmath>

namespace flatfront {

Vec RhoHat::gradient(const Vec& p) const {
    const int n = front_->dim();
    const auto& frame = front_->frame();
    Vec g(n);
    double gt = front_->spec().a.derivative(p[0]);
    for (int j = 1; j < n; ++j) gt -= p[j] * frame.mu_derivative(j - 1, p[0]);
    g[0] = gt;
    for (int j = 1; j < n; ++j) g[j] = -frame.mu(j - 1, p[0]);
    return g;
}

double RhoHat::scale(const Vec& p) const {
    const int n = front_->dim();
    double s = std::abs(front_->spec().a(p[0]));
    for (int j = 1; j < n; ++j)
        s += std::abs(front_->frame().mu(j - 1, p[0])) * std::abs(p[j]);
    return s;
}

RhoHat rho_hat(std::shared_ptr<const FlatFront> front) { return RhoHat(std::move(front)); }

namespace {

SingularStratum make_s2(const BishopFrameField& frame, const ScalarFunction& a,
                        double t) {
    const int nf = frame.count();
    SingularStratum st;
    st.tag = StratumTag::S2;
    st.t0 = t;
    int jstar = 0;
    double best = 0.0;
    for (int j = 0; j < nf; ++j) {
        const double m = std::abs(frame.mu(j, t));
        if (m > best) {
            best = m;
            jstar = j;
        }
    }
    st.dominant_index = jstar;
    const double mu_star = frame.mu(jstar, t);
    st.offset = a(t) / mu_star;
    for (int j = 0; j < nf; ++j) {
        if (j == jstar) continue;
        st.other_indices.push_back(j);
        st.mu_hat.push_back(frame.mu(j, t) / mu_star);
    }
    return st;
}

double bisect_root(const ScalarFunction& a, double lo, double hi) {
    double flo = a(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = a(mid);
        if ((flo <= 0.0) == (fm <= 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<SingularStratum> stratify_singular_set(const FlatFront& front,
                                                   int t_grid, double eps) {
    const auto& frame = front.frame();
    const ScalarFunction& a = front.spec().a;
    const Domain& dom = front.curve().domain();
    const double h = dom.length() / t_grid;
    const int last = dom.periodic ? t_grid - 1 : t_grid;

    // Scale-aware slice thresholds.
    double a_scale = 0.0, k_scale = 0.0;
    for (int k = 0; k <= last; ++k) {
        const double t = dom.t0 + k * h;
        a_scale = std::max(a_scale, std::abs(a(t)));
        k_scale = std::max(k_scale, frame.curvature_from_bishop(t));
    }
    const double eps_a = eps * (1.0 + a_scale);
    const double eps_k = eps * (1.0 + k_scale);

    std::vector<SingularStratum> out;
    std::vector<double> s1_roots;
    for (int k = 0; k <= last; ++k) {
        const double t = dom.t0 + k * h;
        const double kappa = frame.curvature_from_bishop(t);
        if (kappa > eps_k) {
            out.push_back(make_s2(frame, a, t));
            continue;
        }
        // Geodesic slice: singular iff a(t) = 0 there.
        if (std::abs(a(t)) <= eps_a) s1_roots.push_back(t);
        // Bracket sign changes of a across the next geodesic slice.
        const double tn = t + h;
        if ((k < last || dom.periodic) && tn <= dom.t1 + 1e-12 &&
            frame.curvature_from_bishop(tn) <= eps_k &&
            (a(t) <= 0.0) != (a(tn) <= 0.0))
            s1_roots.push_back(bisect_root(a, t, tn));
    }
    std::sort(s1_roots.begin(), s1_roots.end());
    if (dom.periodic && s1_roots.size() > 1 &&
        s1_roots.back() > dom.t1 - 1e-9 && s1_roots.front() < dom.t0 + 1e-9)
        s1_roots.pop_back();
    double prev = -std::numeric_limits<double>::infinity();
    for (double t : s1_roots) {
        if (t - prev < 1e-9) continue;
        prev = t;
        SingularStratum st;
        st.tag = StratumTag::S1;
        st.t0 = t;
        out.push_back(st);
    }
    return out;
}

LineWitness line_witness(const FlatFront& front, const SingularStratum& stratum,
                         const Vec& through) {
    const int n = front.dim();
    LineWitness w;
    w.tag = stratum.tag;
    w.base = through;
    w.direction = Vec::Zero(n);
    if (stratum.tag == StratumTag::S1) {
        w.direction[1] = 1.0;
    } else {
        if (n < 3)
            throw DimensionTooSmall(
                "S2 strata carry no line for n = 2: the slice is a single point");
        const int jstar = stratum.dominant_index;
        const int j2 = stratum.other_indices.front();
        const double mu_hat = stratum.mu_hat.front();
        const double k0 = std::sqrt(1.0 + mu_hat * mu_hat);
        w.direction[1 + j2] = 1.0 / k0;
        w.direction[1 + jstar] = -mu_hat / k0;
    }

    auto at = [&](double x) { return Vec(through + x * w.direction); };

    // Membership along the full verification range.
    for (int i = 0; i <= 40; ++i) {
        const double x = -100.0 + 200.0 * i / 40.0;
        w.membership_residual =
            std::max(w.membership_residual, std::abs(front.rho_hat(at(x))));
    }

    // Straightness of the image against the chord.
    const Vec y0 = front.position(at(-10.0));
    const Vec y1 = front.position(at(10.0));
    Vec u = y1 - y0;
    u.normalize();
    for (int i = 0; i <= 20; ++i) {
        const double x = -10.0 + 20.0 * i / 20.0;
        const Vec d = front.position(at(x)) - y0;
        w.straightness_residual =
            std::max(w.straightness_residual, (d - d.dot(u) * u).norm());
    }

    // Lift-metric length over [-R, R], 16-point Gauss-Legendre per segment.
    static const double gl_x[8] = {0.0950125098376374, 0.2816035507792589,
                                   0.4580167776572274, 0.6178762444026438,
                                   0.7554044083550030, 0.8656312023878318,
                                   0.9445750230732326, 0.9894009349916499};
    static const double gl_w[8] = {0.1894506104550685, 0.1826034150449236,
                                   0.1691565193950025, 0.1495959888165767,
                                   0.1246289712555339, 0.0951585116824928,
                                   0.0622535239386479, 0.0271524594117541};
    const double radii[3] = {1.0, 10.0, 100.0};
    double sum_lr = 0.0, sum_rr = 0.0;
    for (double R : radii) {
        double len = 0.0;
        const int segs = 8;
        for (int s = 0; s < segs; ++s) {
            const double xa = -R + 2.0 * R * s / segs;
            const double xb = -R + 2.0 * R * (s + 1) / segs;
            const double mid = 0.5 * (xa + xb), half = 0.5 * (xb - xa);
            for (int q = 0; q < 8; ++q) {
                for (double sgn : {-1.0, 1.0}) {
                    const double x = mid + sgn * half * gl_x[q];
                    const Mat g = front.lift_metric(at(x));
                    len += gl_w[q] * half *
                           std::sqrt(w.direction.dot(g * w.direction));
                }
            }
        }
        sum_lr += len * R;
        sum_rr += R * R;
    }
    w.lift_length_slope = sum_lr / sum_rr;
    return w;
}

TheoremReport noncompactness_verdict(const FlatFront& front, int t_grid,
                                     double eps) {
    if (front.dim() < 3)
        throw DimensionTooSmall("noncompactness_verdict requires n >= 3");
    TheoremReport rep;
    rep.strata = stratify_singular_set(front, t_grid, eps);
    if (rep.strata.empty()) {
        rep.verdict = NoncompactnessVerdict::empty_singular_set;
        return rep;
    }
    rep.verdict = NoncompactnessVerdict::noncompact_singular_set;
    const int n = front.dim();
    for (const auto& st : rep.strata) {
        Vec through = Vec::Zero(n);
        through[0] = st.t0;
        if (st.tag == StratumTag::S2) through[1 + st.dominant_index] = st.offset;
        LineWitness w = line_witness(front, st, through);
        if (w.membership_residual > 1e-9 || w.straightness_residual > 1e-8 ||
            std::abs(w.lift_length_slope - 2.0) > 1e-6)
            throw WitnessFailed("line witness failed its post-conditions at t0 = " +
                                std::to_string(st.t0));
        rep.witnesses.push_back(std::move(w));
    }
    return rep;
}

MUSingularReport mu_singular_curve(const MUFront& front, int t_grid) {
    const ScalarFunction& a = front.spec().a;
    const Domain& dom = front.spec().xi->domain();
    const double h = dom.length() / t_grid;
    MUSingularReport rep;
    std::vector<double> roots;
    for (int k = 0; k < t_grid; ++k) {
        const double t = dom.t0 + k * h;
        const double tn = t + h;
        if (a(t) == 0.0) {
            roots.push_back(t);
        } else if ((a(t) <= 0.0) != (a(tn) <= 0.0)) {
            roots.push_back(bisect_root(a, t, tn));
        } else if (std::abs(a(t + 0.5 * h)) < 1e-12) {
            // Grazing zero without a sign change: even multiplicity.
            roots.push_back(t + 0.5 * h);
            rep.count_is_lower_bound = true;
        }
    }
    std::sort(roots.begin(), roots.end());
    if (roots.size() > 1 && roots.back() > dom.t1 - 1e-9 &&
        roots.front() < dom.t0 + 1e-9)
        roots.pop_back();
    double prev = -std::numeric_limits<double>::infinity();
    for (double t : roots) {
        if (t - prev < 1e-9) continue;
        prev = t;
        SingularPointLabel lab;
        lab.t = t;
        lab.type = SingularPointType::non_cuspidal_edge;
        lab.lambda_derivative = a.derivative(t);
        lab.degenerate = std::abs(lab.lambda_derivative) < 1e-6;
        if (lab.degenerate) rep.count_is_lower_bound = true;
        rep.labels.push_back(lab);
    }
    rep.non_cuspidal_count = static_cast<int>(rep.labels.size());
    return rep;
}

}  // namespace flatfront
