// Acceptance gate: property-based checks of the library's headline claims at
// desk scale, with pinned tolerances.  Prints one [PASS]/[FAIL] line per
// criterion; exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "flatfront/commands.hpp"
#include "flatfront/diffgeo.hpp"
#include "flatfront/singular.hpp"

using namespace flatfront;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok,
            const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion,
                name.c_str(), detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// Random whitelisted density: sin/cos terms of low frequency.
SceneConfig::Curve fourier_near_great_circle(std::mt19937& rng, int ambient) {
    std::uniform_real_distribution<double> pert(-0.2, 0.2);
    SceneConfig::Curve c;
    c.preset = "fourier";
    c.cos_coef.assign(ambient, std::vector<double>(4, 0.0));
    c.sin_coef.assign(ambient, std::vector<double>(4, 0.0));
    c.cos_coef[0][1] = 1.0;
    c.sin_coef[1][1] = 1.0;
    // Damp higher harmonics to keep the curve regular with moderate curvature.
    for (int i = 0; i < ambient; ++i)
        for (int k = 0; k < 4; ++k) {
            c.cos_coef[i][k] += pert(rng) / (1.0 + k * k);
            c.sin_coef[i][k] += pert(rng) / (1.0 + k * k);
        }
    return c;
}

TrigPoly random_density(std::mt19937& rng) {
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_int_distribution<int> freq(1, 3);
    std::uniform_int_distribution<int> kind(0, 1);
    std::vector<TrigPolyTerm> terms;
    for (int k = 0; k < 2; ++k) {
        TrigPolyTerm t;
        t.coef = coef(rng);
        t.trig = kind(rng) ? TrigPolyTerm::Trig::sin : TrigPolyTerm::Trig::cos;
        t.freq = freq(rng);
        terms.push_back(t);
    }
    return TrigPoly(terms);
}

struct Instance {
    Scene scene;
    int n = 0;
};

std::vector<Instance> build_instances() {
    std::mt19937 rng(20240612);
    std::vector<Instance> out;
    const int dims[3] = {2, 3, 4};
    for (int k = 0; k < 20; ++k) {
        SceneConfig cfg;
        cfg.dimension = dims[k % 3];
        cfg.front_type = "flat";
        cfg.curve = fourier_near_great_circle(rng, cfg.dimension + 1);
        cfg.a = random_density(rng);
        Instance inst;
        inst.scene = build_scene(cfg);
        inst.n = cfg.dimension;
        out.push_back(std::move(inst));
    }
    return out;
}

Vec sample_point(std::mt19937& rng, const Instance& inst) {
    const Domain& dom = inst.scene.curve->domain();
    // Keep finite-difference stencils clear of the period seam, where the
    // integrated frame of a closed curve picks up its holonomy rotation.
    std::uniform_real_distribution<double> ut(dom.t0 + 0.02, dom.t1 - 0.02);
    std::uniform_real_distribution<double> uw(-2.0, 2.0);
    Vec p(inst.n);
    p[0] = ut(rng);
    for (int j = 1; j < inst.n; ++j) p[j] = uw(rng);
    return p;
}

}  // namespace

int main() {
    const auto wall0 = std::chrono::steady_clock::now();
    std::vector<Instance> instances = build_instances();
    std::mt19937 rng(8891);

    // 1. Flatness: rank(dnu) <= 1 on all randomized instances, sphere control
    //    non-flat.
    {
        double worst = 0.0;
        bool all_flat = true;
        for (const auto& inst : instances) {
            std::vector<Vec> grid;
            for (int s = 0; s < 60; ++s) grid.push_back(sample_point(rng, inst));
            RankProfile prof = gauss_rank_profile(*inst.scene.flat, grid);
            worst = std::max(worst, prof.max_secondary_dnu);
            all_flat = all_flat && prof.flat;
        }
        std::vector<Vec> sgrid;
        for (int s = 0; s < 10; ++s) {
            Vec p(2);
            p << 0.1 * s, 0.2 * s - 0.5;
            sgrid.push_back(p);
        }
        const bool sphere_not_flat = !gauss_rank_profile(SpherePatch{}, sgrid).flat;
        const auto wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0)
                .count();
        report(1, "flatness rank(dnu) <= 1",
               all_flat && worst < 1e-6 && sphere_not_flat && wall < 30.0,
               "max secondary sv " + fmt(worst) + ", sphere control " +
                   (sphere_not_flat ? "non-flat" : "flat") + ", " + fmt(wall) + " s");
    }

    // 2. Representation consistency: FD partials match f_t = rho_hat e,
    //    f_wj = e_j on 10^3 samples per instance.
    {
        double worst = 0.0;
        for (const auto& inst : instances) {
            const FlatFront& f = *inst.scene.flat;
            for (int s = 0; s < 1000; ++s) {
                const Vec p = sample_point(rng, inst);
                const Mat fd = f.fd_jacobian(p);
                const Vec gp = inst.scene.curve->derivative(p[0], 1);
                worst = std::max(worst, (fd.col(0) - f.rho_hat(p) * gp).norm());
                for (int j = 1; j < inst.n; ++j)
                    worst = std::max(
                        worst,
                        (fd.col(j) - inst.scene.frame->frame_vector(j - 1, p[0]))
                            .norm());
            }
        }
        report(2, "representation f_t = rho_hat e, f_wj = e_j", worst < 1e-7,
               "max residual " + fmt(worst));
    }

    // 3. Lift metric closed form and geodesic w-lines.
    {
        double metric_worst = 0.0, geo_worst = 0.0;
        for (const auto& inst : instances) {
            const FlatFront& f = *inst.scene.flat;
            for (int s = 0; s < 100; ++s) {
                const Vec p = sample_point(rng, inst);
                const Mat fd = f.fd_jacobian(p);
                const Mat fdn = f.fd_normal_jacobian(p);
                const Mat assembled = fd.transpose() * fd + fdn.transpose() * fdn;
                metric_worst = std::max(metric_worst,
                                        (assembled - f.lift_metric_closed_form(p))
                                            .lpNorm<Eigen::Infinity>());
            }
            for (int s = 0; s < 20; ++s) {
                const Vec p = sample_point(rng, inst);
                for (int j = 1; j < inst.n; ++j)
                    geo_worst = std::max(geo_worst, lift_geodesic_residual(f, p, j));
            }
        }
        report(3, "lift metric (1+rho^2)dt^2 + sum dw^2, geodesic w-lines",
               metric_worst < 1e-7 && geo_worst < 1e-6,
               "metric residual " + fmt(metric_worst) + ", geodesic residual " +
                   fmt(geo_worst));
    }

    // 4. Non-compactness mechanism: witnesses on all singular instances,
    //    empty singular set for cylinder-type instances.
    {
        std::uniform_real_distribution<double> theta(0.5, 1.1);
        std::uniform_real_distribution<double> level(0.5, 2.0);
        bool ok = true;
        std::string note = "10 singular + 5 cylinder-type instances";
        try {
            for (int k = 0; k < 10; ++k) {
                SceneConfig cfg;
                cfg.dimension = 3;
                cfg.curve.preset = "small_circle";
                cfg.curve.theta0 = theta(rng);
                cfg.front_type = "flat";
                cfg.a = random_density(rng);
                Scene scene = build_scene(cfg);
                TheoremReport rep = noncompactness_verdict(*scene.flat, 128);
                bool good =
                    rep.verdict == NoncompactnessVerdict::noncompact_singular_set &&
                    rep.witnesses.size() == rep.strata.size() &&
                    !rep.witnesses.empty();
                for (const LineWitness& w : rep.witnesses)
                    good = good && w.membership_residual < 1e-9 &&
                           w.straightness_residual < 1e-8 &&
                           std::abs(w.lift_length_slope - 2.0) < 1e-6;
                if (!good) {
                    ok = false;
                    note = "witness check failed at instance " + std::to_string(k);
                }
            }
            for (int k = 0; k < 5; ++k) {
                SceneConfig cfg;
                cfg.dimension = 3;
                cfg.curve.preset = "great_circle";
                cfg.front_type = "flat";
                cfg.a = TrigPoly::constant(level(rng));
                Scene scene = build_scene(cfg);
                if (noncompactness_verdict(*scene.flat).verdict !=
                    NoncompactnessVerdict::empty_singular_set) {
                    ok = false;
                    note = "cylinder-type instance " + std::to_string(k) +
                           " not recognized as empty";
                }
            }
        } catch (const FlatFrontError& e) {
            ok = false;
            note = e.what();
        }
        report(4, "singular sets carry straight-line witnesses", ok, note);
    }

    // 5. Closed n = 2 front: small circle directrix, a = sin 2t.
    {
        const auto t0 = std::chrono::steady_clock::now();
        SceneConfig cfg = parse_config_text(R"({
            "dimension": 2,
            "curve": { "preset": "small_circle", "theta0": 0.7853981633974483 },
            "front": { "type": "mu",
                       "a": { "terms": [ { "coef": 1.0, "trig": "sin", "freq": 2 } ] } },
            "grid": { "t": 256, "w": 64 }
        })");
        CommandResult res = cmd_mu(cfg);
        const double closure = res.report.at("closure_residual").get<double>();
        const int count = res.report.at("non_cuspidal_edge_count").get<int>();
        const int mismatches = res.report.at("zero_set_mismatches").get<int>();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        report(5, "closed MU front with four non-cuspidal-edge points",
               closure < 1e-10 && count == 4 && mismatches == 0 && secs < 10.0,
               "closure " + fmt(closure) + ", count " + std::to_string(count) +
                   ", zero-set mismatches " + std::to_string(mismatches) + ", " +
                   fmt(secs) + " s");
    }

    // 6. Coherent-bundle flatness: R^D residual below 5e-5 on flat instances,
    //    order one on the sphere control.
    {
        double worst = 0.0;
        for (const auto& inst : instances) {
            auto flat = inst.scene.flat;
            RhoHat rho(flat);
            for (int s = 0; s < 4; ++s) {
                Vec p = sample_point(rng, inst);
                if (rho.is_singular(p, 1e-3)) {
                    ParallelFront par(flat, 0.2);
                    worst = std::max(worst, bundle_curvature_residual(par, p));
                } else {
                    worst = std::max(worst, bundle_curvature_residual(*flat, p));
                }
            }
        }
        Vec sp(2);
        sp << 0.4, 0.8;
        const double sphere = bundle_curvature_residual(SpherePatch{}, sp);
        report(6, "coherent bundle curvature R^D = 0",
               worst < 5e-5 && sphere > 0.5,
               "max flat residual " + fmt(worst) + ", sphere control " +
                   fmt(sphere));
    }

    // 7. Parallel fronts have a single nonzero principal curvature.
    {
        double worst = 0.0;
        for (const auto& inst : instances) {
            ParallelFront par(inst.scene.flat, 0.15);
            int done = 0;
            while (done < 100) {
                const Vec p = sample_point(rng, inst);
                try {
                    const auto lam = principal_curvatures(par, p);
                    worst = std::max(worst, std::abs(lam[1]));
                    ++done;
                } catch (const NotImmersed&) {
                    // resample away from the (measure-zero) singular set
                }
            }
        }
        report(7, "parallel front secondary principal curvatures vanish",
               worst < 1e-6, "max |lambda_2| " + fmt(worst));
    }

    // 8. Normal-form reduction preserves the image.
    {
        std::uniform_real_distribution<double> theta(0.5, 1.1);
        double worst = 0.0;
        for (int k = 0; k < 10; ++k) {
            SceneConfig cfg;
            cfg.dimension = 3;
            cfg.curve.preset = "small_circle";
            cfg.curve.theta0 = theta(rng);
            cfg.front_type = "general";
            for (int j = 0; j < 3; ++j) cfg.a_list.push_back(random_density(rng));
            Scene scene = build_scene(cfg);
            const GeneralRuledFront& gen = *scene.general;
            NormalFormReduction red = normal_form_reduction(gen.spec());
            FlatFront flat(red.spec);
            const Domain& dom = scene.curve->domain();
            std::uniform_real_distribution<double> ut(dom.t0, dom.t1);
            std::uniform_real_distribution<double> uw(-2.0, 2.0);
            for (int s = 0; s < 40; ++s) {
                const double t = ut(rng);
                const Vec b = red.b(t);
                Vec pg(3), pf(3);
                pg << t, uw(rng), uw(rng);
                pf << t, pg[1] - b[0], pg[2] - b[1];
                worst = std::max(worst, (gen.position(pg) - flat.position(pf)).norm());
            }
        }
        report(8, "normal-form reduction image equality", worst < 1e-8,
               "max residual " + fmt(worst));
    }

    // 9. Determinism: verify reports are byte-identical across runs.
    {
        SceneConfig cfg = parse_config_text(R"({
            "dimension": 3,
            "curve": { "preset": "small_circle", "theta0": 0.7853981633974483 },
            "front": { "type": "flat",
                       "a": { "terms": [ { "coef": 1.0, "trig": "sin", "freq": 2 } ] } },
            "grid": { "t": 32, "w": 9 }
        })");
        const std::string r1 = report_to_string(cmd_verify(cfg).report);
        const std::string r2 = report_to_string(cmd_verify(cfg).report);
        report(9, "byte-identical verification reports", r1 == r2,
               r1 == r2 ? "identical" : "mismatch");
    }

    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0)
            .count();
    std::printf("%d/9 criteria passed in %.1f s\n", 9 - failures, total);
    return failures;
}
