#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "flatfront/singular.hpp"

using namespace flatfront;

namespace {

std::shared_ptr<const BishopFrameField> frame_of(SphericalCurve c) {
    auto curve = std::make_shared<SphericalCurve>(std::move(c));
    return std::make_shared<BishopFrameField>(integrate_bishop_frame(curve));
}

// Geodesic base: kappa = 0, so the singular set consists of S1 planes at the
// zeros of a.
std::shared_ptr<const FlatFront> geodesic_front(ScalarFunction a,
                                                int ambient = 4) {
    return std::make_shared<FlatFront>(
        FlatFrontSpec{frame_of(great_circle(ambient)), std::move(a)});
}

// Curved base: kappa = cot(theta0) > 0 everywhere, all slices S2.
std::shared_ptr<const FlatFront> curved_front(ScalarFunction a, int ambient = 4,
                                              double theta0 = M_PI / 4) {
    return std::make_shared<FlatFront>(FlatFrontSpec{
        frame_of(arc_length_reparametrize(small_circle(theta0, ambient))),
        std::move(a)});
}

Vec p3(double a, double b, double c) {
    Vec p(3);
    p << a, b, c;
    return p;
}

}  // namespace

TEST_CASE("rho_hat and its gradient on a geodesic base") {
    auto front = geodesic_front(TrigPoly::sin_kt(1.0, 1).as_function());
    RhoHat rho(front);
    for (double t : {0.3, 1.9}) {
        for (double w : {-2.0, 0.5}) {
            const Vec p = p3(t, w, -w);
            // mu = 0 on a great circle: rho_hat = a(t) = sin t.
            CHECK(rho.eval(p) == doctest::Approx(std::sin(t)).epsilon(1e-9));
            const Vec g = rho.gradient(p);
            CHECK(g[0] == doctest::Approx(std::cos(t)).epsilon(1e-8));
            CHECK(std::abs(g[1]) < 1e-9);
        }
    }
    CHECK(rho.is_singular(p3(0.0, 1.0, 2.0)));
    CHECK(rho.is_singular(p3(M_PI, -3.0, 0.0)));
    CHECK_FALSE(rho.is_singular(p3(1.0, 0.0, 0.0)));
}

TEST_CASE("stratification: geodesic base yields S1 planes at zeros of a") {
    auto front = geodesic_front(TrigPoly::sin_kt(1.0, 1).as_function());
    auto strata = stratify_singular_set(*front);
    REQUIRE(strata.size() == 2);
    for (const auto& st : strata) CHECK(st.tag == StratumTag::S1);
    CHECK(strata[0].t0 == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(strata[1].t0 == doctest::Approx(M_PI).epsilon(1e-9));
}

TEST_CASE("stratification: curved base yields S2 graphs on every slice") {
    auto front = curved_front(TrigPoly::sin_kt(1.0, 2).as_function());
    auto strata = stratify_singular_set(*front, 64);
    REQUIRE(strata.size() == 64);
    RhoHat rho(front);
    for (const auto& st : strata) {
        REQUIRE(st.tag == StratumTag::S2);
        REQUIRE(st.dominant_index >= 0);
        REQUIRE(st.mu_hat.size() == 1);
        // The graph point (w_{j*} = offset, others 0) lies on the zero set.
        Vec p = Vec::Zero(3);
        p[0] = st.t0;
        p[1 + st.dominant_index] = st.offset;
        CHECK(std::abs(rho.eval(p)) < 1e-10);
        // ... and so does a point displaced along the graph.
        const int j2 = st.other_indices.front();
        p[1 + j2] += 1.7;
        p[1 + st.dominant_index] -= 1.7 * st.mu_hat.front();
        CHECK(std::abs(rho.eval(p)) < 1e-9);
    }
}

TEST_CASE("regular slices are excluded: geodesic base with nonvanishing a") {
    auto front = geodesic_front(ScalarFunction::constant(2.0));
    CHECK(stratify_singular_set(*front).empty());
}

TEST_CASE("S1 line witness: exact membership, straight image, slope 2") {
    auto front = geodesic_front(TrigPoly::sin_kt(1.0, 1).as_function());
    auto strata = stratify_singular_set(*front);
    REQUIRE(!strata.empty());
    const Vec through = p3(strata[0].t0, 0.4, -1.2);
    LineWitness w = line_witness(*front, strata[0], through);
    CHECK(w.membership_residual < 1e-9);
    CHECK(w.straightness_residual < 1e-8);
    CHECK(w.lift_length_slope == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(w.direction.norm() == doctest::Approx(1.0));
    CHECK(w.direction[0] == 0.0);
}

TEST_CASE("S2 line witness on a curved base (n = 3)") {
    auto front = curved_front(TrigPoly::cos_kt(0.7, 1).as_function());
    auto strata = stratify_singular_set(*front, 32);
    REQUIRE(!strata.empty());
    for (std::size_t k = 0; k < strata.size(); k += 7) {
        const auto& st = strata[k];
        Vec through = Vec::Zero(3);
        through[0] = st.t0;
        through[1 + st.dominant_index] = st.offset;
        LineWitness w = line_witness(*front, st, through);
        CHECK(w.membership_residual < 1e-9);
        CHECK(w.straightness_residual < 1e-8);
        CHECK(w.lift_length_slope == doctest::Approx(2.0).epsilon(1e-6));
    }
}

TEST_CASE("S2 strata carry no line for n = 2") {
    auto front = curved_front(TrigPoly::sin_kt(1.0, 2).as_function(), 3);
    auto strata = stratify_singular_set(*front, 16);
    REQUIRE(!strata.empty());
    REQUIRE(strata[0].tag == StratumTag::S2);
    Vec through(2);
    through << strata[0].t0, strata[0].offset;
    CHECK_THROWS_AS(line_witness(*front, strata[0], through), DimensionTooSmall);
}

TEST_CASE("noncompactness verdicts") {
    SUBCASE("nonvanishing a over a geodesic base: empty singular set") {
        auto rep = noncompactness_verdict(*geodesic_front(ScalarFunction::constant(1.0)));
        CHECK(rep.verdict == NoncompactnessVerdict::empty_singular_set);
        CHECK(rep.witnesses.empty());
    }
    SUBCASE("curved base: witnesses on every stratum") {
        auto rep = noncompactness_verdict(
            *curved_front(TrigPoly::sin_kt(1.0, 2).as_function()), 64);
        CHECK(rep.verdict == NoncompactnessVerdict::noncompact_singular_set);
        CHECK(rep.witnesses.size() == rep.strata.size());
    }
    SUBCASE("geodesic base with zeros of a: S1 witnesses") {
        auto rep = noncompactness_verdict(
            *geodesic_front(TrigPoly::sin_kt(1.0, 1).as_function()));
        CHECK(rep.verdict == NoncompactnessVerdict::noncompact_singular_set);
        REQUIRE(rep.witnesses.size() == 2);
    }
    SUBCASE("n = 2 is rejected") {
        CHECK_THROWS_AS(
            noncompactness_verdict(*geodesic_front(ScalarFunction::constant(1.0), 3)),
            DimensionTooSmall);
    }
}

TEST_CASE("MU singular curve: sin 2t has four simple non-cuspidal points") {
    auto xi = std::make_shared<SphericalCurve>(small_circle(M_PI / 4));
    MUFront front({xi, TrigPoly::sin_kt(1.0, 2).as_function(), true});
    MUSingularReport rep = mu_singular_curve(front);
    CHECK(rep.non_cuspidal_count == 4);
    CHECK_FALSE(rep.count_is_lower_bound);
    const double expect[4] = {0.0, M_PI / 2, M_PI, 3 * M_PI / 2};
    REQUIRE(rep.labels.size() == 4);
    for (int k = 0; k < 4; ++k) {
        CHECK(rep.labels[k].t == doctest::Approx(expect[k]).epsilon(1e-8));
        CHECK(std::abs(rep.labels[k].lambda_derivative) ==
              doctest::Approx(2.0).epsilon(1e-8));
        CHECK_FALSE(rep.labels[k].degenerate);
    }
}

TEST_CASE("MU singular curve: nonvanishing a has none") {
    auto xi = std::make_shared<SphericalCurve>(small_circle(M_PI / 4));
    MUFront front({xi, ScalarFunction::constant(1.0), true});
    CHECK(mu_singular_curve(front).non_cuspidal_count == 0);
}

TEST_CASE("MU singular curve: simple-zero counts are even (property test)") {
    auto xi = std::make_shared<SphericalCurve>(small_circle(M_PI / 4));
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_int_distribution<int> freq(1, 3);
    for (int trial = 0; trial < 6; ++trial) {
        CAPTURE(trial);
        TrigPoly a({{coef(rng), 0, TrigPolyTerm::Trig::sin, freq(rng)},
                    {coef(rng), 0, TrigPolyTerm::Trig::cos, freq(rng)},
                    {0.2 * coef(rng), 0, TrigPolyTerm::Trig::none, 0}});
        MUFront front({xi, a.as_function(), true});
        MUSingularReport rep = mu_singular_curve(front);
        if (!rep.count_is_lower_bound) CHECK(rep.non_cuspidal_count % 2 == 0);
    }
}

TEST_CASE("MU zero set is exactly {v = 0} for nonvanishing a") {
    auto xi = std::make_shared<SphericalCurve>(small_circle(M_PI / 4));
    MUFront front({xi, ScalarFunction::constant(1.0), true});
    for (double t : {0.2, 1.5, 4.0}) {
        Vec p(2);
        p << t, 0.0;
        Eigen::JacobiSVD<Mat> svd(front.jacobian(p));
        CHECK(svd.singularValues()[1] < 1e-10);  // singular on {v = 0}
        p[1] = 0.5;
        Eigen::JacobiSVD<Mat> svd2(front.jacobian(p));
        CHECK(svd2.singularValues()[1] > 1e-3);  // immersed off it
    }
}
