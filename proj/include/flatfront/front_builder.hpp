#pragma once

#include <memory>
#include <vector>

#include "flatfront/bishop.hpp"
#include "flatfront/front.hpp"
#include "flatfront/interp.hpp"
#include "flatfront/scalar_function.hpp"
#include "flatfront/sphere_curve.hpp"

namespace flatfront {

// Cumulative integral of a vector-valued integrand over the curve domain,
// cached on a dense grid; extends over periods by adding the full-period
// total.
class CumulativeIntegral {
public:
    CumulativeIntegral() = default;
    CumulativeIntegral(std::function<Vec(double)> integrand, Domain dom,
                       int knots = 4097, double tol = 1e-10);

    Vec eval(double t) const;
    Vec derivative(double t) const { return integrand_(t); }
    const Vec& total() const { return total_; }

private:
    std::function<Vec(double)> integrand_;
    Domain dom_;
    HermiteSpline spline_;
    Vec total_;
};

// ---- Closed-front representation (n = 2) ----------------------------------

struct MUFrontSpec {
    std::shared_ptr<const SphericalCurve> xi;  // closed curve in S^2, period 2*pi
    ScalarFunction a;                          // density of the 1-form a(t) dt
    bool strict_inflection = true;
};

// Componentwise periodic quadrature of \int a(t) xi(t) dt over one period.
Vec closure_check(const MUFrontSpec& spec);

// f(t, v) = sigma_hat(t) + v xi(t), nu = xi x xi' / |xi'|.
class MUFront final : public Front {
public:
    explicit MUFront(MUFrontSpec spec);

    int dim() const override { return 2; }
    Vec position(const Vec& p) const override;
    Vec normal(const Vec& p) const override;
    Mat jacobian(const Vec& p) const override;

    const MUFrontSpec& spec() const { return spec_; }
    const Vec& closure_residual() const { return closure_; }
    bool is_complete() const { return complete_; }
    Vec sigma_hat(double t) const { return sigma_.eval(t); }

private:
    MUFrontSpec spec_;
    CumulativeIntegral sigma_;
    Vec closure_;
    bool complete_ = false;
};

std::shared_ptr<MUFront> build_mu_front(MUFrontSpec spec);

// ---- General ruled representation -----------------------------------------

struct GeneralRuledSpec {
    std::shared_ptr<const BishopFrameField> frame;  // carries the base curve
    // a[0] multiplies the tangent e; a[j] multiplies e_{j+1} for j >= 1.
    std::vector<ScalarFunction> a;
};

// f(t, w) = sigma(t) + sum_j w_j e_j(t) with sigma' = a_1 e + sum a_j e_j.
class GeneralRuledFront final : public Front {
public:
    explicit GeneralRuledFront(GeneralRuledSpec spec);

    int dim() const override;
    Vec position(const Vec& p) const override;
    Vec normal(const Vec& p) const override;
    Mat jacobian(const Vec& p) const override;
    Mat normal_jacobian(const Vec& p) const override;

    const GeneralRuledSpec& spec() const { return spec_; }
    Vec sigma(double t) const { return sigma_.eval(t); }

private:
    GeneralRuledSpec spec_;
    CumulativeIntegral sigma_;
};

std::shared_ptr<GeneralRuledFront> build_general_front(GeneralRuledSpec spec);

// ---- Normal form ----------------------------------------------------------

struct FlatFrontSpec {
    std::shared_ptr<const BishopFrameField> frame;
    ScalarFunction a;
};

// f(t, w) = sigma_hat(t) + sum_j w_j e_j(t) with sigma_hat' = a gamma'.
class FlatFront final : public Front {
public:
    explicit FlatFront(FlatFrontSpec spec);

    int dim() const override;
    Vec position(const Vec& p) const override;
    Vec normal(const Vec& p) const override;
    Mat jacobian(const Vec& p) const override;
    Mat normal_jacobian(const Vec& p) const override;

    const FlatFrontSpec& spec() const { return spec_; }
    const BishopFrameField& frame() const { return *spec_.frame; }
    const SphericalCurve& curve() const { return spec_.frame->curve(); }
    Vec sigma_hat(double t) const { return sigma_.eval(t); }

    double rho_hat(const Vec& p) const;
    // Closed form of the lift metric: diag(1 + rho_hat^2, 1, ..., 1).
    Mat lift_metric_closed_form(const Vec& p) const;

    // a == 0 and kappa == 0 everywhere: the image degenerates to a hyperplane.
    bool totally_degenerate() const { return degenerate_; }

private:
    FlatFrontSpec spec_;
    CumulativeIntegral sigma_;
    bool degenerate_ = false;
};

std::shared_ptr<FlatFront> build_flat_front(FlatFrontSpec spec);

// Coordinate change w_j -> w_j + b_j(t), b_j = -int a_j, reducing a general
// ruled spec over a Bishop frame to normal form.  Throws NotBishopFrame if
// the frame derivatives have components off the tangent beyond tol.
struct NormalFormReduction {
    FlatFrontSpec spec;
    std::function<Vec(double)> b;  // (b_2, ..., b_n)(t)
};

NormalFormReduction normal_form_reduction(const GeneralRuledSpec& spec,
                                          double tol = 1e-6);

std::shared_ptr<ParallelFront> parallel_front(std::shared_ptr<const Front> base,
                                              double delta);

}  // namespace flatfront
