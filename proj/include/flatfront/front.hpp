#pragma once

#include <functional>
#include <memory>

#include "flatfront/types.hpp"

namespace flatfront {

// A frontal: a map f from an n-dimensional parameter domain into R^{n+1}
// together with its unit normal (Gauss map) nu.  Parameter vectors p have
// p[0] = t and p[1..n-1] = (w_2, ..., w_n).  Jacobians default to
// fourth-order central finite differences; concrete fronts override with
// closed forms where available.
class Front {
public:
    virtual ~Front() = default;

    virtual int dim() const = 0;  // n = parameter dimension
    int ambient_dim() const { return dim() + 1; }

    virtual Vec position(const Vec& p) const = 0;
    virtual Vec normal(const Vec& p) const = 0;

    // (n+1) x n matrices of partial derivatives.
    virtual Mat jacobian(const Vec& p) const { return fd_jacobian(p); }
    virtual Mat normal_jacobian(const Vec& p) const { return fd_normal_jacobian(p); }

    Mat fd_jacobian(const Vec& p, double h = 1e-3) const;
    Mat fd_normal_jacobian(const Vec& p, double h = 1e-3) const;

    // First fundamental form df . df at p.
    Mat first_fundamental_form(const Vec& p) const;
    // Lift metric df . df + dnu . dnu at p.
    Mat lift_metric(const Vec& p) const;
};

// ---- Control surfaces used by the verification suites ---------------------

// Flat plane patch f(u,v,...) = p0 + sum u_i b_i with constant normal.
class PlanePatch final : public Front {
public:
    PlanePatch(int n);
    int dim() const override { return n_; }
    Vec position(const Vec& p) const override;
    Vec normal(const Vec& p) const override;
    Mat jacobian(const Vec& p) const override;
    Mat normal_jacobian(const Vec& p) const override;

private:
    int n_;
};

// Unit sphere chart f = nu = (cos u cos v, cos u sin v, sin u); n = 2.
class SpherePatch final : public Front {
public:
    int dim() const override { return 2; }
    Vec position(const Vec& p) const override;
    Vec normal(const Vec& p) const override { return position(p); }
};

// Cylinder of radius r over the unit circle, inward normal:
// f(t, w) = (r cos t, r sin t, w_2, ..., w_n).
class CylinderFront final : public Front {
public:
    CylinderFront(double radius, int n) : r_(radius), n_(n) {}
    int dim() const override { return n_; }
    Vec position(const Vec& p) const override;
    Vec normal(const Vec& p) const override;
    double radius() const { return r_; }

private:
    double r_;
    int n_;
};

// f + delta * nu with the same Gauss map.
class ParallelFront final : public Front {
public:
    ParallelFront(std::shared_ptr<const Front> base, double delta)
        : base_(std::move(base)), delta_(delta) {}

    int dim() const override { return base_->dim(); }
    Vec position(const Vec& p) const override {
        return base_->position(p) + delta_ * base_->normal(p);
    }
    Vec normal(const Vec& p) const override { return base_->normal(p); }
    Mat jacobian(const Vec& p) const override {
        return base_->jacobian(p) + delta_ * base_->normal_jacobian(p);
    }
    Mat normal_jacobian(const Vec& p) const override {
        return base_->normal_jacobian(p);
    }

    double offset() const { return delta_; }
    const Front& base() const { return *base_; }

private:
    std::shared_ptr<const Front> base_;
    double delta_;
};

}  // namespace flatfront
