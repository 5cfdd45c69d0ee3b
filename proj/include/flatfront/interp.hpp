#pragma once

#include <cassert>
#include <cmath>
#include <vector>

#include "flatfront/types.hpp"

namespace flatfront {

// Vector-valued cubic Hermite spline on a uniform knot grid.  Knot values and
// knot derivatives are supplied by the caller, so the interpolant is C^1 and
// its first derivative matches the supplied field at knots.
class HermiteSpline {
public:
    HermiteSpline() = default;

    HermiteSpline(Domain dom, std::vector<Vec> values, std::vector<Vec> derivs)
        : dom_(dom), values_(std::move(values)), derivs_(std::move(derivs)) {
        assert(values_.size() == derivs_.size());
        assert(values_.size() >= 2);
        // For periodic domains the last knot sits at t1 and duplicates t0.
        h_ = dom_.length() / static_cast<double>(values_.size() - 1);
    }

    bool empty() const { return values_.empty(); }
    int dim() const { return values_.empty() ? 0 : static_cast<int>(values_[0].size()); }
    double step() const { return h_; }
    const Domain& domain() const { return dom_; }

    Vec eval(double t) const { return piece(t, 0); }
    Vec derivative(double t) const { return piece(t, 1); }
    Vec second_derivative(double t) const { return piece(t, 2); }

private:
    Vec piece(double t, int order) const {
        t = dom_.wrap(t);
        double u = (t - dom_.t0) / h_;
        int k = static_cast<int>(std::floor(u));
        const int last = static_cast<int>(values_.size()) - 2;
        if (k < 0) k = 0;
        if (k > last) k = last;
        const double s = u - k;  // local coordinate in [0,1]

        const Vec& p0 = values_[k];
        const Vec& p1 = values_[k + 1];
        const Vec m0 = h_ * derivs_[k];
        const Vec m1 = h_ * derivs_[k + 1];

        if (order == 0) {
            const double s2 = s * s, s3 = s2 * s;
            return (2 * s3 - 3 * s2 + 1) * p0 + (s3 - 2 * s2 + s) * m0 +
                   (-2 * s3 + 3 * s2) * p1 + (s3 - s2) * m1;
        }
        if (order == 1) {
            const double s2 = s * s;
            Vec d = (6 * s2 - 6 * s) * p0 + (3 * s2 - 4 * s + 1) * m0 +
                    (-6 * s2 + 6 * s) * p1 + (3 * s2 - 2 * s) * m1;
            return d / h_;
        }
        Vec d2 = (12 * s - 6) * p0 + (6 * s - 4) * m0 + (-12 * s + 6) * p1 +
                 (6 * s - 2) * m1;
        return d2 / (h_ * h_);
    }

    Domain dom_;
    std::vector<Vec> values_;
    std::vector<Vec> derivs_;
    double h_ = 1.0;
};

}  // namespace flatfront
