#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace flatfront {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Parameter domain of a curve: a closed interval, optionally identified
// end-to-end (period = t1 - t0).
struct Domain {
    double t0 = 0.0;
    double t1 = 1.0;
    bool periodic = false;

    double length() const { return t1 - t0; }

    // Map t into [t0, t1) for periodic domains; clamp-free for intervals.
    double wrap(double t) const {
        if (!periodic) return t;
        const double L = length();
        double s = std::fmod(t - t0, L);
        if (s < 0) s += L;
        return t0 + s;
    }
};

struct FlatFrontError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonRegularCurve : FlatFrontError {
    using FlatFrontError::FlatFrontError;
};
struct BadInitialFrame : FlatFrontError {
    using FlatFrontError::FlatFrontError;
};
struct FrameDriftExceeded : FlatFrontError {
    using FlatFrontError::FlatFrontError;
};
struct NotBishopFrame : FlatFrontError {
    using FlatFrontError::FlatFrontError;
};
struct InflectionPoint : FlatFrontError {
    using FlatFrontError::FlatFrontError;
};
struct SingularSample : FlatFrontError {
    using FlatFrontError::FlatFrontError;
};
struct NotImmersed : FlatFrontError {
    using FlatFrontError::FlatFrontError;
};
struct DimensionTooSmall : FlatFrontError {
    using FlatFrontError::FlatFrontError;
};
struct WitnessFailed : FlatFrontError {
    using FlatFrontError::FlatFrontError;
};
struct ConfigError : FlatFrontError {
    using FlatFrontError::FlatFrontError;
};
struct IoFailure : FlatFrontError {
    using FlatFrontError::FlatFrontError;
};

}  // namespace flatfront
