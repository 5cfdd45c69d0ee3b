#pragma once

#include <optional>
#include <vector>

#include "flatfront/front_builder.hpp"
#include "flatfront/types.hpp"

namespace flatfront {

// rho_hat(t, w) = a(t) - sum_j w_j mu_j(t); the singular set of the normal
// form is exactly its zero set.
class RhoHat {
public:
    explicit RhoHat(std::shared_ptr<const FlatFront> front) : front_(std::move(front)) {}

    double eval(const Vec& p) const { return front_->rho_hat(p); }
    Vec gradient(const Vec& p) const;

    // Scale-aware zero threshold at p: eps relative to 1 + |a| + sum |mu_j||w_j|.
    double scale(const Vec& p) const;
    bool is_singular(const Vec& p, double eps = 1e-8) const {
        return std::abs(eval(p)) < eps * (1.0 + scale(p));
    }

    const FlatFront& front() const { return *front_; }

private:
    std::shared_ptr<const FlatFront> front_;
};

RhoHat rho_hat(std::shared_ptr<const FlatFront> front);

enum class StratumTag { S1, S2 };

// One stratum of the singular set over a t-slice: either a full affine
// (n-1)-plane {t = t0} (S1, at common zeros of a and kappa), or the affine
// graph  w_{j*} = offset - sum_{j != j*} mu_hat_j w_j  (S2, kappa != 0).
struct SingularStratum {
    StratumTag tag;
    double t0 = 0.0;
    int dominant_index = -1;          // S2: j* as 0-based frame index (w_{j*+2})
    double offset = 0.0;              // S2: a(t0) / mu_{j*}(t0)
    std::vector<double> mu_hat;       // S2: mu_j / mu_{j*} for the other indices
    std::vector<int> other_indices;   // S2: 0-based frame indices paired with mu_hat
};

// Slice classification over a uniform t grid; S1 slices are refined by
// root-finding on a(t).  Slices with kappa ~ 0 but a != 0 are regular and
// excluded.
std::vector<SingularStratum> stratify_singular_set(const FlatFront& front,
                                                   int t_grid = 512,
                                                   double eps = 1e-8);

// Line contained in the singular set whose image under f is a straight line;
// the witness certifying that the singular set is not compact.
struct LineWitness {
    StratumTag tag;
    Vec base;       // point on the line (parameter space)
    Vec direction;  // unit direction w.r.t. the w-coordinates (dt = 0)
    double membership_residual = 0.0;   // max |rho_hat| along the line
    double straightness_residual = 0.0; // max deviation of f from the chord
    double lift_length_slope = 0.0;     // d(length)/dR over R in {1,10,100}
};

// Construct and verify the witness through `through` (a parameter point on
// the stratum; for S1 any w, for S2 a point on the graph).  Throws
// DimensionTooSmall for S2 strata when n = 2.
LineWitness line_witness(const FlatFront& front, const SingularStratum& stratum,
                         const Vec& through);

enum class NoncompactnessVerdict { empty_singular_set, noncompact_singular_set };

struct TheoremReport {
    NoncompactnessVerdict verdict;
    std::vector<SingularStratum> strata;
    std::vector<LineWitness> witnesses;
};

// The computational content of the main nonexistence mechanism: for n >= 3
// either the singular set is empty or it carries straight-line witnesses and
// cannot be compact.  Throws WitnessFailed if a singular sample admits no
// passing witness.
TheoremReport noncompactness_verdict(const FlatFront& front, int t_grid = 512,
                                     double eps = 1e-8);

// ---- Singular curve of the closed n = 2 construction ----------------------

enum class SingularPointType { cuspidal_edge, non_cuspidal_edge };

struct SingularPointLabel {
    double t = 0.0;  // on the singular curve {v = 0}
    SingularPointType type;
    double lambda_derivative = 0.0;  // d(a)/dt at the point, for non-cusp labels
    bool degenerate = false;         // |a'| below resolution: multiplicity >= 2
};

struct MUSingularReport {
    std::vector<SingularPointLabel> labels;  // non-cuspidal-edge points
    int non_cuspidal_count = 0;
    bool count_is_lower_bound = false;  // set when a degenerate zero was seen
};

// Singular set of an MU front is {v = 0}; each point is a cuspidal edge iff
// a(t) != 0, and the zeros of a over one period are the non-cuspidal-edge
// points.
MUSingularReport mu_singular_curve(const MUFront& front, int t_grid = 2048);

}  // namespace flatfront
