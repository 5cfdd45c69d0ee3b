#pragma once

#include <vector>

#include "flatfront/front.hpp"
#include "flatfront/types.hpp"

namespace flatfront {

// Relative threshold for numerical rank decisions; two orders above the
// finite-difference floor, calibrated on the cylinder/sphere controls.
inline constexpr double kRankEps = 1e-6;

int numerical_rank(const Mat& M, double eps = kRankEps);

// Singular-value profile of df and dnu over a grid of parameter points,
// with the flatness verdict rank(dnu) <= 1.
struct RankProfile {
    std::vector<Vec> points;
    std::vector<Vec> df_singular_values;   // sorted descending
    std::vector<Vec> dnu_singular_values;  // sorted descending
    std::vector<int> df_rank;
    std::vector<int> dnu_rank;
    double max_secondary_dnu = 0.0;  // max over grid of second sv of dnu
    bool flat = false;
    double eps_rank = kRankEps;
};

RankProfile gauss_rank_profile(const Front& front, const std::vector<Vec>& grid,
                               double eps = kRankEps);

// Residual of the Codazzi identity D_t phi(d_wj) - D_wj phi(d_t) for the
// coordinate fields (whose bracket vanishes), via tangential projection of
// ambient finite differences.  Throws SingularSample at non-immersive points;
// use the parallel front there.
double codazzi_residual(const Front& front, const Vec& p, double h = 1e-4);

// Max norm of R^D(d_t, d_wj) s over an orthonormal section basis s of
// nu(p)^perp, computed extrinsically: D_X s = (ambient derivative of s)
// minus its nu-component.  Only depends on the Gauss map.
double bundle_curvature_residual(const Front& front, const Vec& p,
                                 double h = 1e-3);

// Residual of the metric property X<s,s'> = <D_X s, s'> + <s, D_X s'> of the
// tangential connection at p.
double connection_metric_residual(const Front& front, const Vec& p,
                                  double h = 1e-3);

// Residual of the geodesic equation of the lift metric along the coordinate
// line in direction `j` at p (the line has zero coordinate acceleration, so
// the residual is |Gamma^k_{jj}|).
double lift_geodesic_residual(const Front& front, const Vec& p, int j,
                              double h = 1e-4);

enum class UmbilicClass { umbilic, non_umbilic };

struct UmbilicResult {
    UmbilicClass cls;
    double delta1 = 0.0, delta2 = 0.0;  // scalar pair with delta1 df = delta2 dnu
    double dependence_sv = 0.0;         // smallest sv of the stacked pair
};

// Umbilic test: df and dnu are scalar-proportional through a nontrivial
// (delta1, delta2) iff the two stacked rows [vec df | vec dnu] are linearly
// dependent.
UmbilicResult classify_umbilic(const Front& front, const Vec& p,
                               double tol = 1e-8);

// Principal curvatures (shape operator eigenvalues w.r.t. nu) at an
// immersive point, sorted by decreasing magnitude.  Throws NotImmersed if
// rank(df) < n.
std::vector<double> principal_curvatures(const Front& front, const Vec& p,
                                         double rank_tol = kRankEps);

}  // namespace flatfront
