#pragma once

#include <functional>
#include <vector>

#include "flatfront/types.hpp"

namespace flatfront {

// Adaptive Simpson integration of a vector-valued integrand on [a, b].
Vec adaptive_simpson(const std::function<Vec(double)>& f, double a, double b,
                     double tol, int max_depth = 40);

double adaptive_simpson_scalar(const std::function<double(double)>& f, double a,
                               double b, double tol, int max_depth = 40);

// Trapezoid rule over one full period of a smooth periodic integrand.
// Spectrally accurate for trigonometric data.
Vec periodic_trapezoid(const std::function<Vec(double)>& f, double a, double period,
                       int samples = 2048);

// Cumulative integral t -> \int_{t0}^{t} f on a uniform grid of `knots`
// points; each subinterval is integrated with adaptive Simpson so the knot
// values carry the full quadrature accuracy.
std::vector<Vec> cumulative_integral(const std::function<Vec(double)>& f,
                                     const Domain& dom, int knots, double tol);

}  // namespace flatfront
