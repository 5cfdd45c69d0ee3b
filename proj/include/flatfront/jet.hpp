#pragma once

#include <cmath>

namespace flatfront {

// Truncated Taylor data (value and first three derivatives) of a scalar
// function of one variable.  Enough arithmetic to push curve presets through
// normalization and trigonometric composition with exact derivatives.
struct Jet3 {
    double v = 0, d1 = 0, d2 = 0, d3 = 0;

    static Jet3 variable(double t) { return {t, 1.0, 0.0, 0.0}; }
    static Jet3 constant(double c) { return {c, 0.0, 0.0, 0.0}; }
};

inline Jet3 operator+(const Jet3& a, const Jet3& b) {
    return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}
inline Jet3 operator-(const Jet3& a, const Jet3& b) {
    return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3};
}
inline Jet3 operator-(const Jet3& a) { return {-a.v, -a.d1, -a.d2, -a.d3}; }
inline Jet3 operator*(double c, const Jet3& a) {
    return {c * a.v, c * a.d1, c * a.d2, c * a.d3};
}
inline Jet3 operator*(const Jet3& a, double c) { return c * a; }

// Leibniz rule through order 3.
inline Jet3 operator*(const Jet3& a, const Jet3& b) {
    Jet3 r;
    r.v = a.v * b.v;
    r.d1 = a.d1 * b.v + a.v * b.d1;
    r.d2 = a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2;
    r.d3 = a.d3 * b.v + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.v * b.d3;
    return r;
}

// f(u) composed with a jet u, via Faa di Bruno through order 3.
inline Jet3 compose(double f0, double f1, double f2, double f3, const Jet3& u) {
    Jet3 r;
    r.v = f0;
    r.d1 = f1 * u.d1;
    r.d2 = f2 * u.d1 * u.d1 + f1 * u.d2;
    r.d3 = f3 * u.d1 * u.d1 * u.d1 + 3.0 * f2 * u.d1 * u.d2 + f1 * u.d3;
    return r;
}

inline Jet3 sin(const Jet3& u) {
    const double s = std::sin(u.v), c = std::cos(u.v);
    return compose(s, c, -s, -c, u);
}
inline Jet3 cos(const Jet3& u) {
    const double s = std::sin(u.v), c = std::cos(u.v);
    return compose(c, -s, -c, s, u);
}
// u^(-1/2), u > 0.
inline Jet3 inv_sqrt(const Jet3& u) {
    const double p = 1.0 / std::sqrt(u.v);
    const double f1 = -0.5 * p / u.v;
    const double f2 = 0.75 * p / (u.v * u.v);
    const double f3 = -1.875 * p / (u.v * u.v * u.v);
    return compose(p, f1, f2, f3, u);
}

}  // namespace flatfront
