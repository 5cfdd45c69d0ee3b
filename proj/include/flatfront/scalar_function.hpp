#pragma once

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "flatfront/types.hpp"

namespace flatfront {

// Smooth real function of one variable with an evaluable derivative.
struct ScalarFunction {
    std::function<double(double)> f;
    std::function<double(double)> df;

    double operator()(double t) const { return f(t); }
    double derivative(double t) const { return df(t); }

    static ScalarFunction zero() {
        return {[](double) { return 0.0; }, [](double) { return 0.0; }};
    }
    static ScalarFunction constant(double c) {
        return {[c](double) { return c; }, [](double) { return 0.0; }};
    }
};

// One term of the whitelisted density expressions: c * t^p * trig(k t),
// where trig is 1, sin or cos.
struct TrigPolyTerm {
    enum class Trig { none, sin, cos };
    double coef = 0.0;
    int power = 0;  // >= 0
    Trig trig = Trig::none;
    int freq = 0;  // integer multiple; ignored when trig == none
};

// Sum of TrigPolyTerm's: the density expression language of the scene config.
class TrigPoly {
public:
    TrigPoly() = default;
    explicit TrigPoly(std::vector<TrigPolyTerm> terms) : terms_(std::move(terms)) {}

    double eval(double t) const {
        double s = 0.0;
        for (const auto& q : terms_) s += term_value(q, t);
        return s;
    }

    double derivative(double t) const {
        double s = 0.0;
        for (const auto& q : terms_) s += term_derivative(q, t);
        return s;
    }

    const std::vector<TrigPolyTerm>& terms() const { return terms_; }

    ScalarFunction as_function() const {
        TrigPoly copy = *this;
        return {[copy](double t) { return copy.eval(t); },
                [copy](double t) { return copy.derivative(t); }};
    }

    static TrigPoly sin_kt(double coef, int k) {
        return TrigPoly({{coef, 0, TrigPolyTerm::Trig::sin, k}});
    }
    static TrigPoly cos_kt(double coef, int k) {
        return TrigPoly({{coef, 0, TrigPolyTerm::Trig::cos, k}});
    }
    static TrigPoly constant(double c) {
        return TrigPoly({{c, 0, TrigPolyTerm::Trig::none, 0}});
    }

private:
    static double trig_value(const TrigPolyTerm& q, double t) {
        switch (q.trig) {
            case TrigPolyTerm::Trig::sin: return std::sin(q.freq * t);
            case TrigPolyTerm::Trig::cos: return std::cos(q.freq * t);
            default: return 1.0;
        }
    }
    static double trig_derivative(const TrigPolyTerm& q, double t) {
        switch (q.trig) {
            case TrigPolyTerm::Trig::sin: return q.freq * std::cos(q.freq * t);
            case TrigPolyTerm::Trig::cos: return -q.freq * std::sin(q.freq * t);
            default: return 0.0;
        }
    }
    static double term_value(const TrigPolyTerm& q, double t) {
        return q.coef * std::pow(t, q.power) * trig_value(q, t);
    }
    static double term_derivative(const TrigPolyTerm& q, double t) {
        double s = q.coef * std::pow(t, q.power) * trig_derivative(q, t);
        if (q.power > 0)
            s += q.coef * q.power * std::pow(t, q.power - 1) * trig_value(q, t);
        return s;
    }

    std::vector<TrigPolyTerm> terms_;
};

}  // namespace flatfront
