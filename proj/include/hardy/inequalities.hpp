#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "hardy/constants.hpp"
#include "hardy/errors.hpp"

namespace hardy {

/// Residual of |a - t|^p >= (1-t)^{p-1} (|a|^p - t) for complex a,
/// t in [0,1], p >= 1. Nonnegative; zero iff a = 1 or t = 0.
inline double residual_numbers(std::complex<double> a, double t, double p) {
    const double lhs = std::pow(std::abs(a - t), p);
    const double rhs = std::pow(1.0 - t, p - 1.0) * (std::pow(std::abs(a), p) - t);
    return lhs - rhs;
}

/// Residual of the improved form with the extra term c_p t^{p/2} |a-1|^p
/// (p >= 2); identically zero when p = 2.
inline double residual_numbers_improved(std::complex<double> a, double t,
                                        double p) {
    if (!(p >= 2.0))
        throw InvalidParams("residual_numbers_improved: p >= 2 required");
    return residual_numbers(a, t, p) -
           remainder_constant(p) * std::pow(t, 0.5 * p) *
               std::pow(std::abs(a - 1.0), p);
}

/// Vector convexity residual
///   |a+b|^p - |a|^p - p|a|^{p-2} <a,b> - (with_remainder ? c_p |b|^p : 0),
/// with the convention p|a|^{p-2}<a,b> = 0 when a = 0.
inline double residual_convexity(const std::vector<double>& a,
                                 const std::vector<double>& b, double p,
                                 bool with_remainder) {
    if (a.size() != b.size())
        throw DimensionMismatch("residual_convexity: length mismatch");
    if (with_remainder && !(p >= 2.0))
        throw InvalidParams("residual_convexity: remainder needs p >= 2");
    double na2 = 0.0, nb2 = 0.0, nab2 = 0.0, dot = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        na2 += a[i] * a[i];
        nb2 += b[i] * b[i];
        nab2 += (a[i] + b[i]) * (a[i] + b[i]);
        dot += a[i] * b[i];
    }
    double res = std::pow(nab2, 0.5 * p) - std::pow(na2, 0.5 * p);
    if (na2 > 0.0) res -= p * std::pow(na2, 0.5 * p - 1.0) * dot;
    if (with_remainder) res -= remainder_constant(p) * std::pow(nb2, 0.5 * p);
    return res;
}

} // namespace hardy
