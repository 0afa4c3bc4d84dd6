#pragma once

#include <cmath>

#include "hardy/errors.hpp"

namespace hardy {

namespace detail {

// sin(pi*x), reduced before multiplying by pi.
inline double sin_pi(double x) {
    const double k = std::round(x);
    const double r = x - k;
    const double s = std::sin(M_PI * r);
    return (static_cast<long long>(k) % 2 == 0) ? s : -s;
}

} // namespace detail

/// Gamma function via the Lanczos approximation (g = 7, 9 coefficients),
/// with the reflection formula for arguments below 1/2.
inline double gamma_fn(double x) {
    if (x <= 0.0 && x == std::floor(x))
        throw PoleError("gamma_fn: pole at nonpositive integer");

    static constexpr double g = 7.0;
    static constexpr double coef[9] = {
        0.99999999999980993,      676.5203681218851,    -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

    if (x < 0.5) {
        // Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return M_PI / (detail::sin_pi(x) * gamma_fn(1.0 - x));
    }
    const double z = x - 1.0;
    double a = coef[0];
    for (int i = 1; i < 9; ++i) a += coef[i] / (z + i);
    const double t = z + g + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

/// Surface measure of the unit sphere S^{N-1} in R^N; |S^0| = 2.
inline double sphere_area(int N) {
    if (N < 1) throw InvalidParams("sphere_area: N >= 1 required");
    return 2.0 * std::pow(M_PI, 0.5 * N) / gamma_fn(0.5 * N);
}

} // namespace hardy
