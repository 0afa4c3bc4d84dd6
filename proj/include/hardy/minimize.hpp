#pragma once

#include <cmath>
#include <utility>

namespace hardy {

/// Golden-section search for the minimum of a unimodal function on [a, b].
/// Returns (argmin, min value).
template <class F>
std::pair<double, double> minimize_scalar(F&& f, double a, double b,
                                          double x_tol = 1e-12) {
    static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > x_tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

} // namespace hardy
