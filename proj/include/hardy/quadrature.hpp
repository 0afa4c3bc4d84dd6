#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "hardy/errors.hpp"

namespace hardy {

/// Result of an adaptive quadrature call.
struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;

    QuadResult& operator+=(const QuadResult& other) {
        value += other.value;
        error_estimate += other.error_estimate;
        evaluations += other.evaluations;
        return *this;
    }
};

namespace detail {

// Gauss 7 / Kronrod 15 pair. All nodes are interior, so integrands with
// integrable endpoint singularities are never evaluated at the endpoints.
inline constexpr double kGK15Nodes[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
inline constexpr double kK15Weights[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
// Gauss weights for nodes 0, 2, 4, 6 of the table above.
inline constexpr double kG7Weights[4] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870};

template <class F>
void gk15(F& f, double a, double b, double& k15, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double k = kK15Weights[0] * f0;
    double g = kG7Weights[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGK15Nodes[i];
        const double fi = f(mid + dx) + f(mid - dx);
        k += kK15Weights[i] * fi;
        if (i % 2 == 0) g += kG7Weights[i / 2] * fi;
    }
    k15 = k * half;
    err = std::abs((k - g) * half);
}

} // namespace detail

/// Adaptive quadrature of f over (a,b) by recursive bisection of a nested
/// Gauss7/Kronrod15 pair. The integrand is never evaluated at a or b.
/// Throws ConvergenceFailure when the requested tolerance cannot be met
/// within the depth cap (60) and interval budget.
template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b,
                              double rel_tol = 1e-10, double abs_tol = 1e-14) {
    if (!(a < b)) throw OutOfDomain("integrate_adaptive: requires a < b");

    struct Segment {
        double a, b, val, err;
        int depth;
        bool operator<(const Segment& o) const { return err < o.err; }
    };
    constexpr int kMaxDepth = 60;
    constexpr std::size_t kMaxSegments = 300000;

    QuadResult result;
    auto eval = [&](double lo, double hi, int depth) {
        Segment s{lo, hi, 0.0, 0.0, depth};
        detail::gk15(f, lo, hi, s.val, s.err);
        result.evaluations += 15;
        return s;
    };

    std::priority_queue<Segment> active;
    active.push(eval(a, b, 0));
    double total = active.top().val;
    double err_active = active.top().err;
    double err_frozen = 0.0; // error held by depth-capped segments
    double val_frozen = 0.0;
    std::size_t n_segments = 1;

    auto tolerance = [&](double v) {
        return std::fmax(abs_tol, rel_tol * std::abs(v));
    };

    while (!active.empty()) {
        const double toterr = err_active + err_frozen;
        if (toterr <= tolerance(total)) break;
        if (n_segments >= kMaxSegments) break;
        Segment worst = active.top();
        active.pop();
        err_active -= worst.err;
        if (worst.depth >= kMaxDepth) {
            err_frozen += worst.err;
            val_frozen += worst.val;
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) { // interval at machine resolution
            err_frozen += worst.err;
            val_frozen += worst.val;
            continue;
        }
        Segment left = eval(worst.a, mid, worst.depth + 1);
        Segment right = eval(mid, worst.b, worst.depth + 1);
        total += left.val + right.val - worst.val;
        err_active += left.err + right.err;
        active.push(left);
        active.push(right);
        ++n_segments;
    }

    result.value = total;
    result.error_estimate = err_active + err_frozen;
    if (!(result.error_estimate <= tolerance(result.value)))
        throw ConvergenceFailure("integrate_adaptive: tolerance not met");
    return result;
}

} // namespace hardy
