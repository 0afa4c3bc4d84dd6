#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/minimize.hpp"
#include "hardy/params.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/special.hpp"

namespace hardy {

enum class ConstantMethod {
    OneDimIntegral,
    ClosedFormP2,
    ClosedFormP1N1,
    RadialDoubleIntegral
};

inline const char* method_name(ConstantMethod m) {
    switch (m) {
        case ConstantMethod::OneDimIntegral: return "OneDimIntegral";
        case ConstantMethod::ClosedFormP2: return "ClosedFormP2";
        case ConstantMethod::ClosedFormP1N1: return "ClosedFormP1N1";
        case ConstantMethod::RadialDoubleIntegral: return "RadialDoubleIntegral";
    }
    return "?";
}

struct ConstantReport {
    HardyParams params;
    double value;
    ConstantMethod method;
    double error_estimate;
};

namespace detail {

// Regularized angular kernel: phi_tilde(omr) = (1-r)^{1+ps} * Phi(r) with
// omr = 1 - r. Bounded on (0, 1]; the raw kernel blows up like
// (1-r)^{-1-ps} as r -> 1, so all integral formulas below work with this
// scaled form and fold the power of (1-r) into their substitutions exactly.
inline double phi_tilde(const HardyParams& params, double omr,
                        double rel_tol = 1e-12) {
    const double ps = params.p * params.s;
    if (params.N == 1) {
        // Phi_1(r) = (1-r)^{-1-ps} + (1+r)^{-1-ps}
        return 1.0 + std::pow(omr / (2.0 - omr), 1.0 + ps);
    }
    const double r = 1.0 - omr;
    const double expo = 0.5 * (params.N + ps);
    const double area = sphere_area(params.N - 1);
    if (omr >= 0.2) {
        auto f = [&](double theta) {
            const double sh = std::sin(0.5 * theta);
            return std::pow(std::sin(theta), params.N - 2) *
                   std::pow(omr * omr + 4.0 * r * sh * sh, -expo);
        };
        return std::pow(omr, 1.0 + ps) * area *
               integrate_adaptive(f, 0.0, M_PI, rel_tol).value;
    }
    // r close to 1: rescale theta = omr * phi. All powers of omr cancel,
    // leaving an O(1) integrand decaying like phi^{-2-ps}; the far range is
    // mapped logarithmically.
    auto g = [&](double phi) {
        const double s1 = std::sin(omr * phi) / omr;
        const double s2 = 2.0 * std::sin(0.5 * omr * phi) / omr;
        return std::pow(s1, params.N - 2) * std::pow(1.0 + r * s2 * s2, -expo);
    };
    const double head = integrate_adaptive(g, 0.0, 1.0, rel_tol).value;
    auto g_log = [&](double tau) {
        const double phi = std::exp(tau);
        return g(phi) * phi;
    };
    const double tail =
        integrate_adaptive(g_log, 0.0, std::log(M_PI / omr), rel_tol).value;
    return area * (head + tail);
}

} // namespace detail

/// Angular kernel Phi_{N,s,p}(r), r in [0, 1).
inline double phi_kernel(const HardyParams& params, double r) {
    if (!(r >= 0.0 && r < 1.0))
        throw OutOfDomain("phi_kernel: r in [0,1) required");
    const double omr = 1.0 - r;
    const double ps = params.p * params.s;
    return detail::phi_tilde(params, omr) * std::pow(omr, -1.0 - ps);
}

/// The closed form C_{1,s,1} = 2^{2-s}/s.
inline double closed_form_p1_n1(double s) { return std::pow(2.0, 2.0 - s) / s; }

/// Sharp Hardy constant via the one-dimensional integral
///   C = 2 * int_0^1 r^{ps-1} |1 - r^alpha|^p Phi(r) dr,
/// split at r = 1/2 with exact endpoint substitutions on both halves.
inline ConstantReport hardy_constant(const HardyParams& params,
                                     double rel_tol = 1e-10) {
    const double ps = params.p * params.s;
    const double alpha = params.alpha;
    const double p = params.p;

    // Lower half (0, 1/2). For alpha > 0 substitute r = sigma^{1/ps}, which
    // turns r^{ps-1} dr into dsigma/ps exactly. For alpha < 0 the factor
    // |1 - r^alpha|^p itself blows up like r^{N-ps}; rewriting it as
    // r^{alpha p} |r^{-alpha} - 1|^p and substituting r = sigma^{1/N} turns
    // r^{N-1} dr into dsigma/N exactly.
    QuadResult a_part;
    if (alpha > 0.0) {
        auto fa = [&](double sigma) {
            const double r = std::pow(sigma, 1.0 / ps);
            const double diff = -std::expm1(alpha * std::log(r));
            return std::pow(diff, p) * phi_kernel(params, r) / ps;
        };
        a_part = integrate_adaptive(fa, 0.0, std::pow(0.5, ps), rel_tol);
    } else {
        auto fa = [&](double sigma) {
            const double r = std::pow(sigma, 1.0 / params.N);
            const double diff = -std::expm1(-alpha * std::log(r));
            return std::pow(diff, p) * phi_kernel(params, r) / params.N;
        };
        a_part = integrate_adaptive(fa, 0.0, std::pow(0.5, params.N), rel_tol);
    }

    // Upper half (1/2, 1). Substitute 1 - r = xi^{1/kappa}, kappa = p(1-s).
    // Writing |1 - r^alpha|^p = G^p (1-r)^p with G -> |alpha| and using the
    // scaled kernel, every power of xi cancels identically and the
    // integrand is bounded all the way to the endpoint.
    const double kappa = p * (1.0 - params.s);
    auto fb = [&](double xi) {
        double omr = std::pow(xi, 1.0 / kappa);
        if (omr < 1e-250) omr = 1e-250;
        const double r = 1.0 - omr;
        const double g = std::abs(std::expm1(alpha * std::log1p(-omr))) / omr;
        return std::pow(r, ps - 1.0) * std::pow(g, p) *
               detail::phi_tilde(params, omr) / kappa;
    };
    const QuadResult b_part =
        integrate_adaptive(fb, 0.0, std::pow(0.5, kappa), rel_tol);

    return ConstantReport{params, 2.0 * (a_part.value + b_part.value),
                          ConstantMethod::OneDimIntegral,
                          2.0 * (a_part.error_estimate + b_part.error_estimate)};
}

/// Closed form for p = 2 (with the corrected Gamma-quotient normalization):
///   C = 2 pi^{N/2} Gamma((N+2s)/4)^2 / Gamma((N-2s)/4)^2
///       * |Gamma(-s)| / Gamma((N+2s)/2)
inline double hardy_constant_p2(const HardyParams& params) {
    if (std::abs(params.p - 2.0) > 1e-12)
        throw InvalidParams("hardy_constant_p2: p = 2 required");
    const double N = params.N;
    const double s = params.s;
    const double q = gamma_fn(0.25 * (N + 2.0 * s)) / gamma_fn(0.25 * (N - 2.0 * s));
    return 2.0 * std::pow(M_PI, 0.5 * N) * q * q * std::abs(gamma_fn(-s)) /
           gamma_fn(0.5 * (N + 2.0 * s));
}

/// Independent route: the N-dimensional double integral
///   C = (|N-ps|/p) * (2/|S^{N-1}|) *
///       int_{|x|<1<|y|} ||x|^{-a} - |y|^{-a}|^{p-1} |x-y|^{-N-ps} dx dy
/// reduced radially and with the outer radius mapped by r = 1/w:
///   C = 2|alpha| int_0^1 dw w^{ps-1}
///         int_0^1 drho rho^{N-1} |rho^{-a} - w^{a}|^{p-1} Phi(rho w).
/// Evaluated by genuinely nested adaptive quadrature.
inline ConstantReport hardy_constant_crosscheck(const HardyParams& params,
                                                double rel_tol = 1e-7) {
    const double ps = params.p * params.s;
    const double alpha = params.alpha;
    const double p = params.p;
    const double kappa = p * (1.0 - params.s);
    const double inner_tol = std::min(rel_tol * 0.1, 1e-8);

    // Inner integral over rho in (0,1) at fixed outer w, split at 1/2.
    // Lower half: rho = sigma^{1/N} turns rho^{N-1} drho into dsigma/N.
    // Upper half: the integrand has a boundary layer of width 1 - w at
    // rho = 1, so substitute 1 - rho = (1-w)(e^u - 1); the difference
    // factor and the kernel singularity are grouped as (diff/(1-t))^{p-1}
    // and (1-t)^{kappa-1} so nothing overflows when 1 - w is tiny.
    auto inner = [&](double w, double omw) {
        auto low = [&](double sigma) {
            const double rho = std::pow(sigma, 1.0 / params.N);
            const double diff = std::abs(std::pow(rho, -alpha) - std::pow(w, alpha));
            const double t = rho * w;
            return std::pow(diff, p - 1.0) * phi_kernel(params, t) / params.N;
        };
        auto high = [&](double u) {
            const double x = omw * std::expm1(u); // 1 - rho
            const double rho = 1.0 - x;
            // 1 - rho*w without cancellation
            const double omt = x + omw - x * omw;
            // rho^{-alpha} - w^alpha = w^alpha expm1(-alpha log(rho w))
            const double diff =
                std::pow(w, alpha) *
                std::abs(std::expm1(-alpha * (std::log1p(-x) + std::log1p(-omw))));
            return std::pow(rho, params.N - 1) *
                   std::pow(diff / omt, p - 1.0) *
                   detail::phi_tilde(params, omt) * std::pow(omt, kappa - 1.0) *
                   (omw * std::exp(u) / omt);
        };
        const QuadResult lo =
            integrate_adaptive(low, 0.0, std::pow(0.5, params.N), inner_tol);
        const QuadResult hi =
            integrate_adaptive(high, 0.0, std::log1p(0.5 / omw), inner_tol);
        return QuadResult{lo.value + hi.value,
                          lo.error_estimate + hi.error_estimate,
                          lo.evaluations + hi.evaluations};
    };

    // Outer over w, split at 1/2: w = sigma^{1/ps} below (exact weight
    // substitution), 1 - w = xi^{1/kappa} above (the inner integral grows
    // like (1-w)^{kappa-1} when kappa < 1).
    auto fo_low = [&](double sigma) {
        const double w = std::pow(sigma, 1.0 / ps);
        return inner(w, 1.0 - w).value / ps;
    };
    auto fo_high = [&](double xi) {
        double omw = std::pow(xi, 1.0 / kappa);
        if (omw < 1e-250) omw = 1e-250;
        const double w = 1.0 - omw;
        return std::pow(w, ps - 1.0) * inner(w, omw).value *
               std::pow(xi, 1.0 / kappa - 1.0) / kappa;
    };
    const QuadResult out_lo =
        integrate_adaptive(fo_low, 0.0, std::pow(0.5, ps), rel_tol);
    const QuadResult out_hi =
        integrate_adaptive(fo_high, 0.0, std::pow(0.5, kappa), rel_tol);

    const double scale = 2.0 * std::abs(alpha);
    return ConstantReport{
        params, scale * (out_lo.value + out_hi.value),
        ConstantMethod::RadialDoubleIntegral,
        scale * (out_lo.error_estimate + out_hi.error_estimate)};
}

/// Boundary profile of the remainder minimization:
/// f(tau) = |1-tau|^p - tau^p + p tau^{p-1}.
inline double boundary_profile(double tau, double p) {
    return std::pow(std::abs(1.0 - tau), p) - std::pow(tau, p) +
           p * std::pow(tau, p - 1.0);
}

/// Remainder constant c_p = min_{0<tau<1/2} ((1-tau)^p - tau^p + p tau^{p-1});
/// exactly 1 when p = 2.
inline double remainder_constant(double p) {
    if (!(p >= 2.0)) throw InvalidParams("remainder_constant: p >= 2 required");
    if (p == 2.0) return 1.0;
    auto f = [p](double tau) { return boundary_profile(tau, p); };
    return minimize_scalar(f, 0.0, 0.5, 1e-12).second;
}

/// Sharp Sobolev--Lorentz embedding prefactor; r = infinity is the genuine
/// weak-type limit, with (p*/r)^{1/r} -> 1.
inline double embedding_constant(const HardyParams& params, double r,
                                 double rel_tol = 1e-10) {
    if (!params.p_star)
        throw InvalidParams("embedding_constant: N > ps required");
    if (!(r >= params.p))
        throw InvalidParams("embedding_constant: r >= p required");
    const double c_hardy = hardy_constant(params, rel_tol).value;
    double value = std::pow(params.N / sphere_area(params.N),
                            params.s / params.N) *
                   std::pow(c_hardy, -1.0 / params.p);
    const double pst = *params.p_star;
    if (r > params.p) {
        const double head =
            std::isinf(r) ? 1.0 : std::pow(pst / r, 1.0 / r);
        value *= head * std::pow(params.p / pst, 1.0 / params.p);
    }
    return value;
}

} // namespace hardy
