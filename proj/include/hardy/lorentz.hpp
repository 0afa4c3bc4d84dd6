#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "hardy/errors.hpp"
#include "hardy/lattice.hpp"
#include "hardy/params.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/special.hpp"

namespace hardy {

/// Symmetric decreasing step function: u = h_k on the annulus
/// [R_{k-1}, R_k), with R_0 = 0, increasing radii and strictly decreasing
/// positive heights.
class StepRadialFunction {
  public:
    StepRadialFunction(std::vector<double> radii, std::vector<double> heights)
        : radii_(std::move(radii)), heights_(std::move(heights)) {
        if (radii_.empty() || radii_.size() != heights_.size())
            throw InvalidParams("StepRadialFunction: radii/heights mismatch");
        double prev_r = 0.0;
        for (double r : radii_) {
            if (!(r > prev_r))
                throw InvalidParams("StepRadialFunction: radii must increase");
            prev_r = r;
        }
        double prev_h = std::numeric_limits<double>::infinity();
        for (double h : heights_) {
            if (!(h > 0.0 && h < prev_h))
                throw InvalidParams(
                    "StepRadialFunction: heights must decrease and stay positive");
            prev_h = h;
        }
    }

    const std::vector<double>& radii() const { return radii_; }
    const std::vector<double>& heights() const { return heights_; }

    double operator()(double r) const {
        for (std::size_t k = 0; k < radii_.size(); ++k)
            if (r < radii_[k]) return heights_[k];
        return 0.0;
    }

  private:
    std::vector<double> radii_;
    std::vector<double> heights_;
};

inline double ball_volume(int n, double radius) {
    return sphere_area(n) * std::pow(radius, n) / n;
}

/// mu_u(t) = |{ |u| > t }|, Lebesgue measure in R^N.
inline double distribution_function(const StepRadialFunction& u, double t,
                                    int n) {
    if (t < 0.0) throw InvalidParams("distribution_function: t >= 0 required");
    double r = 0.0;
    for (std::size_t k = 0; k < u.heights().size(); ++k)
        if (u.heights()[k] > t) r = u.radii()[k];
    return r > 0.0 ? ball_volume(n, r) : 0.0;
}

/// Counting-measure version on the lattice.
inline double distribution_function(const GridFunction1D& u, double t) {
    if (t < 0.0) throw InvalidParams("distribution_function: t >= 0 required");
    double count = 0.0;
    for (double v : u.values())
        if (v > t) count += 1.0;
    return count;
}

/// Lorentz quasinorm ||u||_{q,r} = (q int_0^inf mu(t)^{r/q} t^{r-1} dt)^{1/r},
/// exact for step functions; r may be infinity (weak norm).
inline double lorentz_norm(const StepRadialFunction& u, int n, double q,
                           double r) {
    if (!(q >= 1.0) || !(r >= 1.0))
        throw InvalidParams("lorentz_norm: q, r >= 1 required");
    const std::size_t kk = u.radii().size();
    if (std::isinf(r)) {
        double best = 0.0;
        for (std::size_t k = 0; k < kk; ++k)
            best = std::max(best, std::pow(ball_volume(n, u.radii()[k]), 1.0 / q) *
                                      u.heights()[k]);
        return best;
    }
    // mu is constant = |B_{R_k}| on t in [h_{k+1}, h_k).
    double acc = 0.0;
    for (std::size_t k = 0; k < kk; ++k) {
        const double hi = u.heights()[k];
        const double lo = k + 1 < kk ? u.heights()[k + 1] : 0.0;
        acc += std::pow(ball_volume(n, u.radii()[k]), r / q) *
               (std::pow(hi, r) - std::pow(lo, r));
    }
    return std::pow(q * acc / r, 1.0 / r);
}

/// Gap in the symmetric decreasing identity
///   ||u||_{p*,p} = (N/|S^{N-1}|)^{s/N} (int u^p |x|^{-ps} dx)^{1/p},
/// both sides exact for step functions.
inline double symmdecr_identity_gap(const HardyParams& params,
                                    const StepRadialFunction& u) {
    if (!params.p_star)
        throw InvalidParams("symmdecr_identity_gap: N > ps required");
    const double lhs = lorentz_norm(u, params.N, *params.p_star, params.p);
    const double nps = params.N - params.p * params.s;
    double integral = 0.0;
    double prev = 0.0;
    for (std::size_t k = 0; k < u.radii().size(); ++k) {
        integral += std::pow(u.heights()[k], params.p) *
                    (std::pow(u.radii()[k], nps) - std::pow(prev, nps));
        prev = u.radii()[k];
    }
    integral *= sphere_area(params.N) / nps;
    const double rhs = std::pow(params.N / sphere_area(params.N),
                                params.s / params.N) *
                       std::pow(integral, 1.0 / params.p);
    return lhs - rhs;
}

/// Nesting inequality ||u||_{q,r} <= (q/r)^{1/r} (p/q)^{1/p} ||u||_{q,p}
/// for p < r; returns right minus left.
inline double lorentz_nesting_gap(const StepRadialFunction& u, int n, double q,
                                  double p, double r) {
    if (!(p < r)) throw InvalidParams("lorentz_nesting_gap: p < r required");
    const double pref = (std::isinf(r) ? 1.0 : std::pow(q / r, 1.0 / r)) *
                        std::pow(p / q, 1.0 / p);
    return pref * lorentz_norm(u, n, q, p) - lorentz_norm(u, n, q, r);
}

/// Gamma-identity behind the kernel decomposition:
///   int_0^inf e^{-a z^2} a^{m-1} da = Gamma(m) z^{-2m},  m = (N+ps)/2.
/// Left side by quadrature (substituted a = sigma^{1/m} so the endpoint
/// weight is exact, truncated where the tail is below 1e-16 of the total);
/// returns left minus right.
inline double gaussian_decomposition_gap(const HardyParams& params, double z) {
    if (!(z > 0.0))
        throw InvalidParams("gaussian_decomposition_gap: z > 0 required");
    const double m = 0.5 * (params.N + params.p * params.s);
    const double a_max = (745.0 + 2.0 * m * 10.0) / (z * z);
    auto f = [&](double sigma) {
        const double a = std::pow(sigma, 1.0 / m);
        return std::exp(-a * z * z) / m;
    };
    // The mass concentrates near sigma ~ (m/z^2)^m inside a far larger
    // truncation window, so walk out in geometric segments rather than
    // handing the whole interval to the adaptive rule at once.
    const double sigma_max = std::pow(a_max, m);
    const double sigma_peak = std::min(std::pow(m / (z * z), m), sigma_max);
    double lhs = 0.0, lo = 0.0;
    for (double hi = sigma_peak; lo < sigma_max; hi *= 8.0) {
        hi = std::min(hi, sigma_max);
        lhs += integrate_adaptive(f, lo, hi, 1e-12).value;
        lo = hi;
    }
    return lhs - gamma_fn(m) * std::pow(z, -2.0 * m);
}

} // namespace hardy
