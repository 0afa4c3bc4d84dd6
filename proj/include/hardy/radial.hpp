#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "hardy/constants.hpp"
#include "hardy/errors.hpp"
#include "hardy/params.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/special.hpp"

namespace hardy {

/// One piece c * r^{-beta} + d of a radial profile.
struct PowerPiece {
    double c;
    double beta;
    double d;
};

/// Compactly supported radial function, piecewise of the form c r^{-beta} + d
/// on [r_{k-1}, r_k) and identically zero beyond the last breakpoint.
class RadialPiecewisePower {
  public:
    RadialPiecewisePower(std::vector<double> breakpoints,
                         std::vector<PowerPiece> pieces)
        : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
        if (breaks_.size() < 2 || breaks_.front() != 0.0)
            throw InvalidParams("RadialPiecewisePower: breakpoints must start at 0");
        for (std::size_t k = 1; k < breaks_.size(); ++k)
            if (!(breaks_[k] > breaks_[k - 1]))
                throw InvalidParams("RadialPiecewisePower: breakpoints must increase");
        if (pieces_.size() != breaks_.size() - 1)
            throw InvalidParams("RadialPiecewisePower: piece count mismatch");
        if (pieces_[0].c != 0.0 && pieces_[0].beta > 0.0)
            throw InvalidParams("RadialPiecewisePower: unbounded at the origin");
    }

    double operator()(double r) const {
        if (r < 0.0) throw OutOfDomain("radial argument must be nonnegative");
        if (r >= breaks_.back()) return 0.0;
        const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), r);
        const std::size_t k = static_cast<std::size_t>(it - breaks_.begin()) - 1;
        const PowerPiece& pc = pieces_[k];
        return (pc.c != 0.0 ? pc.c * std::pow(r, -pc.beta) : 0.0) + pc.d;
    }

    const std::vector<double>& breakpoints() const { return breaks_; }
    const std::vector<PowerPiece>& pieces() const { return pieces_; }
    double support_radius() const { return breaks_.back(); }

  private:
    std::vector<double> breaks_;
    std::vector<PowerPiece> pieces_;
};

namespace detail {

struct PowerTerm {
    double c;
    double e; // c * r^e
};

// Piecewise sum-of-powers profile; the working representation behind all
// radial integrals. Derived from a RadialPiecewisePower, optionally
// multiplied by r^shift (used for the ground-state substitution v = r^a u).
struct TermProfile {
    std::vector<double> breaks;                  // 0 = b_0 < ... < b_K
    std::vector<std::vector<PowerTerm>> pieces;  // K entries; zero beyond b_K

    static TermProfile from(const RadialPiecewisePower& u, double shift) {
        TermProfile f;
        f.breaks = u.breakpoints();
        for (const PowerPiece& pc : u.pieces()) {
            std::vector<PowerTerm> terms;
            if (pc.c != 0.0) terms.push_back({pc.c, shift - pc.beta});
            if (pc.d != 0.0) terms.push_back({pc.d, shift});
            f.pieces.push_back(std::move(terms));
        }
        return f;
    }

    // Piece containing r; -1 in the zero region r >= b_K.
    int piece_index(double r) const {
        if (r >= breaks.back()) return -1;
        const auto it = std::upper_bound(breaks.begin(), breaks.end(), r);
        return static_cast<int>(it - breaks.begin()) - 1;
    }

    double piece_value(int k, double r) const {
        if (k < 0) return 0.0;
        double v = 0.0;
        for (const PowerTerm& t : pieces[k]) v += t.c * std::pow(r, t.e);
        return v;
    }

    double value(double r) const { return piece_value(piece_index(r), r); }

    // Smallest term exponent of piece k (the decay rate of the shifted
    // difference quotient as r -> 0); piece must be nonempty.
    double min_exponent(int k) const {
        double e = pieces[k][0].e;
        for (const PowerTerm& t : pieces[k]) e = std::min(e, t.e);
        return e;
    }

    bool piece_empty(int k) const { return pieces[k].empty(); }

    // True when the profile is discontinuous at some positive breakpoint
    // (including the outer support edge, where the outside value is 0).
    bool has_jump() const {
        double scale = 1e-300;
        for (std::size_t k = 0; k < pieces.size(); ++k)
            scale = std::max(scale, std::abs(piece_value(static_cast<int>(k),
                                                         0.5 * (breaks[k] + breaks[k + 1]))));
        for (std::size_t k = 1; k <= pieces.size(); ++k) {
            const double b = breaks[k];
            const double left = piece_value(static_cast<int>(k) - 1, b);
            const double right =
                k < pieces.size() ? piece_value(static_cast<int>(k), b) : 0.0;
            if (std::abs(left - right) > 1e-9 * scale) return true;
        }
        return false;
    }
};

// |f(R) - f(Rw)| * R^{-eshift} / (1-w), computed without cancellation when
// both radii land in the same piece (the difference telescopes through
// expm1 term by term).
inline double diff_quotient(const TermProfile& f, double R, double w,
                            double omw, double eshift) {
    const double Rw = R * w;
    const int ki = f.piece_index(R);
    const int kj = f.piece_index(Rw);
    if (ki == kj) {
        if (ki < 0) return 0.0;
        const double lw = std::log1p(-omw);
        double sum = 0.0;
        for (const PowerTerm& t : f.pieces[ki])
            sum += t.c * std::pow(R, t.e - eshift) * (-std::expm1(t.e * lw));
        return std::abs(sum) / omw;
    }
    double d = std::abs(f.piece_value(ki, R) - f.piece_value(kj, Rw));
    if (eshift != 0.0) d *= std::pow(R, -eshift);
    return d / omw;
}

// Inner radial integral at fixed w:
//   int_0^inf R^{gex} * (|f(R) - f(Rw)| / (1-w))^p dR,
// segmented at every breakpoint b_k and ratio point b_k/w so each segment has
// fixed piece assignment. The origin segment folds its leading power into an
// exact substitution; near-degenerate segments straddling a breakpoint (width
// below 1e-8 relative, which happens only when w -> 1) are evaluated by a
// midpoint rule with the width computed as b*(1-w)/w rather than by
// subtraction.
inline QuadResult inner_scaled_integral(const HardyParams& params,
                                        const TermProfile& f, double gex,
                                        double w, double omw, double rel_tol) {
    const double p = params.p;
    QuadResult total{0.0, 0.0, 0};

    struct Seg {
        double lo, hi;
        bool window;  // straddles breaks[b_idx] with negligible width
        std::size_t b_idx;
    };
    std::vector<Seg> segs;
    const std::size_t K = f.pieces.size();
    std::vector<double> pts;
    for (std::size_t k = 1; k <= K; ++k) {
        pts.push_back(f.breaks[k]);
        pts.push_back(f.breaks[k] / w);
    }
    std::sort(pts.begin(), pts.end());
    double lo = 0.0;
    for (double pt : pts) {
        if (pt > lo) {
            segs.push_back({lo, pt, false, 0});
            lo = pt;
        }
    }
    // Tag near-degenerate straddles of each breakpoint.
    for (auto& sg : segs) {
        if (sg.hi - sg.lo >= 1e-8 * sg.hi) continue;
        for (std::size_t k = 1; k <= K; ++k)
            if (sg.lo <= f.breaks[k] && f.breaks[k] <= sg.hi) {
                sg.window = true;
                sg.b_idx = k;
                break;
            }
    }

    for (const auto& sg : segs) {
        if (sg.window) {
            const double b = f.breaks[sg.b_idx];
            const int ki = sg.b_idx < K ? static_cast<int>(sg.b_idx) : -1;
            const int kj = static_cast<int>(sg.b_idx) - 1;
            const double q =
                std::abs(f.piece_value(ki, b) - f.piece_value(kj, b)) / omw;
            const double width = b * omw / w;
            total.value += std::pow(b, gex) * std::pow(q, p) * width;
            total.evaluations += 1;
            continue;
        }
        if (sg.lo == 0.0) {
            // Both radii remain in piece 0 here. Fold the leading power
            // R^{gamma} exactly via R = sigma^{1/m}, m = 1 + gamma.
            if (f.piece_empty(0)) continue;
            const double emin = f.min_exponent(0);
            const double gamma = gex + p * emin;
            const double m = 1.0 + gamma;
            if (!(m > 1e-9))
                throw ConvergenceFailure("radial integral diverges at the origin");
            auto fi = [&](double sigma) {
                const double R = std::pow(sigma, 1.0 / m);
                return std::pow(diff_quotient(f, R, w, omw, emin), p) / m;
            };
            total += integrate_adaptive(fi, 0.0, std::pow(sg.hi, m), rel_tol);
            continue;
        }
        auto fi = [&](double R) {
            return std::pow(R, gex) *
                   std::pow(diff_quotient(f, R, w, omw, 0.0), p);
        };
        total += integrate_adaptive(fi, sg.lo, sg.hi, rel_tol);
    }
    return total;
}

// Weighted fractional seminorm of a radial profile:
//   int int |f(|x|) - f(|y|)|^p |x-y|^{-N-ps} (|x||y|)^{-eta} dx dy
//     = 2 |S^{N-1}| int_0^1 w^{N-1-eta} Phi(w) I(w) dw,
//   I(w) = int_0^inf R^{N-1-ps-2 eta} |f(R) - f(Rw)|^p dR.
// The outer integral is split at 1/2; the diagonal half substitutes
// 1 - w = xi^{1/kappa}, where kappa = p(1-s) for continuous profiles and
// kappa = 1 - ps across a jump (divergent when ps >= 1).
inline QuadResult weighted_seminorm(const HardyParams& params,
                                    const TermProfile& f, double eta,
                                    double rel_tol) {
    const double ps = params.p * params.s;
    const double p = params.p;
    const double gex = params.N - 1.0 - ps - 2.0 * eta;
    const bool jump = f.has_jump();
    const double kappa = jump ? 1.0 - ps : p * (1.0 - params.s);
    if (jump && !(kappa > 1e-9))
        throw ConvergenceFailure(
            "seminorm diverges: discontinuous profile with ps >= 1");
    const double inner_tol = std::max(rel_tol * 0.1, 1e-13);

    std::int64_t inner_evals = 0;
    // The small-w integrand behaves like w^{ps-1} (the inner integral grows
    // like w^{-(N-ps-2 eta)} through its upper cutoff), so substitute
    // w = sigma^{1/ps} to absorb that factor exactly.
    auto flow = [&](double sigma) {
        const double w = std::pow(sigma, 1.0 / ps);
        const double omw = 1.0 - w;
        const QuadResult in =
            inner_scaled_integral(params, f, gex, w, omw, inner_tol);
        inner_evals += in.evaluations;
        return std::pow(w, params.N - eta - ps) * phi_kernel(params, w) *
               in.value * std::pow(omw, p) / ps;
    };
    const QuadResult low =
        integrate_adaptive(flow, 0.0, std::pow(0.5, ps), rel_tol);

    auto fhigh = [&](double xi) {
        double omw = std::pow(xi, 1.0 / kappa);
        if (omw < 1e-250) omw = 1e-250;
        const double w = 1.0 - omw;
        const QuadResult in =
            inner_scaled_integral(params, f, gex, w, omw, inner_tol);
        inner_evals += in.evaluations;
        return std::pow(w, params.N - 1.0 - eta) * phi_tilde(params, omw) *
               in.value * std::pow(omw, p - 1.0 - ps) *
               std::pow(xi, 1.0 / kappa - 1.0) / kappa;
    };
    const QuadResult high =
        integrate_adaptive(fhigh, 0.0, std::pow(0.5, kappa), rel_tol);

    const double area = 2.0 * sphere_area(params.N);
    return QuadResult{area * (low.value + high.value),
                      area * (low.error_estimate + high.error_estimate),
                      low.evaluations + high.evaluations + inner_evals};
}

} // namespace detail

/// Fractional seminorm int int |u(x)-u(y)|^p |x-y|^{-N-ps} dx dy for a
/// radial profile.
inline QuadResult radial_energy(const HardyParams& params,
                                const RadialPiecewisePower& u,
                                double rel_tol = 1e-7) {
    return detail::weighted_seminorm(
        params, detail::TermProfile::from(u, 0.0), 0.0, rel_tol);
}

/// Hardy weight norm int |u|^p |x|^{-ps} dx
///   = |S^{N-1}| int_0^inf |u(r)|^p r^{N-1-ps} dr.
inline QuadResult weighted_norm(const HardyParams& params,
                                const RadialPiecewisePower& u,
                                double rel_tol = 1e-8) {
    const double ps = params.p * params.s;
    const double gex = params.N - 1.0 - ps;
    const detail::TermProfile f = detail::TermProfile::from(u, 0.0);
    QuadResult total{0.0, 0.0, 0};
    for (std::size_t k = 0; k < f.pieces.size(); ++k) {
        const double lo = f.breaks[k];
        const double hi = f.breaks[k + 1];
        if (f.piece_empty(static_cast<int>(k))) continue;
        if (lo == 0.0) {
            const double emin = f.min_exponent(0);
            const double gamma = gex + params.p * emin;
            const double m = 1.0 + gamma;
            if (!(m > 1e-9))
                throw ConvergenceFailure("weighted norm diverges at the origin");
            auto fi = [&](double sigma) {
                const double R = std::pow(sigma, 1.0 / m);
                double v = 0.0;
                for (const detail::PowerTerm& t : f.pieces[0])
                    v += t.c * std::pow(R, t.e - emin);
                return std::pow(std::abs(v), params.p) / m;
            };
            total += integrate_adaptive(fi, 0.0, std::pow(hi, m), rel_tol);
        } else {
            auto fi = [&](double r) {
                return std::pow(std::abs(f.piece_value(static_cast<int>(k), r)),
                                params.p) *
                       std::pow(r, gex);
            };
            total += integrate_adaptive(fi, lo, hi, rel_tol);
        }
    }
    total.value *= sphere_area(params.N);
    total.error_estimate *= sphere_area(params.N);
    return total;
}

/// Rayleigh quotient energy / weighted norm; bounded below by C_{N,s,p}.
inline double rayleigh_quotient(const HardyParams& params,
                                const RadialPiecewisePower& u,
                                double rel_tol = 1e-7) {
    const double den = weighted_norm(params, u, rel_tol * 0.1).value;
    if (!(den > 0.0)) throw ZeroDenominator("rayleigh_quotient: zero norm");
    return radial_energy(params, u, rel_tol).value / den;
}

/// The sharpness trial functions: u_n for N > ps, u_{n,m} for N < ps (with
/// the middle piece continuously matched at 1/n and the smooth cap replaced
/// by a ramp from r = m to r = 2m).
inline RadialPiecewisePower trial_function(const HardyParams& params, int n,
                                           int m = 0) {
    if (n < 2) throw InvalidParams("trial_function: n >= 2 required");
    const double alpha = params.alpha;
    if (alpha > 0.0) {
        if (m != 0)
            throw InvalidParams("trial_function: m only applies when N < ps");
        const double a = std::pow(static_cast<double>(n), -alpha);
        return RadialPiecewisePower(
            {0.0, 1.0, static_cast<double>(n)},
            {{0.0, 0.0, 1.0 - a}, {1.0, alpha, -a}});
    }
    if (m < 2) throw InvalidParams("trial_function: m >= 2 required when N < ps");
    const double a = std::pow(static_cast<double>(n), alpha);
    const double h = 1.0 - a;
    return RadialPiecewisePower(
        {0.0, 1.0 / n, 1.0, static_cast<double>(m), 2.0 * static_cast<double>(m)},
        {{0.0, 0.0, 0.0},
         {1.0, alpha, -a},
         {0.0, 0.0, h},
         {-h / m, -1.0, 2.0 * h}});
}

struct SharpnessPoint {
    int n;
    double ratio;
    double gap;
};

/// Rayleigh quotients of the trial family against the sharp constant.
inline std::vector<SharpnessPoint> sharpness_scan(const HardyParams& params,
                                                  const std::vector<int>& n_list,
                                                  double rel_tol = 1e-7) {
    const double c = hardy_constant(params).value;
    std::vector<SharpnessPoint> out;
    for (int n : n_list) {
        const RadialPiecewisePower u =
            params.alpha > 0.0 ? trial_function(params, n)
                               : trial_function(params, n, 10 * n);
        const double ratio = rayleigh_quotient(params, u, rel_tol);
        out.push_back({n, ratio, ratio - c});
    }
    return out;
}

struct RemainderCheck {
    double lhs_gap;
    double remainder;
};

/// Remainder comparison: the Hardy gap of u against
/// c_p times the (N-ps)/2-weighted seminorm of v = r^{(N-ps)/p} u.
inline RemainderCheck remainder_check(const HardyParams& params,
                                      const RadialPiecewisePower& u,
                                      double rel_tol = 1e-7) {
    if (!(params.p >= 2.0))
        throw InvalidParams("remainder_check: p >= 2 required");
    if (params.alpha < 0.0 && !u.pieces().empty() &&
        (u.pieces()[0].c != 0.0 || u.pieces()[0].d != 0.0))
        throw InvalidParams("remainder_check: u must vanish near 0 when N < ps");
    const double c = hardy_constant(params).value;
    const double energy = radial_energy(params, u, rel_tol).value;
    const double norm = weighted_norm(params, u, rel_tol * 0.1).value;
    const double eta = 0.5 * (params.N - params.p * params.s);
    const double rem =
        detail::weighted_seminorm(params,
                                  detail::TermProfile::from(u, params.alpha),
                                  eta, rel_tol)
            .value;
    return RemainderCheck{energy - c * norm, remainder_constant(params.p) * rem};
}

struct IsoperimetricCheck {
    double lhs;
    double rhs;
};

/// p = 1 indicator case of the sharp embedding:
/// |B_R|^{(N-s)/N} against the normalized perimeter-type double integral.
inline IsoperimetricCheck isoperimetric_check(const HardyParams& params,
                                              double radius,
                                              double rel_tol = 1e-7) {
    if (std::abs(params.p - 1.0) > 1e-12)
        throw InvalidParams("isoperimetric_check: p = 1 required");
    if (!(radius > 0.0))
        throw InvalidParams("isoperimetric_check: positive radius required");
    const double N = params.N;
    const double s = params.s;
    const RadialPiecewisePower ball({0.0, radius}, {{0.0, 0.0, 1.0}});
    const double vol = sphere_area(params.N) * std::pow(radius, N) / N;
    const double lhs = std::pow(vol, (N - s) / N);
    const double c = hardy_constant(params).value;
    // E[chi] double-counts the ordered pairs, so the one-sided integral over
    // B x B^c is half of it.
    const double cross = 0.5 * radial_energy(params, ball, rel_tol).value;
    const double rhs = (2.0 * (N - s) / (N * c)) *
                       std::pow(N / sphere_area(params.N), s / N) * cross;
    return IsoperimetricCheck{lhs, rhs};
}

namespace detail {

// int_{a1<|x|<b1, a2<|y|<b2} F(|x|,|y|) |x-y|^{-N-ps} dx dy for separated
// shells b1 <= a2 (single ordering); b2 may be infinite.
template <class F>
double region_pair_integral(const HardyParams& params, double a1, double b1,
                            double a2, double b2, F&& f, double rel_tol) {
    const double ps = params.p * params.s;
    const double inner_tol = std::max(rel_tol * 0.1, 1e-10);
    auto outer = [&](double R) {
        auto fw = [&](double w) {
            return std::pow(w, params.N - 1.0) * f(R * w, R) *
                   phi_kernel(params, w);
        };
        const double win =
            integrate_adaptive(fw, a1 / R, b1 / R, inner_tol).value;
        return std::pow(R, params.N - 1.0 - ps) * win;
    };
    QuadResult q;
    if (std::isinf(b2)) {
        auto ft = [&](double tau) {
            const double R = a2 / tau;
            return outer(R) * a2 / (tau * tau);
        };
        q = integrate_adaptive(ft, 0.0, 1.0, rel_tol);
    } else {
        q = integrate_adaptive(outer, a2, b2, rel_tol);
    }
    return sphere_area(params.N) * q.value;
}

} // namespace detail

struct TrialDiagnostics {
    double r0;
    double r1;
    double r2;
};

/// The three sharpness bookkeeping terms for the N > ps trial function u_n:
/// the region-pair double integral R0 and the two weighted one-dimensional
/// integrals R1, R2. All are nonnegative.
inline TrialDiagnostics trial_diagnostics(const HardyParams& params, int n,
                                          double rel_tol = 1e-6) {
    if (!(params.alpha > 0.0))
        throw InvalidParams("trial_diagnostics: N > ps required");
    const double alpha = params.alpha;
    const double p = params.p;
    const double a = std::pow(static_cast<double>(n), -alpha);
    auto omega = [alpha](double r) { return std::pow(r, -alpha); };
    const double nn = n;
    const double inf = std::numeric_limits<double>::infinity();

    auto f_im = [&](double rho, double R) {
        const double t = 1.0 - omega(R);
        return t * (std::pow(omega(rho) - omega(R), p - 1.0) -
                    std::pow(t, p - 1.0));
    };
    auto f_mo = [&](double rho, double R) {
        const double t = omega(rho) - a;
        return t * (std::pow(omega(rho) - omega(R), p - 1.0) -
                    std::pow(t, p - 1.0));
    };
    auto f_io = [&](double rho, double R) {
        const double t = 1.0 - a;
        return t * (std::pow(omega(rho) - omega(R), p - 1.0) -
                    std::pow(t, p - 1.0));
    };
    const double r0 =
        detail::region_pair_integral(params, 0.0, 1.0, 1.0, nn, f_im, rel_tol) +
        detail::region_pair_integral(params, 1.0, nn, nn, inf, f_mo, rel_tol) +
        detail::region_pair_integral(params, 0.0, 1.0, nn, inf, f_io, rel_tol);

    // R1 over the inner ball, flattened exactly by sigma = r^alpha.
    auto g1 = [&](double sigma) {
        return (1.0 - a) *
               (1.0 - std::pow(1.0 - a, p - 1.0) * std::pow(sigma, p - 1.0)) /
               alpha;
    };
    const double r1 =
        sphere_area(params.N) * integrate_adaptive(g1, 0.0, 1.0, rel_tol).value;

    const double ps = params.p * params.s;
    auto g2 = [&](double r) {
        const double w = omega(r);
        return (w - a) *
               (std::pow(w, p - 1.0) - std::pow(w - a, p - 1.0)) *
               std::pow(r, params.N - 1.0 - ps);
    };
    const double r2 =
        sphere_area(params.N) * integrate_adaptive(g2, 1.0, nn, rel_tol).value;
    return TrialDiagnostics{r0, r1, r2};
}

} // namespace hardy
