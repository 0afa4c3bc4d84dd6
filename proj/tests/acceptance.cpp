// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <random>
#include <vector>

#include "hardy/hardy.hpp"

namespace {

int failures = 0;

void report(int idx, bool pass, const char* what, const std::string& detail) {
    std::printf("criterion %2d: %s  %s%s%s\n", idx, pass ? "PASS" : "FAIL",
                what, detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

std::complex<double> random_disk(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    double re, im;
    do {
        re = unit(rng);
        im = unit(rng);
    } while (re * re + im * im > 1.0);
    return {radius * re, radius * im};
}

// Continuous two-piece profile: plateau h on [0,a], linear ramp to 0 at b.
hardy::RadialPiecewisePower ramp(double a, double b, double h) {
    return hardy::RadialPiecewisePower(
        {0.0, a, b},
        {{0.0, 0.0, h}, {-h / (b - a), -1.0, h * b / (b - a)}});
}

void criterion1() {
    const double t0 = now_seconds();
    bool pass = true;
    std::string detail;
    for (double s : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double tp = now_seconds();
        const double c =
            hardy::hardy_constant(hardy::make_params(1, s, 1.0)).value;
        const double exact = std::pow(2.0, 2.0 - s) / s;
        const double rel = std::abs(c - exact) / exact;
        if (rel > 1e-8 || now_seconds() - tp > 1.0) pass = false;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "total %.2fs", now_seconds() - t0);
    report(1, pass, "closed form C_{1,s,1} = 2^{2-s}/s to rel 1e-8", buf);
}

void criterion2() {
    bool pass = true;
    double worst = 0.0;
    for (int n : {1, 2, 3, 4})
        for (double s : {0.3, 0.7}) {
            if (std::abs(n - 2.0 * s) < 1e-12) continue;
            const double tp = now_seconds();
            const auto prm = hardy::make_params(n, s, 2.0);
            const double c = hardy::hardy_constant(prm).value;
            const double exact = hardy::hardy_constant_p2(prm);
            worst = std::max(worst, std::abs(c - exact) / exact);
            if (now_seconds() - tp > 5.0) pass = false;
        }
    pass = pass && worst <= 1e-8;
    char buf[64];
    std::snprintf(buf, sizeof buf, "worst rel %.2e", worst);
    report(2, pass, "p=2 gamma-function closed form to rel 1e-8", buf);
}

void criterion3() {
    const double grid[][3] = {
        {1, 0.5, 1.0}, {2, 0.5, 2.0},  {2, 0.3, 1.5}, {3, 0.3, 1.5},
        {3, 0.7, 2.0}, {4, 0.5, 3.0},  {1, 0.75, 2.0}, {1, 0.5, 3.0},
        {1, 0.9, 2.5}, {2, 0.7, 4.0},  {1, 0.3, 4.0},  {2, 0.9, 3.0}};
    bool pass = true;
    double worst = 0.0;
    for (const auto& g : grid) {
        const double tp = now_seconds();
        const auto prm = hardy::make_params(static_cast<int>(g[0]), g[1], g[2]);
        const double direct = hardy::hardy_constant(prm).value;
        const double cross = hardy::hardy_constant_crosscheck(prm).value;
        worst = std::max(worst, std::abs(direct - cross) / direct);
        if (now_seconds() - tp > 30.0) pass = false;
    }
    pass = pass && worst <= 1e-6;
    char buf[64];
    std::snprintf(buf, sizeof buf, "worst rel %.2e over 12 points", worst);
    report(3, pass, "1D integral vs nested double-integral route to rel 1e-6",
           buf);
}

void criterion4() {
    bool pass = hardy::remainder_constant(2.0) == 1.0;
    pass = pass &&
           std::abs(hardy::remainder_constant(3.0) - (2.0 - std::sqrt(2.0))) <=
               1e-10 &&
           std::abs(hardy::remainder_constant(4.0) - 1.0 / 3.0) <= 1e-10;
    for (double p : {2.0, 2.5, 3.0, 4.0, 6.0}) {
        const auto [tau, val] = hardy::minimize_scalar(
            [p](double t) { return hardy::boundary_profile(t, p); }, 1e-9,
            0.5 - 1e-9);
        if (std::abs(val - hardy::remainder_constant(p)) > 1e-10) pass = false;
    }
    report(4, pass, "remainder constants c_2, c_3, c_4 and profile minima", "");
}

void criterion5() {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> tdist(0.0, 1.0);
    std::uniform_real_distribution<double> p1(1.0, 6.0), p2(2.0, 6.0);
    int bad = 0;
    for (int i = 0; i < 100000; ++i) {
        const auto a = random_disk(rng, 5.0);
        const double t = tdist(rng);
        const double tol = 1e-12 * std::pow(1.0 + std::abs(a), p1(rng));
        if (hardy::residual_numbers(a, t, p1(rng)) < -tol) ++bad;
    }
    for (int i = 0; i < 100000; ++i) {
        const auto a = random_disk(rng, 5.0);
        const double t = tdist(rng);
        const double p = p2(rng);
        if (hardy::residual_numbers_improved(a, t, p) <
            -1e-12 * std::pow(1.0 + std::abs(a), p))
            ++bad;
    }
    int bad2 = 0;
    for (int i = 0; i < 100000; ++i) {
        const auto a = random_disk(rng, 5.0);
        const double t = tdist(rng);
        if (std::abs(hardy::residual_numbers_improved(a, t, 2.0)) >
            1e-12 * std::pow(1.0 + std::abs(a), 2.0))
            ++bad2;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%d violations, %d p=2 nonzeros", bad, bad2);
    report(5, bad == 0 && bad2 == 0,
           "elementary inequality suite, 1e5 samples per form", buf);
}

void criterion6() {
    const double t0 = now_seconds();
    std::mt19937_64 rng(7777);
    std::uniform_real_distribution<double> pdist(1.0, 5.0);
    std::uniform_int_distribution<int> ndist(2, 20);
    bool pass = true;
    for (int i = 0; i < 1000; ++i) {
        const auto inst = hardy::random_gsr_instance(ndist(rng), 10000 + i);
        const auto rep =
            hardy::gsr_identity(inst.graph, inst.omega, inst.u, pdist(rng));
        // Accuracy is relative to the largest constituent of the identity.
        const double scale =
            std::max({std::abs(rep.energy), std::abs(rep.phi_sum),
                      std::abs(rep.potential_term), 1.0});
        if (std::abs(rep.energy - rep.phi_sum - rep.potential_term) >
            1e-10 * scale)
            pass = false;
    }
    const double ps[] = {2.0, 2.5, 3.0, 4.0};
    for (int i = 0; i < 10000; ++i) {
        const auto inst = hardy::random_gsr_instance(2 + i % 15, 20000 + i);
        const double p = ps[i % 4];
        const auto rep = hardy::gsr_identity(inst.graph, inst.omega, inst.u, p);
        const double gap =
            hardy::gsr_remainder_gap(inst.graph, inst.omega, inst.u, p);
        const double scale =
            std::max({std::abs(rep.energy), std::abs(rep.phi_sum), 1.0});
        if (gap < -1e-10 * scale) pass = false;
        if (p == 2.0 && std::abs(gap) > 1e-12 * scale) pass = false;
    }
    const double dt = now_seconds() - t0;
    pass = pass && dt < 60.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1fs", dt);
    report(6, pass, "graph GSR identity, Hardy property and remainder gaps",
           buf);
}

void criterion7() {
    const int dims[] = {1, 2, 3};
    const double ss[] = {0.5, 0.5, 0.25};
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> unit(0.1, 1.0);
    std::uniform_int_distribution<int> layers(2, 4);
    bool pass = true;
    double worst = 0.0;
    for (int k = 0; k < 3; ++k) {
        const auto prm = hardy::make_params(dims[k], ss[k], 1.0);
        const double c = hardy::hardy_constant(prm).value;
        for (int i = 0; i < 20; ++i) {
            std::vector<double> breaks{0.0};
            std::vector<hardy::PowerPiece> pieces;
            double r = 0.0, h = 1.0 + unit(rng);
            const int L = layers(rng);
            for (int l = 0; l < L; ++l) {
                r += unit(rng);
                breaks.push_back(r);
                pieces.push_back({0.0, 0.0, h});
                h *= 0.2 + 0.6 * unit(rng);
            }
            const hardy::RadialPiecewisePower u(breaks, pieces);
            const double q = hardy::rayleigh_quotient(prm, u, 1e-7);
            worst = std::max(worst, std::abs(q - c) / c);
        }
    }
    pass = worst <= 1e-5;
    char buf[64];
    std::snprintf(buf, sizeof buf, "worst rel %.2e", worst);
    report(7, pass, "p=1 equality for symmetric decreasing step functions",
           buf);
}

void criterion8() {
    const double t0 = now_seconds();
    const double sets[][3] = {{1, 0.25, 1.0}, {2, 0.5, 2.0}, {1, 0.75, 2.0}};
    bool pass = true;
    std::string detail;
    for (const auto& g : sets) {
        const auto prm = hardy::make_params(static_cast<int>(g[0]), g[1], g[2]);
        const auto scan = hardy::sharpness_scan(prm, {10, 100, 1000, 10000});
        bool above = true, decreasing = true;
        double prev = std::numeric_limits<double>::infinity();
        for (const auto& pt : scan) {
            above = above && pt.gap > 0.0;
            decreasing = decreasing && pt.gap < prev;
            prev = pt.gap;
        }
        const bool halved = scan.back().gap <= scan.front().gap / 2.0;
        if (!(above && decreasing && halved)) {
            pass = false;
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "(%d,%g,%g): above=%d decreasing=%d halved=%d "
                          "gaps %.3g..%.3g; ",
                          static_cast<int>(g[0]), g[1], g[2], above, decreasing,
                          halved, scan.front().gap, scan.back().gap);
            detail += buf;
        }
    }
    const double dt = now_seconds() - t0;
    pass = pass && dt < 300.0;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.1fs", dt);
    report(8, pass, "sharpness scans: ratios above C with shrinking gaps",
           detail + buf);
}

void criterion9() {
    bool pass = true;
    double worst_eq = 0.0;
    const double p2sets[][2] = {{2, 0.5}, {1, 0.25}};
    const double shapes[][3] = {{0.5, 1.5, 1.0},
                                {1.0, 2.0, 2.0},
                                {0.3, 0.9, 0.7},
                                {1.5, 4.0, 1.2},
                                {0.8, 1.1, 3.0}};
    for (int i = 0; i < 5; ++i) {
        const auto& ps = p2sets[i % 2];
        const auto& sh = shapes[i];
        const auto prm = hardy::make_params(static_cast<int>(ps[0]), ps[1], 2.0);
        const auto rc = hardy::remainder_check(prm, ramp(sh[0], sh[1], sh[2]));
        worst_eq =
            std::max(worst_eq, std::abs(rc.lhs_gap - rc.remainder) /
                                   std::max(std::abs(rc.lhs_gap), 1e-300));
    }
    pass = worst_eq <= 1e-5;
    int holds = 0;
    for (int i = 0; i < 10; ++i) {
        const auto& sh = shapes[i % 5];
        const auto prm = i < 5 ? hardy::make_params(2, 0.3, 3.0)
                               : hardy::make_params(3, 0.5, 3.0);
        const auto rc = hardy::remainder_check(
            prm, ramp(sh[0] * (1.0 + 0.1 * i), sh[1] * (1.0 + 0.07 * i), sh[2]));
        if (rc.lhs_gap >= rc.remainder * (1.0 - 1e-6)) ++holds;
    }
    pass = pass && holds == 10;
    char buf[96];
    std::snprintf(buf, sizeof buf, "p=2 worst rel %.2e, p=3 held %d/10",
                  worst_eq, holds);
    report(9, pass, "remainder identity at p=2 and inequality at p=3", buf);
}

void criterion10() {
    const double t0 = now_seconds();
    const auto kernel = hardy::power_law_kernel(1.5);
    const std::vector<std::function<double(double)>> js{
        [](double t) { return std::abs(t); },
        [](double t) { return t * t; },
        [](double t) { return std::abs(t) * t * t; },
        [](double t) { return std::max(t, 0.0) + 2.0 * std::max(-t, 0.0); }};
    bool pass = true;
    for (const auto& j : js) {
        int ok = 0;
        for (std::int64_t code = 0; code < 16384; ++code) {
            std::vector<double> vals(7);
            std::int64_t c = code;
            for (auto& v : vals) {
                v = static_cast<double>(c % 4);
                c /= 4;
            }
            if (hardy::rearrangement_gap(hardy::GridFunction1D(3, vals), kernel,
                                         j) >= -1e-10)
                ++ok;
        }
        if (ok != 16384) pass = false;
    }
    const double dt = now_seconds() - t0;
    pass = pass && dt < 30.0;
    char buf[48];
    std::snprintf(buf, sizeof buf, "4 x 16384 functions, %.1fs", dt);
    report(10, pass, "exhaustive rearrangement sweep, all gaps nonnegative",
           buf);
}

void criterion11() {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> unit(0.1, 1.0);
    auto random_layers = [&](int k) {
        std::vector<double> radii, heights;
        double r = 0.0, h = 1.0 + unit(rng);
        for (int i = 0; i < k; ++i) {
            r += unit(rng);
            radii.push_back(r);
            heights.push_back(h);
            h *= 0.2 + 0.6 * unit(rng);
        }
        return hardy::StepRadialFunction(radii, heights);
    };
    bool pass = true;
    const int dims[] = {1, 2, 3};
    const double ss[] = {0.4, 0.5, 0.3};
    const double pp[] = {1.0, 1.5, 2.5};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (std::abs(dims[a] - pp[b] * ss[a]) < 1e-12) continue;
            const auto prm = hardy::make_params(dims[a], ss[a], pp[b]);
            const auto u = random_layers(2 + (a + b) % 3);
            const double gap = hardy::symmdecr_identity_gap(prm, u);
            const double scale =
                hardy::lorentz_norm(u, prm.N, *prm.p_star, prm.p);
            if (std::abs(gap) > 1e-10 * scale) pass = false;
        }
    const double inf = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 1000; ++i) {
        const auto u = random_layers(1 + i % 4);
        const double q = 1.0 + 4.0 * unit(rng);
        const double p = 1.0 + 3.0 * unit(rng);
        const double r = i % 5 == 0 ? inf : p + 0.1 + 4.0 * unit(rng);
        if (hardy::lorentz_nesting_gap(u, 1 + i % 3, q, p, r) < -1e-12)
            pass = false;
    }
    const hardy::StepRadialFunction chi({2.0}, {3.0});
    if (std::abs(hardy::lorentz_nesting_gap(chi, 2, 2.0, 1.0, 3.0)) > 1e-13)
        pass = false;
    report(11, pass,
           "Lorentz identities: symm-decreasing, nesting, indicator equality",
           "");
}

void criterion12() {
    bool pass = true;
    double worst = 0.0;
    for (int n : {1, 2}) {
        const auto prm = hardy::make_params(n, 0.5, 1.0);
        const auto ic = hardy::isoperimetric_check(prm, 1.0);
        worst = std::max(worst, std::abs(ic.lhs - ic.rhs) / ic.lhs);
    }
    pass = worst <= 1e-5;
    char buf[48];
    std::snprintf(buf, sizeof buf, "worst rel %.2e", worst);
    report(12, pass, "isoperimetric equality for balls at p=1", buf);
}

void criterion13() {
    bool pass = true;
    const int dims[] = {2, 3};
    const double pp[] = {1.0, 2.0};
    for (int k = 0; k < 2; ++k)
        for (double s : {0.01, 0.05, 0.95, 0.99}) {
            const auto prm = hardy::make_params(dims[k], s, pp[k]);
            const double c = hardy::hardy_constant(prm, 1e-8).value;
            const double ratio =
                c * s * (1.0 - s) / std::pow(dims[k] - pp[k] * s, pp[k]);
            if (!(ratio >= 1e-3 && ratio <= 1e3)) pass = false;
        }
    report(13, pass, "Mazya-Shaposhnikova scaling stays in [1e-3, 1e3]", "");
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    criterion13();
    std::printf("%s: %d/13 criteria passed\n",
                failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                13 - failures);
    return failures == 0 ? 0 : 1;
}
