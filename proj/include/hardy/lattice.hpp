#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "hardy/errors.hpp"

namespace hardy {

/// Symmetric decreasing interaction kernel on lattice distances d >= 1,
/// with an analytic tail sum for the sites beyond any finite window.
struct LatticeKernel {
    std::function<double(int)> value;     // k(d), d >= 1
    std::function<double(int)> tail_sum;  // sum_{d >= D} k(d), D >= 1
};

/// k(d) = d^{-x}, x > 1. The tail is summed explicitly for 40 terms and the
/// remainder estimated by the Euler--Maclaurin expansion.
inline LatticeKernel power_law_kernel(double x) {
    if (!(x > 1.0)) throw InvalidParams("power_law_kernel: exponent > 1 required");
    return LatticeKernel{
        [x](int d) { return std::pow(static_cast<double>(d), -x); },
        [x](int big_d) {
            double sum = 0.0;
            const double m0 = big_d + 40;
            for (int d = big_d; d < big_d + 40; ++d)
                sum += std::pow(static_cast<double>(d), -x);
            sum += std::pow(m0, 1.0 - x) / (x - 1.0);
            sum += 0.5 * std::pow(m0, -x);
            sum += x * std::pow(m0, -x - 1.0) / 12.0;
            sum -= x * (x + 1.0) * (x + 2.0) * std::pow(m0, -x - 3.0) / 720.0;
            sum += x * (x + 1.0) * (x + 2.0) * (x + 3.0) * (x + 4.0) *
                   std::pow(m0, -x - 5.0) / 30240.0;
            return sum;
        }};
}

/// k(d) = q^d, 0 < q < 1; geometric tail in closed form.
inline LatticeKernel geometric_kernel(double q) {
    if (!(q > 0.0 && q < 1.0))
        throw InvalidParams("geometric_kernel: q in (0,1) required");
    return LatticeKernel{
        [q](int d) { return std::pow(q, d); },
        [q](int big_d) { return std::pow(q, big_d) / (1.0 - q); }};
}

/// Finitely supported nonnegative function on the sites {-M, ..., M}.
class GridFunction1D {
  public:
    GridFunction1D(int support_radius, std::vector<double> values)
        : m_(support_radius), values_(std::move(values)) {
        if (m_ < 0) throw InvalidParams("GridFunction1D: M >= 0 required");
        if (values_.size() != static_cast<std::size_t>(2 * m_ + 1))
            throw InvalidParams("GridFunction1D: need 2M+1 values");
        for (double v : values_)
            if (!(v >= 0.0))
                throw InvalidParams("GridFunction1D: nonnegative values required");
    }

    int support_radius() const { return m_; }
    double at(int site) const { return values_[static_cast<std::size_t>(site + m_)]; }
    const std::vector<double>& values() const { return values_; }

  private:
    int m_;
    std::vector<double> values_;
};

/// Symmetric decreasing rearrangement: values sorted descending and placed
/// at the sites in the order 0, +1, -1, +2, -2, ...
inline GridFunction1D rearrange(const GridFunction1D& u) {
    std::vector<double> sorted = u.values();
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const int m = u.support_radius();
    std::vector<double> placed(sorted.size(), 0.0);
    int site = 0;
    for (double v : sorted) {
        placed[static_cast<std::size_t>(site + m)] = v;
        site = site > 0 ? -site : -site + 1;
    }
    return GridFunction1D(m, std::move(placed));
}

/// Window energy sum_{i != j in {-M..M}} J(u_i - u_j) k(|i-j|).
inline double lattice_energy(const GridFunction1D& u, const LatticeKernel& kernel,
                             const std::function<double(double)>& j) {
    const int m = u.support_radius();
    double e = 0.0;
    for (int i = -m; i <= m; ++i)
        for (int jj = -m; jj <= m; ++jj)
            if (i != jj) e += j(u.at(i) - u.at(jj)) * kernel.value(std::abs(i - jj));
    return e;
}

/// Full-lattice energy: the window pairs plus the interaction of every site
/// with the zero values outside the window, summed analytically through the
/// kernel tail.
inline double lattice_energy_full(const GridFunction1D& u,
                                  const LatticeKernel& kernel,
                                  const std::function<double(double)>& j) {
    const int m = u.support_radius();
    double e = lattice_energy(u, kernel, j);
    for (int i = -m; i <= m; ++i) {
        const double boundary =
            kernel.tail_sum(m + 1 - i) + kernel.tail_sum(m + 1 + i);
        e += (j(u.at(i)) + j(-u.at(i))) * boundary;
    }
    return e;
}

/// E[u] - E[u*] on the full lattice; nonnegative for convex J with J(0) = 0
/// and decreasing kernels, zero for translates of symmetric decreasing
/// functions (up to window truncation).
inline double rearrangement_gap(const GridFunction1D& u,
                                const LatticeKernel& kernel,
                                const std::function<double(double)>& j) {
    return lattice_energy_full(u, kernel, j) -
           lattice_energy_full(rearrange(u), kernel, j);
}

} // namespace hardy
