#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "hardy/constants.hpp"
#include "hardy/errors.hpp"

namespace hardy {

using NodeFunction = std::vector<std::complex<double>>;
using NodeWeights = std::vector<double>;

/// Finite graph with a symmetric nonnegative kernel and zero diagonal,
/// stored densely.
class WeightedGraph {
  public:
    explicit WeightedGraph(int n) : n_(n), k_(static_cast<std::size_t>(n) * n, 0.0) {
        if (n < 1) throw InvalidParams("WeightedGraph: n >= 1 required");
    }

    int size() const { return n_; }

    double weight(int i, int j) const { return k_[static_cast<std::size_t>(i) * n_ + j]; }

    void set_weight(int i, int j, double w) {
        if (i == j) throw InvalidParams("WeightedGraph: zero diagonal required");
        if (w < 0.0) throw InvalidParams("WeightedGraph: nonnegative weights");
        k_[static_cast<std::size_t>(i) * n_ + j] = w;
        k_[static_cast<std::size_t>(j) * n_ + i] = w;
    }

  private:
    int n_;
    std::vector<double> k_;
};

namespace detail {

inline void check_size(const WeightedGraph& g, std::size_t n, const char* who) {
    if (n != static_cast<std::size_t>(g.size())) throw DimensionMismatch(who);
}

inline void check_positive(const NodeWeights& omega) {
    for (double w : omega)
        if (!(w > 0.0))
            throw NonpositiveGroundState("ground state must be positive");
}

// (x - y)|x - y|^{p-2} with the convention 0 * |0|^{p-2} = 0.
inline double signed_power(double d, double p) {
    if (d == 0.0) return 0.0;
    return (d > 0.0 ? 1.0 : -1.0) * std::pow(std::abs(d), p - 1.0);
}

} // namespace detail

/// E[u] = sum_{i,j} |u_i - u_j|^p k(i,j), both orderings counted.
inline double graph_energy(const WeightedGraph& g, const NodeFunction& u,
                           double p) {
    detail::check_size(g, u.size(), "graph_energy");
    double e = 0.0;
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j)
            if (double k = g.weight(i, j); k > 0.0)
                e += std::pow(std::abs(u[i] - u[j]), p) * k;
    return e;
}

/// Ground-state-weighted energy
/// E_omega[v] = sum_{i,j} |v_i - v_j|^p omega_i^{p/2} omega_j^{p/2} k(i,j).
inline double weighted_energy(const WeightedGraph& g, const NodeWeights& omega,
                              const NodeFunction& v, double p) {
    detail::check_size(g, omega.size(), "weighted_energy");
    detail::check_size(g, v.size(), "weighted_energy");
    detail::check_positive(omega);
    double e = 0.0;
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j)
            if (double k = g.weight(i, j); k > 0.0)
                e += std::pow(std::abs(v[i] - v[j]), p) *
                     std::pow(omega[i] * omega[j], 0.5 * p) * k;
    return e;
}

/// Potential induced by the ground state:
/// V_i = 2 omega_i^{1-p} sum_j (omega_i - omega_j)|omega_i - omega_j|^{p-2} k(i,j).
inline std::vector<double> induced_potential(const WeightedGraph& g,
                                             const NodeWeights& omega,
                                             double p) {
    detail::check_size(g, omega.size(), "induced_potential");
    detail::check_positive(omega);
    std::vector<double> v(omega.size(), 0.0);
    for (int i = 0; i < g.size(); ++i) {
        double acc = 0.0;
        for (int j = 0; j < g.size(); ++j)
            acc += detail::signed_power(omega[i] - omega[j], p) * g.weight(i, j);
        v[i] = 2.0 * std::pow(omega[i], 1.0 - p) * acc;
    }
    return v;
}

struct GsrReport {
    double energy;
    double phi_sum;
    double potential_term;
    double phi_min;
};

/// Ground-state representation identity:
///   E[u] = sum_{i,j} Phi_u(i,j) k(i,j) + sum_i V_i |u_i|^p
/// with v = u/omega and
///   Phi_u(i,j) = |u_i - u_j|^p
///     - (omega_i |v_i|^p - omega_j |v_j|^p)(omega_i - omega_j)|omega_i - omega_j|^{p-2}.
inline GsrReport gsr_identity(const WeightedGraph& g, const NodeWeights& omega,
                              const NodeFunction& u, double p) {
    detail::check_size(g, omega.size(), "gsr_identity");
    detail::check_size(g, u.size(), "gsr_identity");
    detail::check_positive(omega);
    const int n = g.size();
    std::vector<double> vp(u.size());
    for (int i = 0; i < n; ++i)
        vp[i] = std::pow(std::abs(u[i]) / omega[i], p);

    double energy = 0.0, phi_sum = 0.0, phi_min = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double k = g.weight(i, j);
            if (k <= 0.0) continue;
            const double diff = std::pow(std::abs(u[i] - u[j]), p);
            const double phi =
                diff - (omega[i] * vp[i] - omega[j] * vp[j]) *
                           detail::signed_power(omega[i] - omega[j], p);
            energy += diff * k;
            phi_sum += phi * k;
            phi_min = std::min(phi_min, phi);
        }
    const std::vector<double> pot = induced_potential(g, omega, p);
    double potential_term = 0.0;
    for (int i = 0; i < n; ++i)
        potential_term += pot[i] * std::pow(std::abs(u[i]), p);
    return GsrReport{energy, phi_sum, potential_term, phi_min};
}

/// Remainder gap E[u] - sum V|u|^p - c_p E_omega[v]; nonnegative for p >= 2,
/// identically zero at p = 2.
inline double gsr_remainder_gap(const WeightedGraph& g, const NodeWeights& omega,
                                const NodeFunction& u, double p) {
    if (!(p >= 2.0)) throw InvalidParams("gsr_remainder_gap: p >= 2 required");
    const GsrReport rep = gsr_identity(g, omega, u, p);
    NodeFunction v(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) v[i] = u[i] / omega[i];
    return rep.energy - rep.potential_term -
           remainder_constant(p) * weighted_energy(g, omega, v, p);
}

/// Nearest-neighbor path graph with unit weights at p = 2 (the Jacobi-matrix
/// specialization).
inline GsrReport jacobi_case(int n, const NodeWeights& omega,
                             const NodeFunction& u) {
    WeightedGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.set_weight(i, i + 1, 1.0);
    return gsr_identity(g, omega, u, 2.0);
}

struct GsrInstance {
    WeightedGraph graph;
    NodeWeights omega;
    NodeFunction u;
};

/// Reproducible random instance: edge weights uniform (0,1] at density 1/2,
/// omega log-uniform in [0.1, 10], u uniform in the complex disk of radius 10.
inline GsrInstance random_gsr_instance(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    WeightedGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unit(rng) < 0.5) g.set_weight(i, j, 1.0 - unit(rng));
    NodeWeights omega(n);
    for (double& w : omega) w = std::pow(10.0, -1.0 + 2.0 * unit(rng));
    NodeFunction u(n);
    for (auto& z : u) {
        double re, im;
        do {
            re = 2.0 * unit(rng) - 1.0;
            im = 2.0 * unit(rng) - 1.0;
        } while (re * re + im * im > 1.0);
        z = std::complex<double>(10.0 * re, 10.0 * im);
    }
    return GsrInstance{std::move(g), std::move(omega), std::move(u)};
}

} // namespace hardy
