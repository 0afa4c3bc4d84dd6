#pragma once

#include <cmath>
#include <optional>

#include "hardy/errors.hpp"

namespace hardy {

/// Validated parameter triple (N, s, p) with the derived exponents
/// alpha = (N - ps)/p and, when N > ps, the critical exponent
/// p_star = Np/(N - ps).
struct HardyParams {
    int N;
    double s;
    double p;
    double alpha;
    std::optional<double> p_star;
};

inline HardyParams make_params(int N, double s, double p) {
    if (N < 1) throw InvalidParams("make_params: N >= 1 required");
    if (!(s > 0.0 && s < 1.0))
        throw InvalidParams("make_params: s in (0,1) required");
    if (!(p >= 1.0)) throw InvalidParams("make_params: p >= 1 required");
    const double nps = N - p * s;
    if (std::abs(nps) < 1e-12)
        throw InvalidParams("make_params: p = N/s is excluded");
    HardyParams params{N, s, p, nps / p, std::nullopt};
    if (nps > 0.0) params.p_star = N * p / nps;
    return params;
}

} // namespace hardy
