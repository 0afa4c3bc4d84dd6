#pragma once

#include <cstdlib>
#include <istream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "hardy/errors.hpp"
#include "hardy/graph.hpp"
#include "hardy/lattice.hpp"
#include "hardy/lorentz.hpp"
#include "hardy/radial.hpp"

namespace hardy {

namespace detail {

inline bool next_line(std::istream& in, std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        tokens.assign(std::istream_iterator<std::string>(ss),
                      std::istream_iterator<std::string>());
        if (!tokens.empty()) return true;
    }
    return false;
}

inline double to_real(const std::string& s) {
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw InvalidParams("malformed number: " + s);
    }
    if (used != s.size()) throw InvalidParams("malformed number: " + s);
    return v;
}

inline int to_index(const std::string& s) {
    const double v = to_real(s);
    const int i = static_cast<int>(v);
    if (i != v || i < 0) throw InvalidParams("malformed index: " + s);
    return i;
}

} // namespace detail

/// Graph instance from lines "i j w", "omega i value", "u i re im";
/// '#' starts a comment. The node count is the largest index plus one.
inline GsrInstance load_graph(std::istream& in) {
    std::vector<std::tuple<int, int, double>> edges;
    std::map<int, double> omega;
    std::map<int, std::complex<double>> u;
    int n = 0;
    std::vector<std::string> tok;
    while (detail::next_line(in, tok)) {
        if (tok[0] == "omega" && tok.size() == 3) {
            const int i = detail::to_index(tok[1]);
            omega[i] = detail::to_real(tok[2]);
            n = std::max(n, i + 1);
        } else if (tok[0] == "u" && tok.size() == 4) {
            const int i = detail::to_index(tok[1]);
            u[i] = {detail::to_real(tok[2]), detail::to_real(tok[3])};
            n = std::max(n, i + 1);
        } else if (tok.size() == 3) {
            const int i = detail::to_index(tok[0]);
            const int j = detail::to_index(tok[1]);
            edges.emplace_back(i, j, detail::to_real(tok[2]));
            n = std::max(n, std::max(i, j) + 1);
        } else {
            throw InvalidParams("malformed graph line");
        }
    }
    if (n == 0) throw InvalidParams("empty graph file");
    GsrInstance inst{WeightedGraph(n), NodeWeights(n, 1.0), NodeFunction(n, 0.0)};
    for (const auto& [i, j, w] : edges) inst.graph.set_weight(i, j, w);
    for (const auto& [i, w] : omega) inst.omega[i] = w;
    for (const auto& [i, z] : u) inst.u[i] = z;
    return inst;
}

/// Radial profile from lines "break r" and "piece c beta d" in order;
/// the implicit first breakpoint is 0.
inline RadialPiecewisePower load_radial(std::istream& in) {
    std::vector<double> breaks{0.0};
    std::vector<PowerPiece> pieces;
    std::vector<std::string> tok;
    while (detail::next_line(in, tok)) {
        if (tok[0] == "break" && tok.size() == 2) {
            breaks.push_back(detail::to_real(tok[1]));
        } else if (tok[0] == "piece" && tok.size() == 4) {
            pieces.push_back({detail::to_real(tok[1]), detail::to_real(tok[2]),
                              detail::to_real(tok[3])});
        } else {
            throw InvalidParams("malformed radial line");
        }
    }
    return RadialPiecewisePower(std::move(breaks), std::move(pieces));
}

/// Step radial function from lines "layer R h" (increasing R, decreasing h).
inline StepRadialFunction load_step(std::istream& in) {
    std::vector<double> radii, heights;
    std::vector<std::string> tok;
    while (detail::next_line(in, tok)) {
        if (tok[0] == "layer" && tok.size() == 3) {
            radii.push_back(detail::to_real(tok[1]));
            heights.push_back(detail::to_real(tok[2]));
        } else {
            throw InvalidParams("malformed step-function line");
        }
    }
    return StepRadialFunction(std::move(radii), std::move(heights));
}

/// Lattice function from lines "site i value", i in [-M, M]; M is the
/// largest |i| seen.
inline GridFunction1D load_grid(std::istream& in) {
    std::map<int, double> vals;
    std::vector<std::string> tok;
    while (detail::next_line(in, tok)) {
        if (tok[0] == "site" && tok.size() == 3) {
            const double raw = detail::to_real(tok[1]);
            const int i = static_cast<int>(raw);
            if (i != raw) throw InvalidParams("malformed site index: " + tok[1]);
            vals[i] = detail::to_real(tok[2]);
        } else {
            throw InvalidParams("malformed lattice line");
        }
    }
    int m = 0;
    for (const auto& [i, v] : vals) m = std::max(m, std::abs(i));
    std::vector<double> values(static_cast<std::size_t>(2 * m + 1), 0.0);
    for (const auto& [i, v] : vals) values[static_cast<std::size_t>(i + m)] = v;
    return GridFunction1D(m, std::move(values));
}

} // namespace hardy
