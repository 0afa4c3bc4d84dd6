#include <atomic>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hardy/hardy.hpp"

namespace {

using nlohmann::json;

constexpr int kExitInvalid = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitContract = 3;

struct Check {
    std::string name;
    double delta;
    bool pass;
};

json report_json(std::optional<int> n, std::optional<double> s,
                 std::optional<double> p, double value, double err,
                 const std::string& method, const std::vector<Check>& checks) {
    json j;
    j["N"] = n ? json(*n) : json(nullptr);
    j["s"] = s ? json(*s) : json(nullptr);
    j["p"] = p ? json(*p) : json(nullptr);
    j["value"] = value;
    j["err"] = err;
    j["method"] = method;
    j["checks"] = json::array();
    for (const Check& c : checks)
        j["checks"].push_back({{"name", c.name}, {"delta", c.delta}, {"pass", c.pass}});
    return j;
}

int emit(bool as_json, const json& j, const std::vector<Check>& checks,
         const std::string& text) {
    if (as_json)
        std::cout << j.dump() << "\n";
    else
        std::cout << text;
    for (const Check& c : checks)
        if (!c.pass) return kExitContract;
    return 0;
}

hardy::GsrInstance instance_from(const std::string& file, int random_n,
                                 std::uint64_t seed) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw hardy::InvalidParams("cannot open " + file);
        return hardy::load_graph(in);
    }
    return hardy::random_gsr_instance(random_n, seed);
}

template <class Loader>
auto load_file(const std::string& file, Loader&& loader) {
    std::ifstream in(file);
    if (!in) throw hardy::InvalidParams("cannot open " + file);
    return loader(in);
}

int thread_budget() {
    if (const char* env = std::getenv("HARDY_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

int cmd_table(const std::vector<int>& n_list, const std::vector<double>& s_list,
              const std::vector<double>& p_list, const std::string& output,
              double tol) {
    struct Cell {
        int n;
        double s, p;
    };
    std::vector<Cell> grid;
    for (int n : n_list)
        for (double s : s_list)
            for (double p : p_list) grid.push_back({n, s, p});

    struct Row {
        bool skipped = false;
        bool failed = false;
        bool invalid = false;
        std::string text;
    };
    std::vector<Row> rows(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            const Cell& c = grid[i];
            char buf[256];
            if (std::abs(c.n - c.p * c.s) < 1e-12) {
                rows[i].skipped = true;
                std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,skipped p=N/s,",
                              c.n, c.s, c.p);
                rows[i].text = buf;
                continue;
            }
            try {
                const auto rep = hardy::hardy_constant(
                    hardy::make_params(c.n, c.s, c.p), tol);
                std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g",
                              c.n, c.s, c.p, rep.value, rep.error_estimate);
                rows[i].text = buf;
            } catch (const hardy::InvalidParams& e) {
                rows[i].failed = true;
                rows[i].invalid = true;
                rows[i].text = e.what();
            } catch (const std::exception& e) {
                rows[i].failed = true;
                rows[i].text = e.what();
            }
        }
    };
    const int workers =
        std::min<int>(thread_budget(), static_cast<int>(grid.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    const bool csv = output == "csv";
    if (csv) std::cout << "N,s,p,value,err\n";
    json jrows = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (rows[i].failed) {
            std::cerr << "row " << i << " failed: " << rows[i].text << "\n";
            return rows[i].invalid ? kExitInvalid : kExitNumerical;
        }
        if (csv) {
            std::cout << rows[i].text << "\n";
        } else if (rows[i].skipped) {
            jrows.push_back({{"N", grid[i].n},
                             {"s", grid[i].s},
                             {"p", grid[i].p},
                             {"skipped", "p=N/s"}});
        } else {
            const auto rep = hardy::hardy_constant(
                hardy::make_params(grid[i].n, grid[i].s, grid[i].p), tol);
            jrows.push_back({{"N", grid[i].n},
                             {"s", grid[i].s},
                             {"p", grid[i].p},
                             {"value", rep.value},
                             {"err", rep.error_estimate}});
        }
        if (rows[i].skipped && csv)
            std::cerr << "skipping p=N/s grid point N=" << grid[i].n
                      << " s=" << grid[i].s << " p=" << grid[i].p << "\n";
    }
    if (!csv) std::cout << jrows.dump() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sharp fractional Hardy constants and related checks"};
    app.require_subcommand(1);

    int N = 1;
    double s = 0.5, p = 1.0, r_arg = 0.0, tol = 1e-10, z = 1.0, radius = 1.0;
    double q_idx = 2.0, r_idx = 2.0;
    bool as_json = false;
    std::string file;
    std::uint64_t seed = 1;
    int random_n = 10;
    std::vector<int> n_list;
    std::vector<double> s_list, p_list;
    std::string output = "csv";
    int ex_m = 3, ex_maxval = 3;

    auto add_params = [&](CLI::App* c) {
        c->add_option("--N", N, "dimension");
        c->add_option("--s", s, "fractional order in (0,1)");
        c->add_option("--p", p, "integrability exponent >= 1");
    };
    auto add_common = [&](CLI::App* c) {
        c->add_option("--tol", tol, "relative tolerance");
        c->add_flag("--json", as_json, "JSON output");
    };

    auto* c_constant = app.add_subcommand("constant", "sharp Hardy constant");
    add_params(c_constant);
    add_common(c_constant);

    auto* c_cp = app.add_subcommand("cp", "remainder constant c_p");
    c_cp->add_option("--p", p, "exponent >= 2");
    add_common(c_cp);

    auto* c_phi = app.add_subcommand("phi", "angular kernel value");
    add_params(c_phi);
    c_phi->add_option("--r", r_arg, "radius in [0,1)")->required();
    add_common(c_phi);

    auto* c_sharp = app.add_subcommand("sharpness", "trial-function scan");
    add_params(c_sharp);
    c_sharp->add_option("--n", n_list, "trial indices (increasing)")->required();
    add_common(c_sharp);

    auto* c_rem = app.add_subcommand("remainder-check", "remainder inequality");
    add_params(c_rem);
    c_rem->add_option("--file", file, "radial profile file")->required();
    add_common(c_rem);

    auto* c_graph = app.add_subcommand("graph-check", "graph GSR identity");
    c_graph->add_option("--file", file, "graph file");
    c_graph->add_option("--random", random_n, "random instance size");
    c_graph->add_option("--seed", seed, "random seed");
    c_graph->add_option("--p", p, "exponent");
    add_common(c_graph);

    auto* c_jacobi = app.add_subcommand("jacobi-check", "path-graph p=2 identity");
    c_jacobi->add_option("--file", file, "graph file");
    c_jacobi->add_option("--random", random_n, "random instance size");
    c_jacobi->add_option("--seed", seed, "random seed");
    add_common(c_jacobi);

    auto* c_re = app.add_subcommand("rearrange-check", "rearrangement inequality");
    c_re->add_option("--exhaustive", ex_m, "window radius M");
    c_re->add_option("maxval", ex_maxval, "largest value in the sweep");
    c_re->add_option("--file", file, "lattice function file");
    add_common(c_re);

    auto* c_lor = app.add_subcommand("lorentz", "Lorentz quasinorm");
    c_lor->add_option("--file", file, "step function file")->required();
    c_lor->add_option("--N", N, "dimension");
    c_lor->add_option("--q", q_idx, "first index");
    c_lor->add_option("--r", r_idx, "second index (inf for weak norm)");
    add_common(c_lor);

    auto* c_sym = app.add_subcommand("symmdecr-check", "Lorentz identity");
    add_params(c_sym);
    c_sym->add_option("--file", file, "step function file")->required();
    add_common(c_sym);

    auto* c_iso = app.add_subcommand("isoperimetric-check", "ball equality");
    add_params(c_iso);
    c_iso->add_option("--R", radius, "ball radius");
    add_common(c_iso);

    auto* c_gauss = app.add_subcommand("gaussian-check", "Gamma identity");
    add_params(c_gauss);
    c_gauss->add_option("--z", z, "evaluation point > 0");
    add_common(c_gauss);

    auto* c_table = app.add_subcommand("table", "constants over a grid");
    c_table->add_option("--N", n_list, "dimensions")->required();
    c_table->add_option("--s", s_list, "fractional orders")->required();
    c_table->add_option("--p", p_list, "exponents")->required();
    c_table->add_option("--output", output, "csv or json");
    c_table->add_option("--tol", tol, "relative tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    char buf[512];
    try {
        if (*c_constant) {
            const auto prm = hardy::make_params(N, s, p);
            const auto rep = hardy::hardy_constant(prm, tol);
            std::vector<Check> checks;
            if (N == 1 && p == 1.0) {
                const double d = rep.value / hardy::closed_form_p1_n1(s) - 1.0;
                checks.push_back({"closed_form_p1_n1", d, std::abs(d) < 1e-8});
            }
            if (p == 2.0) {
                const double d = rep.value / hardy::hardy_constant_p2(prm) - 1.0;
                checks.push_back({"closed_form_p2", d, std::abs(d) < 1e-8});
            }
            std::snprintf(buf, sizeof buf,
                          "C_{%d,%g,%g} = %.12g (err %.3g, %s)\n", N, s, p,
                          rep.value, rep.error_estimate,
                          hardy::method_name(rep.method));
            std::string text(buf);
            for (const Check& c : checks) {
                std::snprintf(buf, sizeof buf, "  check %s: delta %.3g [%s]\n",
                              c.name.c_str(), c.delta, c.pass ? "pass" : "FAIL");
                text += buf;
            }
            return emit(as_json,
                        report_json(N, s, p, rep.value, rep.error_estimate,
                                    hardy::method_name(rep.method), checks),
                        checks, text);
        }
        if (*c_cp) {
            const double v = hardy::remainder_constant(p);
            std::snprintf(buf, sizeof buf, "c_%g = %.12g\n", p, v);
            return emit(as_json,
                        report_json(std::nullopt, std::nullopt, p, v, 0.0,
                                    "GoldenSection", {}),
                        {}, buf);
        }
        if (*c_phi) {
            const auto prm = hardy::make_params(N, s, p);
            const double v = hardy::phi_kernel(prm, r_arg);
            std::snprintf(buf, sizeof buf, "Phi_{%d,%g,%g}(%g) = %.12g\n", N, s,
                          p, r_arg, v);
            return emit(as_json,
                        report_json(N, s, p, v, 0.0, "AngularIntegral", {}), {},
                        buf);
        }
        if (*c_sharp) {
            const auto prm = hardy::make_params(N, s, p);
            const auto scan = hardy::sharpness_scan(prm, n_list);
            std::vector<Check> checks;
            std::string text;
            double prev_gap = std::numeric_limits<double>::infinity();
            bool above = true, decreasing = true;
            for (const auto& pt : scan) {
                std::snprintf(buf, sizeof buf, "n=%d ratio=%.12g gap=%.6g\n",
                              pt.n, pt.ratio, pt.gap);
                text += buf;
                above = above && pt.gap > 0.0;
                decreasing = decreasing && pt.gap < prev_gap;
                prev_gap = pt.gap;
            }
            checks.push_back({"ratios_above_constant", 0.0, above});
            checks.push_back({"gaps_decreasing", 0.0, decreasing});
            json j = report_json(N, s, p, scan.back().ratio, 0.0,
                                 "SharpnessScan", checks);
            for (const Check& c : checks) {
                std::snprintf(buf, sizeof buf, "  %s [%s]\n", c.name.c_str(),
                              c.pass ? "pass" : "FAIL");
                text += buf;
            }
            return emit(as_json, j, checks, text);
        }
        if (*c_rem) {
            const auto prm = hardy::make_params(N, s, p);
            const auto u = load_file(file, [](std::istream& in) {
                return hardy::load_radial(in);
            });
            const auto rc = hardy::remainder_check(prm, u);
            std::vector<Check> checks;
            const double scale = std::max(std::abs(rc.lhs_gap), 1e-300);
            checks.push_back({"gap_dominates_remainder",
                              (rc.lhs_gap - rc.remainder) / scale,
                              rc.lhs_gap >= rc.remainder * (1.0 - 1e-4)});
            if (p == 2.0)
                checks.push_back(
                    {"p2_equality", (rc.lhs_gap - rc.remainder) / scale,
                     std::abs(rc.lhs_gap - rc.remainder) <= 1e-5 * scale});
            std::snprintf(buf, sizeof buf,
                          "lhs_gap = %.12g, remainder = %.12g\n", rc.lhs_gap,
                          rc.remainder);
            std::string text(buf);
            for (const Check& c : checks) {
                std::snprintf(buf, sizeof buf, "  %s [%s]\n", c.name.c_str(),
                              c.pass ? "pass" : "FAIL");
                text += buf;
            }
            return emit(as_json,
                        report_json(N, s, p, rc.lhs_gap, 0.0, "RemainderCheck",
                                    checks),
                        checks, text);
        }
        if (*c_graph) {
            const auto inst = instance_from(file, random_n, seed);
            const auto rep = hardy::gsr_identity(inst.graph, inst.omega, inst.u, p);
            const double scale =
                std::max({std::abs(rep.energy), std::abs(rep.phi_sum),
                          std::abs(rep.potential_term), 1e-300});
            const double rel =
                std::abs(rep.energy - rep.phi_sum - rep.potential_term) / scale;
            std::vector<Check> checks{
                {"gsr_identity", rel, rel < 1e-10},
                {"phi_pointwise_nonneg", rep.phi_min / scale,
                 rep.phi_min >= -1e-12 * scale}};
            if (p >= 2.0) {
                const double gap =
                    hardy::gsr_remainder_gap(inst.graph, inst.omega, inst.u, p);
                checks.push_back({"remainder_gap_nonneg", gap / scale,
                                  gap >= -1e-10 * scale});
            }
            std::string text;
            if (checks[0].pass) {
                std::snprintf(buf, sizeof buf, "identity OK (rel err < 1e-10)\n");
            } else {
                std::snprintf(buf, sizeof buf, "identity FAILED (rel err %.3g)\n", rel);
            }
            text = buf;
            std::snprintf(buf, sizeof buf,
                          "E = %.12g, phi_sum = %.12g, potential = %.12g\n",
                          rep.energy, rep.phi_sum, rep.potential_term);
            text += buf;
            return emit(as_json,
                        report_json(inst.graph.size(), std::nullopt, p,
                                    rep.energy, 0.0, "GsrIdentity", checks),
                        checks, text);
        }
        if (*c_jacobi) {
            hardy::GsrInstance inst = [&] {
                if (!file.empty()) return instance_from(file, 0, 0);
                auto base = hardy::random_gsr_instance(random_n, seed);
                hardy::WeightedGraph path(random_n);
                for (int i = 0; i + 1 < random_n; ++i) path.set_weight(i, i + 1, 1.0);
                return hardy::GsrInstance{std::move(path), std::move(base.omega),
                                          std::move(base.u)};
            }();
            const auto rep =
                hardy::gsr_identity(inst.graph, inst.omega, inst.u, 2.0);
            const double scale =
                std::max({std::abs(rep.energy), std::abs(rep.phi_sum),
                          std::abs(rep.potential_term), 1e-300});
            const double rel =
                std::abs(rep.energy - rep.phi_sum - rep.potential_term) / scale;
            std::vector<Check> checks{{"jacobi_identity", rel, rel < 1e-12}};
            std::snprintf(buf, sizeof buf,
                          "E = %.12g, phi_sum = %.12g, potential = %.12g, rel "
                          "err %.3g [%s]\n",
                          rep.energy, rep.phi_sum, rep.potential_term, rel,
                          checks[0].pass ? "pass" : "FAIL");
            return emit(as_json,
                        report_json(inst.graph.size(), std::nullopt, 2.0,
                                    rep.energy, 0.0, "JacobiIdentity", checks),
                        checks, buf);
        }
        if (*c_re) {
            if (!file.empty()) {
                const auto u = load_file(file, [](std::istream& in) {
                    return hardy::load_grid(in);
                });
                const auto kernel = hardy::power_law_kernel(1.5);
                const double gap = hardy::rearrangement_gap(
                    u, kernel, [](double t) { return t * t; });
                std::vector<Check> checks{{"gap_nonneg", gap, gap >= -1e-9}};
                std::snprintf(buf, sizeof buf, "rearrangement gap = %.12g [%s]\n",
                              gap, checks[0].pass ? "pass" : "FAIL");
                return emit(as_json,
                            report_json(std::nullopt, std::nullopt, std::nullopt,
                                        gap, 0.0, "RearrangementGap", checks),
                            checks, buf);
            }
            const auto kernel = hardy::power_law_kernel(1.5);
            const std::vector<std::pair<std::string, std::function<double(double)>>>
                js{{"abs", [](double t) { return std::abs(t); }},
                   {"square", [](double t) { return t * t; }},
                   {"cube", [](double t) { return std::abs(t * t * t); }},
                   {"asym", [](double t) {
                        return std::max(t, 0.0) + 2.0 * std::max(-t, 0.0);
                    }}};
            const int sites = 2 * ex_m + 1;
            std::int64_t total = 1;
            for (int i = 0; i < sites; ++i) total *= ex_maxval + 1;
            std::string text;
            std::vector<Check> checks;
            for (const auto& [name, jf] : js) {
                std::int64_t ok = 0;
                std::vector<double> vals(sites, 0.0);
                for (std::int64_t code = 0; code < total; ++code) {
                    std::int64_t c = code;
                    for (int i = 0; i < sites; ++i) {
                        vals[i] = static_cast<double>(c % (ex_maxval + 1));
                        c /= ex_maxval + 1;
                    }
                    hardy::GridFunction1D u(ex_m, vals);
                    double scale = 0.0;
                    for (double v : vals) scale = std::max(scale, v);
                    if (hardy::rearrangement_gap(u, kernel, jf) >=
                        -1e-12 * std::max(1.0, scale * scale * scale))
                        ++ok;
                }
                checks.push_back({"nonneg_" + name,
                                  static_cast<double>(total - ok), ok == total});
                std::snprintf(buf, sizeof buf,
                              "J=%s: %" PRId64 "/%" PRId64 " nonneg gaps\n",
                              name.c_str(), ok, total);
                text += buf;
            }
            bool all = true;
            for (const Check& c : checks) all = all && c.pass;
            if (all) {
                std::snprintf(buf, sizeof buf,
                              "%" PRId64 "/%" PRId64 " nonneg gaps\n", total,
                              total);
                text += buf;
            }
            return emit(as_json,
                        report_json(std::nullopt, std::nullopt, std::nullopt,
                                    static_cast<double>(total), 0.0,
                                    "ExhaustiveSweep", checks),
                        checks, text);
        }
        if (*c_lor) {
            const auto u = load_file(file, [](std::istream& in) {
                return hardy::load_step(in);
            });
            const double v = hardy::lorentz_norm(u, N, q_idx, r_idx);
            std::snprintf(buf, sizeof buf, "||u||_{%g,%g} = %.12g\n", q_idx,
                          r_idx, v);
            return emit(as_json,
                        report_json(N, std::nullopt, std::nullopt, v, 0.0,
                                    "LorentzNorm", {}),
                        {}, buf);
        }
        if (*c_sym) {
            const auto prm = hardy::make_params(N, s, p);
            const auto u = load_file(file, [](std::istream& in) {
                return hardy::load_step(in);
            });
            const double gap = hardy::symmdecr_identity_gap(prm, u);
            const double scale = std::max(
                hardy::lorentz_norm(u, N, *prm.p_star, p), 1e-300);
            std::vector<Check> checks{
                {"identity", gap / scale, std::abs(gap) <= 1e-10 * scale}};
            std::snprintf(buf, sizeof buf, "gap = %.6g [%s]\n", gap,
                          checks[0].pass ? "pass" : "FAIL");
            return emit(as_json,
                        report_json(N, s, p, gap, 0.0, "SymmDecrIdentity",
                                    checks),
                        checks, buf);
        }
        if (*c_iso) {
            const auto prm = hardy::make_params(N, s, 1.0);
            const auto ic = hardy::isoperimetric_check(prm, radius);
            const double rel = std::abs(ic.lhs - ic.rhs) / ic.lhs;
            std::vector<Check> checks{{"ball_equality", rel, rel <= 1e-5}};
            std::snprintf(buf, sizeof buf, "lhs = %.10g, rhs = %.10g [%s]\n",
                          ic.lhs, ic.rhs, checks[0].pass ? "pass" : "FAIL");
            return emit(as_json,
                        report_json(N, s, 1.0, ic.lhs, 0.0,
                                    "IsoperimetricCheck", checks),
                        checks, buf);
        }
        if (*c_gauss) {
            const auto prm = hardy::make_params(N, s, p);
            const double gap = hardy::gaussian_decomposition_gap(prm, z);
            const double scale = hardy::gamma_fn(0.5 * (N + p * s)) *
                                 std::pow(z, -(double)N - p * s);
            std::vector<Check> checks{
                {"gamma_identity", gap / scale, std::abs(gap) <= 1e-8 * scale}};
            std::snprintf(buf, sizeof buf, "gap = %.6g [%s]\n", gap,
                          checks[0].pass ? "pass" : "FAIL");
            return emit(as_json,
                        report_json(N, s, p, gap, 0.0, "GaussianIdentity",
                                    checks),
                        checks, buf);
        }
        if (*c_table)
            return cmd_table(n_list, s_list, p_list, output, tol);
    } catch (const hardy::InvalidParams& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const hardy::DimensionMismatch& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitInvalid;
}
