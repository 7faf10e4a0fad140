#include "hrlab/cli.hpp"

#include "hrlab/constants.hpp"
#include "hrlab/crosscheck3d.hpp"
#include "hrlab/functionals.hpp"
#include "hrlab/spectral.hpp"
#include "hrlab/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>

namespace hrlab::cli {

namespace {

// Fixed 12-significant-digit scientific formatting; all numeric output goes
// through here so reports are byte-stable.
std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.11e", x);
    return buf;
}

using Row = std::map<std::string, std::string>;

struct Report {
    std::string command;
    std::map<std::string, std::string> inputs;
    std::vector<std::string> columns;  // column order for table/csv
    std::vector<Row> rows;
    std::map<std::string, std::string> margins;
    std::string status = "ok";
};

std::string render_table(const Report& rep) {
    std::ostringstream out;
    out << "command: " << rep.command << "\n";
    for (const auto& [key, value] : rep.inputs) out << key << ": " << value << "\n";
    out << "\n";
    std::vector<std::size_t> width(rep.columns.size());
    for (std::size_t c = 0; c < rep.columns.size(); ++c) {
        width[c] = rep.columns[c].size();
        for (const auto& row : rep.rows) {
            const auto it = row.find(rep.columns[c]);
            if (it != row.end()) width[c] = std::max(width[c], it->second.size());
        }
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out << cells[c];
            if (c + 1 < cells.size())
                out << std::string(width[c] - cells[c].size() + 2, ' ');
        }
        out << "\n";
    };
    line(rep.columns);
    for (const auto& row : rep.rows) {
        std::vector<std::string> cells;
        for (const auto& col : rep.columns) {
            const auto it = row.find(col);
            cells.push_back(it == row.end() ? "" : it->second);
        }
        line(cells);
    }
    if (!rep.margins.empty()) {
        out << "\n";
        for (const auto& [key, value] : rep.margins) out << key << ": " << value << "\n";
    }
    out << "\nstatus: " << rep.status << "\n";
    return out.str();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string render_csv(const Report& rep) {
    std::ostringstream out;
    for (std::size_t c = 0; c < rep.columns.size(); ++c) {
        if (c) out << ",";
        out << csv_escape(rep.columns[c]);
    }
    out << "\n";
    for (const auto& row : rep.rows) {
        for (std::size_t c = 0; c < rep.columns.size(); ++c) {
            if (c) out << ",";
            const auto it = row.find(rep.columns[c]);
            if (it != row.end()) out << csv_escape(it->second);
        }
        out << "\n";
    }
    return out.str();
}

std::string render_json(const Report& rep) {
    nlohmann::json j;
    j["schema_version"] = "1";
    j["command"] = rep.command;
    j["inputs"] = nlohmann::json::object();
    for (const auto& [key, value] : rep.inputs) j["inputs"][key] = value;
    j["results"] = nlohmann::json::array();
    for (const auto& row : rep.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (const auto& [key, value] : row) obj[key] = value;
        j["results"].push_back(obj);
    }
    j["margins"] = nlohmann::json::object();
    for (const auto& [key, value] : rep.margins) j["margins"][key] = value;
    j["status"] = rep.status;
    return j.dump(2) + "\n";
}

std::string render(const Report& rep, const std::string& format) {
    if (format == "json") return render_json(rep);
    if (format == "csv") return render_csv(rep);
    return render_table(rep);
}

struct CommonOptions {
    std::string format = "table";
    std::uint64_t seed = 1;
    bool serial = false;
    Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
};

quadrature::QuadratureConfig quad_config(const CommonOptions& common) {
    quadrature::QuadratureConfig cfg;
    cfg.exec = common.exec();
    return cfg;
}

// ---- subcommand bodies ----------------------------------------------------

Report run_constants(int dim_value, int kmax) {
    const Dimension dim(dim_value);
    Report rep;
    rep.command = "constants";
    rep.inputs = {{"dim", std::to_string(dim_value)}, {"kmax", std::to_string(kmax)}};
    rep.columns = {"name", "k", "exact", "value"};
    auto push = [&rep](const std::string& name, const std::string& k, const Rational& q) {
        rep.rows.push_back(
            {{"name", name}, {"k", k}, {"exact", to_string(q)}, {"value", fmt12(to_double(q))}});
    };
    push("sharp_constant", "", constants::sharp_constant(dim));
    push("min_split", "", constants::min_split(dim));
    if (dim_value == 3 || dim_value == 4) {
        const Rational eps = constants::eps_star(dim);
        push("eps_star", "", eps);
        const Rational balance =
            Rational(static_cast<long long>(dim_value) * dim_value, 4) - eps -
            constants::sharp_constant(dim);
        rep.margins["balance_residual"] = to_string(balance);
    }
    for (int k = 0; k <= kmax; ++k) {
        const ModeIndex mode(k);
        push("eigenvalue_ck", std::to_string(k), constants::eigenvalue_ck(dim, mode));
        push("g_lower", std::to_string(k), constants::g_lower(dim, mode));
        if (k >= 1 && (dim_value == 3 || dim_value == 4))
            push("h_lower_at_eps_star", std::to_string(k),
                 constants::h_lower(dim, constants::eps_star(dim), mode));
        if (!(dim_value == 4 && k == 0))
            push("mode_limit_quotient", std::to_string(k),
                 constants::mode_limit_quotient(dim, mode));
    }
    return rep;
}

Report run_quotient(int dim_value, int mode_value, double eps, const CommonOptions& common) {
    const Dimension dim(dim_value);
    const ModeIndex mode(mode_value);
    Report rep;
    rep.command = "quotient";
    rep.inputs = {{"dim", std::to_string(dim_value)},
                  {"eps", fmt12(eps)},
                  {"mode", std::to_string(mode_value)}};
    rep.columns = {"quantity", "value"};
    const auto q = functionals::mode_quotient(
        dim, mode, profiles::RadialProfile::power_cutoff(dim, eps), quad_config(common));
    auto push = [&rep](const std::string& name, double v) {
        rep.rows.push_back({{"quantity", name}, {"value", fmt12(v)}});
    };
    push("numerator", q.numerator);
    push("denominator", q.denominator);
    push("quotient", q.quotient);
    push("m1", q.m1);
    push("m2", q.m2);
    push("m3", q.m3);
    push("m4", q.m4);
    push("quadrature_err", q.err);
    if (!(dim_value == 4 && mode_value == 0)) {  // eps -> 0 limit is 0/0 there
        const Rational limit = constants::mode_limit_quotient(dim, mode);
        rep.margins["limit_quotient_exact"] = to_string(limit);
        rep.margins["limit_quotient"] = fmt12(to_double(limit));
    }
    const double scale = std::max(std::abs(q.numerator),
                                  to_double(constants::sharp_constant(dim)) * q.denominator);
    if (q.m3 < -1e-9 * scale) rep.status = "fail";
    return rep;
}

Report run_sweep_eps(int dim_value, const std::vector<double>& eps_list, double tol,
                     const CommonOptions& common) {
    const Dimension dim(dim_value);
    Report rep;
    rep.command = "sweep-eps";
    std::ostringstream eps_str;
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        if (i) eps_str << ",";
        eps_str << fmt12(eps_list[i]);
    }
    rep.inputs = {{"dim", std::to_string(dim_value)},
                  {"eps", eps_str.str()},
                  {"tol", fmt12(tol)}};
    rep.columns = {"eps", "quotient", "m3", "m4"};
    const auto cfg = quad_config(common);
    bool monotone = true;
    double prev = std::numeric_limits<double>::infinity();
    for (double eps : eps_list) {
        const auto q = functionals::quotient_ueps(dim, eps, cfg);
        rep.rows.push_back({{"eps", fmt12(eps)},
                            {"quotient", fmt12(q.quotient)},
                            {"m3", fmt12(q.m3)},
                            {"m4", fmt12(q.m4)}});
        if (!(q.quotient < prev)) monotone = false;
        prev = q.quotient;
    }
    const auto limit = functionals::sequence_limit(dim, eps_list, cfg);
    const double target = to_double(constants::sharp_constant(dim));
    rep.margins["extrapolated"] = fmt12(limit.extrapolated);
    rep.margins["last_raw"] = fmt12(limit.last_raw);
    rep.margins["target"] = fmt12(target);
    rep.margins["target_exact"] = to_string(constants::sharp_constant(dim));
    rep.margins["extrapolation_error"] = fmt12(std::abs(limit.extrapolated - target));
    rep.margins["monotone_decreasing"] = monotone ? "true" : "false";
    rep.margins["mode"] = std::to_string(functionals::minseq_mode(dim).k);
    if (!monotone || std::abs(limit.extrapolated - target) > tol) rep.status = "fail";
    return rep;
}

Report run_scan_modes(int dim_value, int kmax, double grid_decades, int grid_points,
                      const CommonOptions& common) {
    const Dimension dim(dim_value);
    Report rep;
    rep.command = "scan-modes";
    rep.inputs = {{"dim", std::to_string(dim_value)},
                  {"grid_decades", fmt12(grid_decades)},
                  {"grid_points", std::to_string(grid_points)},
                  {"kmax", std::to_string(kmax)}};
    rep.columns = {"k", "lambda", "symbol_min", "excess"};
    const LogGrid grid = LogGrid::decades(grid_decades, grid_points);
    const auto scan = spectral::scan_modes(dim, kmax, grid, common.exec());
    int oracle_argmin = 0;
    std::vector<double> oracle(kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
        oracle[k] = spectral::symbol_min(dim, ModeIndex(k));
        if (oracle[k] < oracle[oracle_argmin]) oracle_argmin = k;
    }
    for (int k = 0; k <= kmax; ++k) {
        rep.rows.push_back({{"k", std::to_string(k)},
                            {"lambda", fmt12(scan.lambda[k])},
                            {"symbol_min", fmt12(oracle[k])},
                            {"excess", fmt12(scan.lambda[k] / oracle[k] - 1.0)}});
    }
    rep.margins["argmin_mode"] = std::to_string(scan.argmin_mode);
    rep.margins["symbol_argmin_mode"] = std::to_string(oracle_argmin);
    rep.margins["argmin_agreement"] =
        scan.argmin_mode == oracle_argmin ? "true" : "false";
    if (scan.argmin_mode != oracle_argmin) rep.status = "fail";
    return rep;
}

Report run_verify(const std::vector<int>& dims, int trials, std::uint64_t seed, double tol,
                  const CommonOptions& common) {
    verification::SuiteConfig cfg;
    cfg.dims = dims;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.margin_tol = tol;
    cfg.exec = common.exec();
    const auto suite = verification::run_property_suite(cfg);
    Report rep;
    rep.command = "verify";
    std::ostringstream dims_str;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) dims_str << ",";
        dims_str << dims[i];
    }
    rep.inputs = {{"dims", dims_str.str()},
                  {"generator_version", std::to_string(profiles::random_bump_generator_version)},
                  {"seed", std::to_string(seed)},
                  {"tol", fmt12(tol)},
                  {"trials", std::to_string(trials)}};
    rep.columns = {"dim",          "trials",       "min_m1",       "min_m2",
                   "min_m3",       "min_m4",       "max_identity", "max_dilation",
                   "max_amplitude", "violations"};
    for (const auto& d : suite.dims) {
        rep.rows.push_back({{"dim", std::to_string(d.dim)},
                            {"trials", std::to_string(d.trials)},
                            {"min_m1", fmt12(d.min_m1_scaled)},
                            {"min_m2", fmt12(d.min_m2_scaled)},
                            {"min_m3", fmt12(d.min_m3_scaled)},
                            {"min_m4", fmt12(d.min_m4_scaled)},
                            {"max_identity", fmt12(d.max_identity_rel)},
                            {"max_dilation", fmt12(d.max_dilation_dev)},
                            {"max_amplitude", fmt12(d.max_amplitude_dev)},
                            {"violations", std::to_string(d.violations)}});
    }
    rep.margins["issues"] = std::to_string(suite.issues.size());
    for (const auto& issue : suite.issues)
        std::cerr << "verify: dim " << issue.dim << " trial " << issue.trial << ": "
                  << issue.what << "\n";
    if (!suite.ok) rep.status = "fail";
    return rep;
}

Report run_crosscheck3d(int degree, const CommonOptions& common) {
    Report rep;
    rep.command = "crosscheck3d";
    rep.inputs = {{"degree", std::to_string(degree)}, {"profile", "bump(1,2)"}};
    rep.columns = {"quantity", "direct", "mode_formula", "rel_deviation"};
    const auto harmonic = crosscheck3d::SphericalHarmonic3::make(degree);
    const auto profile = profiles::RadialProfile::bump(1.0, 2.0);
    const Dimension dim(3);
    const ModeIndex mode(degree);
    const auto direct = crosscheck3d::direct_integrals_3d(profile, harmonic, quad_config(common));
    const auto mi = functionals::mode_integrals(profile, dim, quad_config(common));
    const double num1d = functionals::mode_numerator(dim, mode, mi);
    const double den1d = functionals::mode_denominator(dim, mode, mi);
    const double num_dev = std::abs(direct.num / num1d - 1.0);
    const double den_dev = std::abs(direct.den / den1d - 1.0);
    rep.rows.push_back({{"quantity", "numerator"},
                        {"direct", fmt12(direct.num)},
                        {"mode_formula", fmt12(num1d)},
                        {"rel_deviation", fmt12(num_dev)}});
    rep.rows.push_back({{"quantity", "denominator"},
                        {"direct", fmt12(direct.den)},
                        {"mode_formula", fmt12(den1d)},
                        {"rel_deviation", fmt12(den_dev)}});
    const double eigres = crosscheck3d::sphere_eigencheck(harmonic);
    const double norm = crosscheck3d::sphere_norm(harmonic);
    const double orth = crosscheck3d::sphere_orthogonality();
    rep.margins["eigencheck_residual"] = fmt12(eigres);
    rep.margins["norm_deviation"] = fmt12(std::abs(norm - 1.0));
    rep.margins["orthogonality"] = fmt12(std::abs(orth));
    const bool ok = num_dev <= 1e-6 && den_dev <= 1e-6 && eigres <= 1e-10 &&
                    std::abs(norm - 1.0) <= 1e-10 && std::abs(orth) <= 1e-12;
    if (!ok) rep.status = "fail";
    return rep;
}

Report run_oracle(int dim_value, int kmax) {
    const Dimension dim(dim_value);
    Report rep;
    rep.command = "oracle";
    rep.inputs = {{"dim", std::to_string(dim_value)}, {"kmax", std::to_string(kmax)}};
    rep.columns = {"k", "symbol_min", "symbol_at_0_exact"};
    for (int k = 0; k <= kmax; ++k) {
        Row row{{"k", std::to_string(k)},
                {"symbol_min", fmt12(spectral::symbol_min(dim, ModeIndex(k)))}};
        if (!(dim_value == 4 && k == 0))
            row["symbol_at_0_exact"] =
                to_string(spectral::symbol_value_exact(dim, ModeIndex(k), Rational(0)));
        else
            row["symbol_at_0_exact"] = "undefined";
        rep.rows.push_back(std::move(row));
    }
    const double global = spectral::global_constant_estimate(dim, kmax);
    const double target = to_double(constants::sharp_constant(dim));
    rep.margins["global_estimate"] = fmt12(global);
    rep.margins["argmin_mode"] = std::to_string(spectral::symbol_argmin_mode(dim, kmax));
    rep.margins["target"] = fmt12(target);
    rep.margins["target_exact"] = to_string(constants::sharp_constant(dim));
    rep.margins["deviation"] = fmt12(std::abs(global - target));
    if (std::abs(global - target) > 1e-9) rep.status = "fail";
    return rep;
}

}  // namespace

DispatchResult dispatch(const std::vector<std::string>& args) {
    CLI::App app{"Hardy-Rellich sharp-constant laboratory"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global flags after the subcommand too

    CommonOptions common;
    app.add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", common.seed, "Random seed")->capture_default_str();
    app.add_flag("--serial", common.serial, "Disable the parallel kernels");

    int dim = 3;
    int kmax = 3;
    auto* cmd_constants = app.add_subcommand("constants", "Exact constant table");
    cmd_constants->add_option("--dim", dim, "Dimension N")->required()->check(CLI::Range(3, 1000));
    cmd_constants->add_option("--kmax", kmax, "Largest mode index")
        ->check(CLI::Range(0, 1000))
        ->capture_default_str();

    int q_dim = 3, q_mode = 0;
    double q_eps = 0.01;
    auto* cmd_quotient = app.add_subcommand("quotient", "Mode quotient of the minimizing family");
    cmd_quotient->add_option("--dim", q_dim, "Dimension N")->required()->check(CLI::Range(3, 1000));
    cmd_quotient->add_option("--mode", q_mode, "Mode index k")
        ->required()
        ->check(CLI::Range(0, 1000));
    cmd_quotient->add_option("--eps", q_eps, "Family parameter eps")
        ->required()
        ->check(CLI::Range(1e-9, 0.999999));

    int s_dim = 3;
    std::vector<double> s_eps;
    double s_tol = 1e-2;
    auto* cmd_sweep = app.add_subcommand("sweep-eps", "Minimizing-sequence sweep");
    cmd_sweep->add_option("--dim", s_dim, "Dimension N")->required()->check(CLI::Range(3, 1000));
    cmd_sweep->add_option("--eps", s_eps, "Decreasing eps list")->required()->delimiter(',');
    cmd_sweep->add_option("--tol", s_tol, "Extrapolation tolerance")->capture_default_str();

    int m_dim = 3, m_kmax = 5, m_points = 4000;
    double m_decades = 7.0;
    auto* cmd_scan = app.add_subcommand("scan-modes", "Per-mode variational constants");
    cmd_scan->add_option("--dim", m_dim, "Dimension N")->required()->check(CLI::Range(3, 1000));
    cmd_scan->add_option("--kmax", m_kmax, "Largest mode index")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    cmd_scan->add_option("--grid-decades", m_decades, "Log-grid half-range in decades")
        ->check(CLI::Range(1.0, 30.0))
        ->capture_default_str();
    cmd_scan->add_option("--grid-points", m_points, "Log-grid node count")
        ->check(CLI::Range(16, 2000000))
        ->capture_default_str();

    std::vector<int> v_dims{3, 4, 5, 6};
    int v_trials = 100;
    double v_tol = 1e-9;
    auto* cmd_verify = app.add_subcommand("verify", "Randomized property suite");
    cmd_verify->add_option("--dims", v_dims, "Dimension list")
        ->delimiter(',')
        ->capture_default_str();
    cmd_verify->add_option("--trials", v_trials, "Random profiles per dimension")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    cmd_verify->add_option("--tol", v_tol, "Margin tolerance")->capture_default_str();

    int c_degree = 1;
    auto* cmd_cross = app.add_subcommand("crosscheck3d", "Direct (r,theta) quadrature check");
    cmd_cross->add_option("--degree", c_degree, "Harmonic degree")
        ->required()
        ->check(CLI::IsMember({0, 1}));

    int o_dim = 3, o_kmax = 20;
    auto* cmd_oracle = app.add_subcommand("oracle", "Symbol-oracle constants");
    cmd_oracle->add_option("--dim", o_dim, "Dimension N")->required()->check(CLI::Range(3, 1000));
    cmd_oracle->add_option("--kmax", o_kmax, "Largest mode index")
        ->check(CLI::Range(10, 1000))
        ->capture_default_str();

    std::vector<const char*> argv;
    argv.push_back("hrlab");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return {0, app.help()};
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return {2, ""};
    }

    try {
        Report rep;
        if (*cmd_constants) rep = run_constants(dim, kmax);
        else if (*cmd_quotient) rep = run_quotient(q_dim, q_mode, q_eps, common);
        else if (*cmd_sweep) rep = run_sweep_eps(s_dim, s_eps, s_tol, common);
        else if (*cmd_scan) rep = run_scan_modes(m_dim, m_kmax, m_decades, m_points, common);
        else if (*cmd_verify) rep = run_verify(v_dims, v_trials, common.seed, v_tol, common);
        else if (*cmd_cross) rep = run_crosscheck3d(c_degree, common);
        else rep = run_oracle(o_dim, o_kmax);
        const int code = rep.status == "ok" ? 0 : 1;
        return {code, render(rep, common.format)};
    } catch (const NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return {3, ""};
    } catch (const SolverFailure& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return {3, ""};
    } catch (const DegenerateProfile& e) {
        std::cerr << "degenerate profile: " << e.what() << "\n";
        return {3, ""};
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return {2, ""};
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return {2, ""};
    }
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const DispatchResult result = dispatch(args);
    std::cout << result.out;
    return result.exit_code;
}

}  // namespace hrlab::cli
