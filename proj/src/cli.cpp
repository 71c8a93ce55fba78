#include "twophase/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "twophase/serialization.hpp"

namespace twophase::cli {

namespace {

struct ParamFlags {
    int dim = 2;
    std::vector<double> rho{1.0, 1.0};
    std::vector<double> vol{1.0, 1.0};
    double gamma = 0.0;
    std::string config_path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--dim", dim, "ambient dimension N (>= 2)");
        cmd->add_option("--rho", rho, "densities rho- rho+")->expected(2);
        cmd->add_option("--vol", vol, "weighted volumes V- V+ (V = rho * |Omega|)")->expected(2);
        cmd->add_option("--gamma", gamma, "interface cost gamma (>= 0)");
        cmd->add_option("--config", config_path,
                        "JSON file with fields N, rho_minus, rho_plus, V_minus, V_plus, gamma");
    }

    ProblemParams build(const CLI::App* cmd) const {
        ProblemParams p;
        if (!config_path.empty()) p = params_from_json(read_file(config_path));
        if (cmd->count("--dim")) p.dim = dim;
        if (cmd->count("--rho")) {
            p.rho_minus = rho[0];
            p.rho_plus = rho[1];
        }
        if (cmd->count("--vol")) {
            p.V_minus = vol[0];
            p.V_plus = vol[1];
        }
        if (cmd->count("--gamma")) p.gamma = gamma;
        p.validate();
        return p;
    }

    static std::string read_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
};

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        f << text;
    }
}

int run_sweep(const ProblemParams& base, const std::string& vary, double lo, double hi, int steps,
              const std::string& out_path, std::ostream& out) {
    if (steps < 2) throw std::runtime_error("sweep: steps must be >= 2");
    if (!(lo < hi)) throw std::runtime_error("sweep: need lo < hi");
    if (vary == "gamma") lo = std::max(lo, 0.0);  // gamma sweeps are clipped to gamma >= 0

    std::string csv =
        "swept_value,gamma_star,regime,alpha,beta,R_minus,R_plus,F_total,F_interface\n";
    for (int k = 0; k < steps; ++k) {
        const double v = lo + (hi - lo) * k / (steps - 1);
        ProblemParams p = base;
        if (vary == "gamma")
            p.gamma = v;
        else if (vary == "rho_ratio")
            p.rho_minus = v * p.rho_plus;
        else if (vary == "volume_ratio")
            p.V_minus = v * p.V_plus;
        else
            throw std::runtime_error("sweep: --vary must be gamma, rho_ratio or volume_ratio");
        const ClassificationResult r = classify(p);
        csv += format_double(v);
        csv += "," + format_double(r.threshold.gamma_star);
        csv += std::string(",") + regime_name(r.regime);
        csv += "," + format_double(r.minimizer.alpha);
        csv += "," + format_double(r.minimizer.beta);
        csv += "," + format_double(r.minimizer.R_minus);
        csv += "," + format_double(r.minimizer.R_plus);
        csv += "," + format_double(r.cost.total);
        csv += "," + format_double(r.cost.interface);
        csv += "\n";
    }
    emit(csv, out_path, out);
    return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"two-phase weighted isoperimetric problem: solve, classify and verify"};
    app.name("twophase");
    app.require_subcommand(1);

    ParamFlags solve_p, star_p, sweep_p, geom_p;
    std::string solve_out, solve_from_json;
    std::string star_out;
    std::string sweep_out, sweep_vary = "gamma";
    std::vector<double> sweep_range;
    std::string geom_out, geom_format = "svg";
    int geom_resolution = 128;
    std::uint64_t verify_seed = 1;
    int verify_draws = 50, verify_coarse = 128, verify_refine = 40;

    CLI::App* solve = app.add_subcommand("solve", "classify one instance and print JSON");
    solve_p.attach(solve);
    solve->add_option("--out", solve_out, "write the JSON here instead of stdout");
    solve->add_option("--from-json", solve_from_json,
                      "read the instance from a solve output (or params) JSON file");

    CLI::App* star = app.add_subcommand("gamma-star", "compute the threshold gamma* and print JSON");
    star_p.attach(star);
    star->add_option("--out", star_out, "write the JSON here instead of stdout");

    CLI::App* sweep = app.add_subcommand("sweep", "classify along a 1-parameter family, emit CSV");
    sweep_p.attach(sweep);
    sweep->add_option("--vary", sweep_vary, "swept parameter: gamma | rho_ratio | volume_ratio");
    sweep->add_option("--range", sweep_range, "lo hi steps")->expected(3);
    sweep->add_option("--out", sweep_out, "write the CSV here instead of stdout");

    CLI::App* verify = app.add_subcommand(
        "verify", "run the analytic-vs-brute-force oracle on a seeded random draw set");
    verify->add_option("--seed", verify_seed, "RNG seed for the draw set");
    verify->add_option("--draws", verify_draws, "number of random instances");
    verify->add_option("--coarse", verify_coarse, "oracle grid size per axis (>= 64)");
    verify->add_option("--refine", verify_refine, "oracle refinement iterations (>= 20)");

    CLI::App* geom = app.add_subcommand("export-geometry",
                                        "classify one instance and export its cross-section");
    geom_p.attach(geom);
    geom->add_option("--format", geom_format, "svg | csv");
    geom->add_option("--resolution", geom_resolution, "segments per half-generatrix (>= 8)");
    geom->add_option("--out", geom_out, "write here instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (solve->parsed()) {
            ProblemParams p;
            if (!solve_from_json.empty()) {
                p = params_from_json(ParamFlags::read_file(solve_from_json));
                p.validate();
            } else {
                p = solve_p.build(solve);
            }
            emit(to_json(classify(p)), solve_out, out);
            return 0;
        }
        if (star->parsed()) {
            emit(to_json(gamma_star(star_p.build(star))), star_out, out);
            return 0;
        }
        if (sweep->parsed()) {
            if (sweep_range.size() != 3)
                throw std::runtime_error("sweep: --range lo hi steps is required");
            return run_sweep(sweep_p.build(sweep), sweep_vary, sweep_range[0], sweep_range[1],
                             int(sweep_range[2]), sweep_out, out);
        }
        if (verify->parsed()) {
            if (verify_draws < 1) throw std::runtime_error("verify: --draws must be >= 1");
            int failures = 0;
            for (const ProblemParams& p : oracle::sample_problems(verify_seed, verify_draws)) {
                const oracle::OracleReport r = oracle::compare(p, verify_coarse, verify_refine);
                out << to_json(r) << "\n";
                if (!r.passed) ++failures;
            }
            out << "verify: " << (verify_draws - failures) << "/" << verify_draws << " passed\n";
            return failures == 0 ? 0 : 1;
        }
        if (geom->parsed()) {
            const ClassificationResult r = classify(geom_p.build(geom));
            const CrossSection cs = cross_section(r.minimizer, geom_resolution);
            if (geom_format == "svg")
                emit(cross_section_svg(cs), geom_out, out);
            else if (geom_format == "csv")
                emit(cross_section_csv(cs), geom_out, out);
            else
                throw std::runtime_error("export-geometry: --format must be svg or csv");
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n" << app.help();
    return 2;
}

int dispatch(const std::vector<std::string>& args) {
    return dispatch(args, std::cout, std::cerr);
}

}  // namespace twophase::cli
