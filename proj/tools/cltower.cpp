// cltower: command-line front end for theta/tower/phase evaluation and the
// verification suites.
//
// Exit codes: 0 success (and all checks passing for `verify`),
//             1 verification failure,
//             2 usage error,
//             3 domain or numeric error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "clausen/circular.hpp"
#include "clausen/generating.hpp"
#include "clausen/hierarchy.hpp"
#include "clausen/phase.hpp"
#include "clausen/theta.hpp"
#include "clausen/verification.hpp"

namespace {

struct GridSpec {
    double lo = 0.1;
    double hi = 0.9;
    int points = 81;
};

std::vector<double> grid_values(const GridSpec& grid) {
    std::vector<double> xs(static_cast<std::size_t>(grid.points));
    for (int j = 0; j < grid.points; ++j)
        xs[static_cast<std::size_t>(j)] = grid.lo + (grid.hi - grid.lo) * j / (grid.points - 1);
    return xs;
}

/// 17-significant-digit scientific form; round-trips doubles exactly.
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

/// Resolves --output against CLTOWER_OUT_DIR for relative paths.
std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("CLTOWER_OUT_DIR"))
            return std::filesystem::path(dir) / p;
    }
    return p;
}

int write_text(const std::optional<std::string>& output, const std::string& text) {
    if (!output) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(resolve_output(*output));
    if (!out) {
        std::cerr << "cltower: cannot open output file '" << *output << "'\n";
        return 3;
    }
    out << text;
    return 0;
}

clausen::Seed make_seed(const std::string& kind, double tau_re, double tau_im) {
    if (kind == "polylog") return clausen::Seed::polylog();
    if (kind == "circular") return clausen::Seed::circular();
    return clausen::Seed::elliptic(clausen::TauParameter(clausen::Complex(tau_re, tau_im)));
}

int cmd_theta(double tau_re, double tau_im, const GridSpec& grid, const std::string& format,
              const std::optional<std::string>& output) {
    const clausen::TauParameter tau(clausen::Complex(tau_re, tau_im));
    const std::vector<double> xs = grid_values(grid);
    const clausen::Complex norm = clausen::theta1_prime_zero_series(tau);
    const std::vector<double> args = clausen::unwrap_at_points(tau, xs);

    std::string text;
    if (format == "csv") {
        text += "x,re,im,abs,arg_unwrapped\n";
        for (std::size_t j = 0; j < xs.size(); ++j) {
            const clausen::Complex v =
                clausen::theta1_series(clausen::Complex(xs[j], 0.0), tau) / norm;
            text += num(xs[j]) + "," + num(v.real()) + "," + num(v.imag()) + "," +
                    num(std::abs(v)) + "," + num(args[j]) + "\n";
        }
    } else {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t j = 0; j < xs.size(); ++j) {
            const clausen::Complex v =
                clausen::theta1_series(clausen::Complex(xs[j], 0.0), tau) / norm;
            rows.push_back({xs[j], v.real(), v.imag(), std::abs(v), args[j]});
        }
        nlohmann::json j;
        j["columns"] = {"x", "re", "im", "abs", "arg_unwrapped"};
        j["rows"] = std::move(rows);
        text = j.dump(2) + "\n";
    }
    return write_text(output, text);
}

int cmd_tower(const std::string& seed_kind, int order, double tau_re, double tau_im,
              const GridSpec& grid, int resolution, const std::string& format,
              const std::optional<std::string>& output) {
    const clausen::Seed seed = make_seed(seed_kind, tau_re, tau_im);
    const double x_hi = std::max(grid.hi, 0.5);
    const clausen::Tower tower =
        clausen::build_tower(seed, std::max(order, 2), 0.0, x_hi, resolution);

    std::string text;
    if (format == "json") {
        nlohmann::json j = clausen::tower_to_json(tower);
        j["max_order"] = order; // orders the caller asked for
        text = j.dump(2) + "\n";
    } else {
        text += "x,n,re_F,im_F,A,B\n";
        for (double x : grid_values(grid)) {
            for (int n = 1; n <= order; ++n) {
                const clausen::Complex f = tower.eval(n, x);
                text += num(x) + "," + std::to_string(n) + "," + num(f.real()) + "," +
                        num(f.imag()) + "," + num(2.0 * f.real()) + "," + num(-2.0 * f.imag()) +
                        "\n";
            }
        }
    }
    return write_text(output, text);
}

int cmd_generating(const std::string& seed_kind, int order, double lambda, double tau_re,
                   double tau_im, const GridSpec& grid, bool paper_form, double fd_step,
                   const std::optional<std::string>& output) {
    const clausen::Seed seed = make_seed(seed_kind, tau_re, tau_im);
    const double x_hi = std::max(std::min(grid.hi + 0.01, 1.0 - clausen::kDomainMargin), 0.5);
    const clausen::Tower tower =
        clausen::build_tower(seed, std::max(order, 2), 0.0, x_hi, 32);
    const clausen::GeneratingSlice slice(tower, order, clausen::Complex(lambda, 0.0));

    std::string text = "w,lambda,abs_residual\n";
    for (double w : grid_values(grid)) {
        const clausen::Complex r = paper_form
                                       ? clausen::generating_residual_paper_form(slice, w, fd_step)
                                       : clausen::generating_residual(slice, w, fd_step);
        text += num(w) + "," + num(lambda) + "," + num(std::abs(r)) + "\n";
    }
    return write_text(output, text);
}

int cmd_verify(const std::string& suite, std::uint64_t rng_seed,
               const std::optional<std::string>& output) {
    clausen::SuiteConfig config;
    config.rng_seed = rng_seed;

    std::vector<std::string> to_run;
    if (suite == "all") {
        to_run = clausen::suite_names();
    } else {
        to_run.push_back(suite);
    }

    bool all_pass = true;
    nlohmann::json reports = nlohmann::json::array();
    for (const std::string& name : to_run) {
        const clausen::SuiteReport report = clausen::run_suite(name, config);
        all_pass = all_pass && report.overall_pass;
        reports.push_back(clausen::report_to_json(report));
    }
    nlohmann::json j;
    j["overall_pass"] = all_pass;
    j["reports"] = std::move(reports);
    const int rc = write_text(output, j.dump(2) + "\n");
    if (rc != 0) return rc;
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clausen-type hierarchies from circular and elliptic seeds"};
    app.require_subcommand(1);

    // shared option state
    double tau_re = 0.0, tau_im = 2.0;
    std::vector<double> grid_raw;
    std::string format = "csv";
    std::optional<std::string> output;
    std::string seed_kind = "circular";
    int order = 4;
    int resolution = 32;
    double lambda = 0.5;
    bool paper_form = false;
    double fd_step = 1e-4;
    std::string suite = "all";
    std::uint64_t rng_seed = clausen::SuiteConfig{}.rng_seed;

    auto add_tau = [&](CLI::App* cmd) {
        cmd->add_option("--tau-re", tau_re, "Re(tau)");
        cmd->add_option("--tau-im", tau_im, "Im(tau), must be >= 0.05");
    };
    auto add_grid = [&](CLI::App* cmd) {
        cmd->add_option("--grid", grid_raw, "grid as LO HI POINTS, inside [0,1)")
            ->expected(3);
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--output", output,
                        "output file (relative paths resolve against CLTOWER_OUT_DIR)");
    };

    CLI::App* theta = app.add_subcommand("theta", "normalized theta on a real grid");
    add_tau(theta);
    add_grid(theta);
    add_out(theta);
    theta->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    CLI::App* tower = app.add_subcommand("tower", "hierarchy levels F_n with CL/SL columns");
    tower->add_option("--seed", seed_kind)->check(CLI::IsMember({"polylog", "circular", "elliptic"}));
    tower->add_option("--n", order, "highest order");
    tower->add_option("--resolution", resolution, "initial interpolation degree");
    add_tau(tower);
    add_grid(tower);
    add_out(tower);
    tower->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    CLI::App* generating = app.add_subcommand("generating", "generating-ODE residual sweep");
    generating->add_option("--seed", seed_kind)
        ->check(CLI::IsMember({"polylog", "circular", "elliptic"}));
    generating->add_option("--n", order, "truncation order N");
    generating->add_option("--lambda", lambda, "deformation parameter");
    generating->add_flag("--paper-form", paper_form,
                         "sweep the uncorrected residual (negative control)");
    generating->add_option("--fd-step", fd_step, "central difference step");
    add_tau(generating);
    add_grid(generating);
    add_out(generating);

    CLI::App* verify = app.add_subcommand("verify", "run verification suites, JSON report");
    verify->add_option("--suite", suite, "suite name or 'all'");
    verify->add_option("--rng-seed", rng_seed, "seed for deterministic sampling");
    add_out(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    GridSpec grid;
    if (!grid_raw.empty()) {
        grid.lo = grid_raw[0];
        grid.hi = grid_raw[1];
        grid.points = static_cast<int>(grid_raw[2]);
    }
    const bool needs_grid = theta->parsed() || tower->parsed() || generating->parsed();
    if (needs_grid) {
        if (!(grid.lo >= 0.0 && grid.lo < grid.hi && grid.hi < 1.0 && grid.points >= 2)) {
            std::cerr << "cltower: --grid needs 0 <= LO < HI < 1 and POINTS >= 2\n";
            return 2;
        }
    }
    if ((tower->parsed() || generating->parsed()) && order < 1) {
        std::cerr << "cltower: --n must be >= 1\n";
        return 2;
    }
    if (generating->parsed() && order < 1) return 2;

    try {
        if (theta->parsed())
            return cmd_theta(tau_re, tau_im, grid, format, output);
        if (tower->parsed())
            return cmd_tower(seed_kind, order, tau_re, tau_im, grid, resolution, format, output);
        if (generating->parsed())
            return cmd_generating(seed_kind, order, lambda, tau_re, tau_im, grid, paper_form,
                                  fd_step, output);
        if (verify->parsed())
            return cmd_verify(suite, rng_seed, output);
    } catch (const clausen::ConfigError& e) {
        std::cerr << "cltower: " << e.what() << "\n";
        return 2;
    } catch (const clausen::Error& e) {
        std::cerr << "cltower: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "cltower: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
