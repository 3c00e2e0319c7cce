#include "vpeuler/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "vpeuler/alt_model.hpp"
#include "vpeuler/errors.hpp"
#include "vpeuler/io.hpp"

namespace vpeuler {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitArgs = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumeric = 4;

struct Options {
    double ul = 0.0, rhol = 0.0, ur = 0.0, rhor = 0.0;
    std::vector<double> eps;
    std::string model = "base";
    double t = 0.0;
    double x_min = 0.0, x_max = 0.0;
    int n = 0;
    double cfl = 0.9;
    std::string out_path;
    std::string format = "csv";
};

void add_data_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--ul", o.ul, "left velocity u_l")->required();
    cmd->add_option("--rhol", o.rhol, "left density rho_l (> 0)")->required();
    cmd->add_option("--ur", o.ur, "right velocity u_r")->required();
    cmd->add_option("--rhor", o.rhor, "right density rho_r (> 0)")->required();
}

void add_output_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--out", o.out_path, "output path (default: stdout)");
    cmd->add_option("--format", o.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

void add_eps_flag(CLI::App* cmd, Options& o, bool repeatable) {
    auto* opt = cmd->add_option(
        "--eps", o.eps,
        repeatable ? "perturbation strength (repeatable, strictly decreasing)"
                   : "perturbation strength");
    opt->required();
    if (!repeatable) opt->expected(1);
}

void add_grid_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--t", o.t, "sampling time (> 0)")->required();
    cmd->add_option("--xmin", o.x_min, "left edge of the x window")->required();
    cmd->add_option("--xmax", o.x_max, "right edge of the x window")->required();
    cmd->add_option("--n", o.n, "number of points / cells")->required();
}

// argument-level validation shared by all commands (exit 2 on failure)
void validate_common(const Options& o, bool needs_decreasing_eps) {
    if (!(o.rhol > 0.0)) {
        throw CLI::ValidationError("--rhol", "must be positive (rho_l > 0)");
    }
    if (!(o.rhor > 0.0)) {
        throw CLI::ValidationError("--rhor", "must be positive (rho_r > 0)");
    }
    for (double e : o.eps) {
        if (!(e > 0.0)) {
            throw CLI::ValidationError("--eps", "must be positive");
        }
    }
    if (needs_decreasing_eps) {
        for (std::size_t i = 0; i + 1 < o.eps.size(); ++i) {
            if (!(o.eps[i + 1] < o.eps[i])) {
                throw CLI::ValidationError(
                    "--eps", "list must be strictly decreasing");
            }
        }
    }
}

RiemannData data_of(const Options& o) {
    return RiemannData{State{o.ul, o.rhol}, State{o.ur, o.rhor}};
}

Meta base_meta(const Options& o, const std::string& command) {
    Meta m{{"command", command},
           {"model", o.model},
           {"ul", format_double(o.ul)},
           {"rhol", format_double(o.rhol)},
           {"ur", format_double(o.ur)},
           {"rhor", format_double(o.rhor)}};
    for (double e : o.eps) m.emplace_back("eps", format_double(e));
    return m;
}

Meta grid_meta(const Options& o, const std::string& command, bool with_cfl) {
    Meta m = base_meta(o, command);
    m.emplace_back("t", format_double(o.t));
    m.emplace_back("xmin", format_double(o.x_min));
    m.emplace_back("xmax", format_double(o.x_max));
    m.emplace_back("n", std::to_string(o.n));
    if (with_cfl) m.emplace_back("cfl", format_double(o.cfl));
    return m;
}

OutputFormat format_of(const Options& o) {
    return o.format == "json" ? OutputFormat::json : OutputFormat::csv;
}

// Runs `body` with the chosen output stream; maps failures to exit codes.
int with_output(const Options& o, std::ostream& out, std::ostream& err,
                const std::function<void(std::ostream&)>& body) {
    std::ofstream file;
    std::ostream* os = &out;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file) {
            err << "error: cannot open output path '" << o.out_path << "'\n";
            return kExitIo;
        }
        os = &file;
    }
    try {
        body(*os);
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::domain_error& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    }
    os->flush();
    if (os == &file && !file) {
        err << "error: write to '" << o.out_path << "' failed\n";
        return kExitIo;
    }
    return kExitOk;
}

WaveFan solve_for_model(const Options& o, const RiemannData& data) {
    if (o.model == "alt") return alt_solve(data, o.eps.at(0));
    return solve(data, o.eps.at(0));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{
        "Exact Riemann solutions, vanishing-perturbation limits and a "
        "finite-volume reference for 1-D pressureless-gas approximations"};
    app.require_subcommand(1);
    Options o;

    CLI::App* c_solve = app.add_subcommand("solve", "wave structure of the Riemann solution");
    add_data_flags(c_solve, o);
    add_eps_flag(c_solve, o, false);
    c_solve->add_option("--model", o.model, "base (scaled pressure) or alt (shifted flux)")
        ->check(CLI::IsMember({"base", "alt"}));
    add_output_flags(c_solve, o);

    CLI::App* c_sample = app.add_subcommand("sample", "sampled (x, u, rho) profile at fixed t");
    add_data_flags(c_sample, o);
    add_eps_flag(c_sample, o, false);
    c_sample->add_option("--model", o.model, "base or alt")
        ->check(CLI::IsMember({"base", "alt"}));
    add_grid_flags(c_sample, o);
    add_output_flags(c_sample, o);

    CLI::App* c_sweep = app.add_subcommand("sweep", "two-shock eps-sweep table (u_l > u_r)");
    add_data_flags(c_sweep, o);
    add_eps_flag(c_sweep, o, true);
    add_output_flags(c_sweep, o);

    CLI::App* c_limit = app.add_subcommand("limit", "vanishing-perturbation limit descriptor");
    add_data_flags(c_limit, o);
    c_limit->add_option("--model", o.model, "base or alt")
        ->check(CLI::IsMember({"base", "alt"}));
    add_output_flags(c_limit, o);

    CLI::App* c_entropy = app.add_subcommand("entropy", "entropy-production sweep table (u_l > u_r)");
    add_data_flags(c_entropy, o);
    add_eps_flag(c_entropy, o, true);
    add_output_flags(c_entropy, o);

    CLI::App* c_alt = app.add_subcommand("alt", "shifted-flux model solution");
    add_data_flags(c_alt, o);
    add_eps_flag(c_alt, o, false);
    add_output_flags(c_alt, o);

    CLI::App* c_oracle = app.add_subcommand("oracle", "Lax-Friedrichs reference run vs the exact fan");
    add_data_flags(c_oracle, o);
    add_eps_flag(c_oracle, o, false);
    add_grid_flags(c_oracle, o);
    c_oracle->add_option("--cfl", o.cfl, "CFL number in (0, 1)");
    add_output_flags(c_oracle, o);

    try {
        std::vector<std::string> argv(args);
        argv.insert(argv.begin(), "vpeuler");
        std::vector<const char*> cargv;
        cargv.reserve(argv.size());
        for (const auto& s : argv) cargv.push_back(s.c_str());
        app.parse(static_cast<int>(cargv.size()), cargv.data());

        const bool list_eps = c_sweep->parsed() || c_entropy->parsed();
        validate_common(o, list_eps);
        if (c_sample->parsed() || c_oracle->parsed()) {
            if (!(o.t > 0.0)) {
                throw CLI::ValidationError("--t", "must be positive");
            }
            if (!(o.x_max > o.x_min)) {
                throw CLI::ValidationError("--xmax", "must exceed --xmin");
            }
        }
        if (c_sample->parsed() && o.n < 2) {
            throw CLI::ValidationError("--n", "need at least 2 sample points");
        }
        if (c_oracle->parsed()) {
            if (o.n < 16) {
                throw CLI::ValidationError("--n", "need at least 16 cells");
            }
            if (!(o.cfl > 0.0) || !(o.cfl < 1.0)) {
                throw CLI::ValidationError("--cfl", "must lie in (0, 1)");
            }
            if (!(o.x_min < 0.0) || !(o.x_max > 0.0)) {
                throw CLI::ValidationError("--xmin",
                                           "window must contain x = 0");
            }
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);  // prints help, returns 0
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitArgs;
    }

    const RiemannData data = data_of(o);
    const OutputFormat fmt = format_of(o);

    if (c_solve->parsed()) {
        return with_output(o, out, err, [&](std::ostream& os) {
            emit_waves(os, solve_for_model(o, data), fmt, base_meta(o, "solve"));
        });
    }
    if (c_sample->parsed()) {
        return with_output(o, out, err, [&](std::ostream& os) {
            const SampleGrid grid{o.t, o.x_min, o.x_max, o.n};
            emit_profile(os, solve_for_model(o, data), grid, fmt,
                         grid_meta(o, "sample", false));
        });
    }
    if (c_sweep->parsed()) {
        return with_output(o, out, err, [&](std::ostream& os) {
            emit_sweep(os, epsilon_sweep(data, o.eps), fmt,
                       base_meta(o, "sweep"));
        });
    }
    if (c_limit->parsed()) {
        return with_output(o, out, err, [&](std::ostream& os) {
            const LimitSolution lim =
                o.model == "alt" ? alt_limit(data) : predicted_limit(data);
            emit_limit(os, lim, fmt, base_meta(o, "limit"));
        });
    }
    if (c_entropy->parsed()) {
        return with_output(o, out, err, [&](std::ostream& os) {
            emit_entropy(os, entropy_limit_sweep(data, o.eps), fmt,
                         base_meta(o, "entropy"));
        });
    }
    if (c_alt->parsed()) {
        return with_output(o, out, err, [&](std::ostream& os) {
            emit_waves(os, alt_solve(data, o.eps.at(0)), fmt,
                       base_meta(o, "alt"));
        });
    }
    if (c_oracle->parsed()) {
        return with_output(o, out, err, [&](std::ostream& os) {
            const Grid1D grid{o.x_min, o.x_max, o.n, o.cfl, o.t};
            const double eps = o.eps.at(0);
            const GridSolution sol = lax_friedrichs_run(data, eps, grid);
            const WaveFan exact = solve(data, eps);
            emit_oracle(os, sol, exact, fmt, grid_meta(o, "oracle", true));
        });
    }
    err << "error: no command given\n";
    return kExitArgs;
}

}  // namespace vpeuler
