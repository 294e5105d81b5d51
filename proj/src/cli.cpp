#include "ghzsim/cli.hpp"

#include "ghzsim/config.hpp"
#include "ghzsim/darkstate.hpp"
#include "ghzsim/dynamics.hpp"
#include "ghzsim/io.hpp"
#include "ghzsim/observables.hpp"
#include "ghzsim/sweep.hpp"
#include "ghzsim/validate.hpp"
#include "ghzsim/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace ghzsim {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_numerical = 2;
constexpr int exit_validation = 3;

// The preset must shape the defaults before CLI11 parses, so --preset and the
// subcommand name are picked out of argv first.
struct Prescan {
    std::string subcommand;
    std::string preset;
};

Prescan prescan(int argc, const char* const* argv) {
    Prescan out;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (out.subcommand.empty())
            for (const char* sub : {"evolve", "lindblad", "darkstate", "sweep", "validate"})
                if (arg == sub)
                    out.subcommand = sub;
        if (arg == "--preset" && i + 1 < argc)
            out.preset = argv[i + 1];
        else if (arg.rfind("--preset=", 0) == 0)
            out.preset = arg.substr(9);
    }
    return out;
}

struct Options {
    RunConfig cfg;
    double gamma0 = 0.0;
    std::string engine = "schrodinger";
    std::string x_param = "tau";
    std::string y_param = "T";
    CLI::Option* t_start_opt = nullptr;
    CLI::Option* auto_start_opt = nullptr;
    CLI::Option* gamma0_opt = nullptr;
    CLI::Option* k2pi_opt = nullptr;
};

void add_atom_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--n", cfg.params.n_atoms, "number of atoms (odd, >= 3)")
        ->capture_default_str();
    cmd->add_option("--v", cfg.params.v, "cavity-fiber coupling, units of g")
        ->capture_default_str();
    cmd->add_option("--omega0", cfg.params.omega0, "peak Rabi frequency, units of g")
        ->capture_default_str();
    cmd->add_option("--alpha", cfg.params.alpha, "mixing angle, radians")->capture_default_str();
    cmd->add_option("--tau", cfg.params.tau, "pulse-center offset, units of 1/g")
        ->capture_default_str();
    cmd->add_option("--T", cfg.params.width, "pulse width, units of 1/g")->capture_default_str();
    cmd->add_option("--phi1", cfg.params.phi1, "first drive phase, radians")
        ->capture_default_str();
    cmd->add_option("--phiN", cfg.params.phiN, "last drive phase, radians")
        ->capture_default_str();
}

void add_rate_options(CLI::App* cmd, Options& opt) {
    auto* gamma = cmd->add_option("--gamma", opt.cfg.params.gamma,
                                  "spontaneous emission per ground-level branch, units of g")
                      ->capture_default_str();
    opt.gamma0_opt = cmd->add_option("--gamma0", opt.gamma0,
                                     "total spontaneous emission per atom; branches get a third");
    opt.gamma0_opt->excludes(gamma);
    gamma->excludes(opt.gamma0_opt);
    cmd->add_option("--kappa", opt.cfg.params.kappa, "cavity decay per mode, units of g")
        ->capture_default_str();
    cmd->add_option("--k", opt.cfg.params.k_fiber, "fiber decay per mode, units of g")
        ->capture_default_str();
}

void add_window_options(CLI::App* cmd, Options& opt, bool with_dt) {
    opt.t_start_opt =
        cmd->add_option("--t-start", opt.cfg.t_start, "integration start, units of 1/g")
            ->capture_default_str();
    opt.auto_start_opt = cmd->add_flag("--auto-start", opt.cfg.auto_start,
                                       "start at -(tau + T) instead of --t-start");
    opt.t_start_opt->excludes(opt.auto_start_opt);
    opt.auto_start_opt->excludes(opt.t_start_opt);
    cmd->add_option("--t-end", opt.cfg.t_end, "integration end, units of 1/g")
        ->capture_default_str();
    if (with_dt)
        cmd->add_option("--dt", opt.cfg.dt, "integrator step, units of 1/g")
            ->capture_default_str();
    cmd->add_option("--sample-spacing", opt.cfg.sample_spacing, "sample spacing, units of 1/g")
        ->capture_default_str();
}

void add_io_options(CLI::App* cmd, RunConfig& cfg, const std::string& default_output) {
    cfg.output = default_output;
    auto* o = cmd->add_option("--output,-o", cfg.output, "output CSV path; stdout if empty");
    if (!default_output.empty())
        o->capture_default_str();
    cmd->add_option("--preset", cfg.preset, "named parameter preset");
}

void finish_common(Options& opt, const std::string& prescanned_preset) {
    // Presets shape defaults before parsing, so one arriving via the config
    // file would silently skip that step; reject it instead.
    if (opt.cfg.preset != prescanned_preset)
        throw std::invalid_argument("--preset must be given on the command line, "
                                    "not in a config file");
    if (opt.t_start_opt->count() > 0)
        opt.cfg.auto_start = false;
    if (opt.gamma0_opt != nullptr && opt.gamma0_opt->count() > 0) {
        opt.cfg.params.gamma = opt.gamma0 / 3.0;
        opt.cfg.gamma_note = "per-branch gamma derived as a third of the quoted total";
    }
}

std::unique_ptr<std::ofstream> open_output(const std::string& path, std::ostream*& out) {
    if (path.empty()) {
        out = &std::cout;
        return nullptr;
    }
    auto file = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file)
        throw std::runtime_error("cannot open " + path + " for writing");
    out = file.get();
    return file;
}

int run_trace(Options& opt, const std::string& sub) {
    RunConfig& cfg = opt.cfg;
    cfg.params.validate();
    const double t0 = cfg.resolved_t_start();

    std::vector<TraceRow> rows;
    if (sub == "evolve") {
        ComplexVector psi0 = ComplexVector::Zero(Basis::coherent(cfg.params).size());
        psi0[0] = 1.0;
        rows = trace_rows(
            propagate_schrodinger(psi0, cfg.params, t0, cfg.t_end, cfg.dt, cfg.sample_spacing),
            cfg.params);
    } else {
        const Index dim = Basis::dissipative(cfg.params).size();
        ComplexMatrix rho0 = ComplexMatrix::Zero(dim, dim);
        rho0(0, 0) = 1.0;
        rows = trace_rows(
            propagate_lindblad(rho0, cfg.params, t0, cfg.t_end, cfg.dt, cfg.sample_spacing),
            cfg.params);
    }

    std::ostream* out = nullptr;
    const auto file = open_output(cfg.output, out);
    write_trace_csv(*out, rows, cfg.params.n_atoms, comment_lines(cfg, sub));
    out->flush();
    return exit_ok;
}

int run_darkstate(Options& opt) {
    RunConfig& cfg = opt.cfg;
    cfg.params.validate();
    const auto rows =
        dark_trace(cfg.params, cfg.resolved_t_start(), cfg.t_end, cfg.sample_spacing);
    std::ostream* out = nullptr;
    const auto file = open_output(cfg.output, out);
    write_dark_csv(*out, rows, cfg.params.n_atoms, comment_lines(cfg, "darkstate"));
    out->flush();
    return exit_ok;
}

int run_sweep_cmd(Options& opt) {
    RunConfig& cfg = opt.cfg;
    cfg.params.validate();
    cfg.x_axis.param = sweep_parameter_from(opt.x_param);
    cfg.y_axis.param = sweep_parameter_from(opt.y_param);
    cfg.engine = engine_from(opt.engine);

    const SweepResult result = run_sweep(sweep_spec_from(cfg), cfg.workers);

    std::vector<std::string> failures;
    for (const SweepPoint& point : result.points)
        if (!point.failure.empty())
            failures.push_back("x = " + format_number(point.x) + ", y = " +
                               format_number(point.y) + ": " + point.failure);

    std::ostream* out = nullptr;
    const auto file = open_output(cfg.output, out);
    write_sweep_csv(*out, result);
    out->flush();
    if (!cfg.output.empty())
        write_text_file(cfg.output + ".meta.json", metadata_json(cfg, "sweep", failures));
    if (!failures.empty()) {
        std::cerr << failures.size() << " of " << result.points.size()
                  << " grid points failed; see metadata\n";
        return exit_numerical;
    }
    return exit_ok;
}

int run_validate_cmd(int n_atoms, double dt) {
    bool all_passed = true;
    for (const CheckResult& r : run_validation(n_atoms, dt)) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty())
            std::cout << ": " << r.detail;
        std::cout << "\n";
        all_passed = all_passed && r.passed;
    }
    std::cout << (all_passed ? "all checks passed\n" : "validation failed\n");
    return all_passed ? exit_ok : exit_validation;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Adiabatic GHZ-state preparation in a fiber-coupled cavity chain"};
    app.set_version_flag("--version", version_string);
    app.require_subcommand(1);
    // Config files are processed by the root parser only; subcommands get
    // fallthrough below so the flag may follow the subcommand name.
    app.set_config("--config", "",
                   "TOML file; keys mirror the flags of the chosen subcommand, "
                   "placed in a [subcommand] section");

    Options evolve_opt, lindblad_opt, dark_opt, sweep_opt;
    int validate_n = 3;
    double validate_dt = 0.01;
    bool k_with_2pi = false;

    const Prescan pre = prescan(argc, argv);
    if (!pre.preset.empty() && !pre.subcommand.empty()) {
        try {
            Options* target = pre.subcommand == "evolve"     ? &evolve_opt
                              : pre.subcommand == "lindblad" ? &lindblad_opt
                              : pre.subcommand == "darkstate" ? &dark_opt
                              : pre.subcommand == "sweep"     ? &sweep_opt
                                                              : nullptr;
            if (target == nullptr)
                throw std::invalid_argument("preset does not apply to " + pre.subcommand);
            apply_preset(pre.preset, pre.subcommand, target->cfg);
        } catch (const std::exception& err) {
            std::cerr << "error: " << err.what() << "\n";
            return exit_usage;
        }
    }

    CLI::App* evolve = app.add_subcommand("evolve", "closed-system trace to CSV");
    evolve->fallthrough();
    add_atom_options(evolve, evolve_opt.cfg);
    add_window_options(evolve, evolve_opt, true);
    add_io_options(evolve, evolve_opt.cfg, "");

    CLI::App* lindblad = app.add_subcommand("lindblad", "open-system trace to CSV");
    lindblad->fallthrough();
    add_atom_options(lindblad, lindblad_opt.cfg);
    add_rate_options(lindblad, lindblad_opt);
    add_window_options(lindblad, lindblad_opt, true);
    add_io_options(lindblad, lindblad_opt.cfg, "");
    lindblad_opt.k2pi_opt = lindblad->add_flag(
        "--k-with-2pi", k_with_2pi, "physical preset only: put the 2 pi on the fiber rate too");

    CLI::App* darkstate = app.add_subcommand("darkstate", "instantaneous dark-state trace to CSV");
    darkstate->fallthrough();
    add_atom_options(darkstate, dark_opt.cfg);
    add_window_options(darkstate, dark_opt, false);
    add_io_options(darkstate, dark_opt.cfg, "");

    CLI::App* sweep = app.add_subcommand("sweep", "2-D fidelity grid to CSV plus metadata JSON");
    sweep->fallthrough();
    add_atom_options(sweep, sweep_opt.cfg);
    add_rate_options(sweep, sweep_opt);
    sweep->add_option("--x-param", sweep_opt.x_param, "tau|T|omega0|kappa|gamma|k")
        ->capture_default_str();
    sweep->add_option("--x-min", sweep_opt.cfg.x_axis.min)->capture_default_str();
    sweep->add_option("--x-max", sweep_opt.cfg.x_axis.max)->capture_default_str();
    sweep->add_option("--x-count", sweep_opt.cfg.x_axis.count)->capture_default_str();
    sweep->add_option("--y-param", sweep_opt.y_param, "tau|T|omega0|kappa|gamma|k")
        ->capture_default_str();
    sweep->add_option("--y-min", sweep_opt.cfg.y_axis.min)->capture_default_str();
    sweep->add_option("--y-max", sweep_opt.cfg.y_axis.max)->capture_default_str();
    sweep->add_option("--y-count", sweep_opt.cfg.y_axis.count)->capture_default_str();
    sweep->add_option("--engine", sweep_opt.engine, "schrodinger|lindblad")
        ->check(CLI::IsMember({"schrodinger", "lindblad"}))
        ->capture_default_str();
    sweep->add_option("--eval-time", sweep_opt.cfg.eval_time, "absolute t where F is recorded")
        ->capture_default_str();
    sweep->add_option("--dt", sweep_opt.cfg.sweep_dt, "integrator step for grid points")
        ->capture_default_str();
    sweep->add_option("--workers", sweep_opt.cfg.workers, "thread count; 0 = machine")
        ->capture_default_str();
    sweep_opt.t_start_opt =
        sweep->add_option("--t-start", sweep_opt.cfg.t_start, "fixed start instead of -(tau+T)");
    sweep_opt.auto_start_opt =
        sweep->add_flag("--auto-start", sweep_opt.cfg.auto_start, "start at -(tau + T)");
    sweep_opt.t_start_opt->excludes(sweep_opt.auto_start_opt);
    sweep_opt.auto_start_opt->excludes(sweep_opt.t_start_opt);
    add_io_options(sweep, sweep_opt.cfg, "sweep.csv");

    CLI::App* validate = app.add_subcommand("validate", "run the invariant suite");
    validate->fallthrough();
    validate->add_option("--n", validate_n, "atom count for structural checks")
        ->capture_default_str();
    validate->add_option("--dt", validate_dt, "integrator step for dynamical checks")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (evolve->parsed()) {
            finish_common(evolve_opt, pre.preset);
            return run_trace(evolve_opt, "evolve");
        }
        if (lindblad->parsed()) {
            finish_common(lindblad_opt, pre.preset);
            if (lindblad_opt.k2pi_opt->count() > 0) {
                if (lindblad_opt.cfg.preset != "physical")
                    throw std::invalid_argument("--k-with-2pi needs --preset physical");
                lindblad_opt.cfg.params.k_fiber = physical_k_fiber(true);
            }
            return run_trace(lindblad_opt, "lindblad");
        }
        if (darkstate->parsed()) {
            finish_common(dark_opt, pre.preset);
            return run_darkstate(dark_opt);
        }
        if (sweep->parsed()) {
            finish_common(sweep_opt, pre.preset);
            return run_sweep_cmd(sweep_opt);
        }
        if (validate->parsed())
            return run_validate_cmd(validate_n, validate_dt);
    } catch (const IntegrationQualityError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_numerical;
    } catch (const DegenerateDarkSpaceError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_numerical;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace ghzsim
