#include "ghzsim/config.hpp"

#include "ghzsim/io.hpp"
#include "ghzsim/version.hpp"

#include <json.hpp>

#include <initializer_list>
#include <stdexcept>

namespace ghzsim {

std::vector<std::string> preset_names() {
    return {"fig3", "fig4", "fig5a", "fig5b", "fig6", "fig7", "physical"};
}

double physical_k_fiber(bool with_2pi) {
    return with_2pi ? 0.152 / 75.0 : 0.152 / (2.0 * pi * 75.0);
}

void apply_preset(const std::string& name, const std::string& subcommand, RunConfig& cfg) {
    auto require = [&](std::initializer_list<const char*> allowed) {
        for (const char* s : allowed)
            if (subcommand == s)
                return;
        throw std::invalid_argument("preset " + name + " does not apply to " + subcommand);
    };
    auto sweep_preset = [&](AxisSpec x, AxisSpec y, Engine engine) {
        require({"sweep"});
        cfg.x_axis = x;
        cfg.y_axis = y;
        cfg.engine = engine;
        cfg.eval_time = 300.0;
        cfg.sweep_dt = 0.02;
        cfg.auto_start = true;
    };

    cfg.preset = name;
    if (name == "fig3") {
        require({"evolve", "lindblad", "darkstate"});
        cfg.auto_start = true; // integration begins at -(tau + width) = -130
        cfg.t_end = 170.0;
        cfg.dt = default_dt;
        cfg.sample_spacing = default_sample_spacing;
    } else if (name == "fig4") {
        sweep_preset({SweepParameter::Tau, 10.0, 130.0, 41}, {SweepParameter::Width, 30.0, 160.0, 41},
                     Engine::Schrodinger);
    } else if (name == "fig5a") {
        sweep_preset({SweepParameter::Omega0, 0.02, 0.3, 41}, {SweepParameter::Kappa, 0.0, 0.05, 41},
                     Engine::Lindblad);
    } else if (name == "fig5b") {
        sweep_preset({SweepParameter::Omega0, 0.02, 0.3, 41}, {SweepParameter::Gamma, 0.0, 0.05, 41},
                     Engine::Lindblad);
    } else if (name == "fig6") {
        sweep_preset({SweepParameter::Kappa, 0.0, 0.1, 41}, {SweepParameter::KFiber, 0.0, 0.1, 41},
                     Engine::Lindblad);
    } else if (name == "fig7") {
        sweep_preset({SweepParameter::Kappa, 0.0, 0.05, 41}, {SweepParameter::Gamma, 0.0, 0.05, 41},
                     Engine::Lindblad);
    } else if (name == "physical") {
        require({"lindblad"});
        cfg.auto_start = true;
        cfg.t_end = 300.0;
        cfg.params.kappa = 3.5 / 75.0;
        cfg.params.gamma = 2.62 / 75.0 / 3.0; // per branch
        cfg.params.k_fiber = physical_k_fiber(false);
    } else {
        throw std::invalid_argument("unknown preset: " + name);
    }
}

SweepSpec sweep_spec_from(const RunConfig& cfg) {
    SweepSpec spec;
    spec.base = cfg.params;
    spec.x = cfg.x_axis;
    spec.y = cfg.y_axis;
    spec.engine = cfg.engine;
    spec.eval_time = cfg.eval_time;
    spec.dt = cfg.sweep_dt;
    spec.auto_start = cfg.auto_start;
    spec.t_start = cfg.t_start;
    return spec;
}

namespace {

nlohmann::json params_json(const SystemParams& p) {
    return {{"n_atoms", p.n_atoms}, {"v", p.v},           {"omega0", p.omega0},
            {"alpha", p.alpha},     {"tau", p.tau},       {"T", p.width},
            {"phi1", p.phi1},       {"phiN", p.phiN},     {"kappa", p.kappa},
            {"k", p.k_fiber},       {"gamma", p.gamma}};
}

nlohmann::json axis_json(const AxisSpec& axis) {
    return {{"param", name_of(axis.param)}, {"min", axis.min}, {"max", axis.max},
            {"count", axis.count}};
}

} // namespace

std::string metadata_json(const RunConfig& cfg, const std::string& subcommand,
                          const std::vector<std::string>& failures) {
    nlohmann::json j;
    j["version"] = version_string;
    j["subcommand"] = subcommand;
    j["preset"] = cfg.preset;
    j["params"] = params_json(cfg.params);
    j["gamma_convention"] = "per-branch";
    if (!cfg.gamma_note.empty())
        j["gamma_note"] = cfg.gamma_note;

    if (subcommand == "sweep") {
        j["x_axis"] = axis_json(cfg.x_axis);
        j["y_axis"] = axis_json(cfg.y_axis);
        j["engine"] = name_of(cfg.engine);
        j["eval_time"] = cfg.eval_time;
        j["dt"] = cfg.sweep_dt;
        j["auto_start"] = cfg.auto_start;
        if (!cfg.auto_start)
            j["t_start"] = cfg.t_start;
        j["workers"] = cfg.workers;
    } else {
        j["t_start"] = cfg.resolved_t_start();
        j["t_end"] = cfg.t_end;
        j["auto_start"] = cfg.auto_start;
        if (subcommand != "darkstate")
            j["dt"] = cfg.dt;
        j["sample_spacing"] = cfg.sample_spacing;
    }
    j["failures"] = failures;
    return j.dump(2) + "\n";
}

std::vector<std::string> comment_lines(const RunConfig& cfg, const std::string& subcommand) {
    const SystemParams& p = cfg.params;
    std::vector<std::string> lines;
    lines.push_back(std::string("ghzsim ") + version_string);
    lines.push_back("subcommand = " + subcommand);
    if (!cfg.preset.empty())
        lines.push_back("preset = " + cfg.preset);
    lines.push_back("n_atoms = " + std::to_string(p.n_atoms));
    lines.push_back("v = " + format_number(p.v));
    lines.push_back("omega0 = " + format_number(p.omega0));
    lines.push_back("alpha = " + format_number(p.alpha));
    lines.push_back("tau = " + format_number(p.tau));
    lines.push_back("T = " + format_number(p.width));
    lines.push_back("phi1 = " + format_number(p.phi1));
    lines.push_back("phiN = " + format_number(p.phiN));
    lines.push_back("kappa = " + format_number(p.kappa));
    lines.push_back("k = " + format_number(p.k_fiber));
    lines.push_back("gamma = " + format_number(p.gamma) + " (per branch)");
    if (!cfg.gamma_note.empty())
        lines.push_back("gamma_note = " + cfg.gamma_note);
    lines.push_back("t_start = " + format_number(cfg.resolved_t_start()));
    lines.push_back("t_end = " + format_number(cfg.t_end));
    if (subcommand != "darkstate")
        lines.push_back("dt = " + format_number(cfg.dt));
    lines.push_back("sample_spacing = " + format_number(cfg.sample_spacing));
    return lines;
}

} // namespace ghzsim
