#pragma once

#include "ghzsim/dynamics.hpp"
#include "ghzsim/model.hpp"
#include "ghzsim/sweep.hpp"

#include <string>
#include <vector>

namespace ghzsim {

struct RunConfig {
    SystemParams params;
    double t_start = 0.0;
    double t_end = 300.0;
    double dt = default_dt;
    double sample_spacing = default_sample_spacing;
    bool auto_start = false; // start at -(tau + width) instead of t_start

    AxisSpec x_axis{SweepParameter::Tau, 10.0, 130.0, 41};
    AxisSpec y_axis{SweepParameter::Width, 30.0, 160.0, 41};
    Engine engine = Engine::Schrodinger;
    double eval_time = 300.0;
    double sweep_dt = 0.02;
    int workers = 0;

    std::string output;
    std::string preset;
    std::string gamma_note; // set when gamma came from a total-rate reading

    double resolved_t_start() const {
        return auto_start ? -(params.tau + params.width) : t_start;
    }
};

std::vector<std::string> preset_names();

// Overwrites the fields a preset pins; flags and config files may override
// afterwards.  Throws std::invalid_argument for unknown names or presets that
// do not apply to the given subcommand.
void apply_preset(const std::string& name, const std::string& subcommand, RunConfig& cfg);

SweepSpec sweep_spec_from(const RunConfig& cfg);

// Fiber decay for the physical preset: the quoted megahertz value taken as a
// plain rate (default) or as a 2 pi angular frequency like the other rates.
double physical_k_fiber(bool with_2pi);

std::string metadata_json(const RunConfig& cfg, const std::string& subcommand,
                          const std::vector<std::string>& failures);
std::vector<std::string> comment_lines(const RunConfig& cfg, const std::string& subcommand);

} // namespace ghzsim
