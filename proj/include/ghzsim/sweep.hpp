#pragma once

#include "ghzsim/model.hpp"
#include "ghzsim/types.hpp"

#include <string>
#include <vector>

namespace ghzsim {

enum class SweepParameter { Tau, Width, Omega0, Kappa, Gamma, KFiber };
enum class Engine { Schrodinger, Lindblad };

const char* name_of(SweepParameter p);
const char* name_of(Engine e);
SweepParameter sweep_parameter_from(const std::string& name);
Engine engine_from(const std::string& name);

struct AxisSpec {
    SweepParameter param = SweepParameter::Tau;
    double min = 0.0;
    double max = 0.0;
    int count = 2;
    double value(int i) const;
};

struct SweepSpec {
    SystemParams base;
    AxisSpec x, y;
    Engine engine = Engine::Schrodinger;
    double eval_time = 300.0; // absolute t at which F is recorded
    double dt = 0.02;
    bool auto_start = true; // integrate from -(tau + width) of each point
    double t_start = 0.0;   // used when auto_start is false
    void validate() const;
};

struct SweepPoint {
    double x = 0.0;
    double y = 0.0;
    double fidelity = 0.0; // NaN on failure
    std::string failure;   // empty on success
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepPoint> points; // row-major, x fastest
};

SystemParams with_parameter(SystemParams params, SweepParameter which, double value);

// One grid point; integration failures are captured in the returned point,
// never thrown.
SweepPoint evaluate_sweep_point(const SweepSpec& spec, double x, double y);

// workers <= 0 means machine parallelism.  Output is identical for any
// worker count; rows are statically interleaved across threads.
SweepResult run_sweep(const SweepSpec& spec, int workers = 0);

struct BandSummary {
    double ratio_min = 0.0; // of x/y over points with fidelity >= threshold
    double ratio_max = 0.0;
    int points = 0; // 0 means no point met the threshold
};

BandSummary band_extract(const SweepResult& result, double threshold);

} // namespace ghzsim
