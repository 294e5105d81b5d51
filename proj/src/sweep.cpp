#include "ghzsim/sweep.hpp"

#include "ghzsim/darkstate.hpp"
#include "ghzsim/dynamics.hpp"
#include "ghzsim/observables.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace ghzsim {

const char* name_of(SweepParameter p) {
    switch (p) {
    case SweepParameter::Tau:
        return "tau";
    case SweepParameter::Width:
        return "T";
    case SweepParameter::Omega0:
        return "omega0";
    case SweepParameter::Kappa:
        return "kappa";
    case SweepParameter::Gamma:
        return "gamma";
    case SweepParameter::KFiber:
        return "k";
    }
    return "?";
}

const char* name_of(Engine e) {
    return e == Engine::Schrodinger ? "schrodinger" : "lindblad";
}

SweepParameter sweep_parameter_from(const std::string& name) {
    for (SweepParameter p : {SweepParameter::Tau, SweepParameter::Width, SweepParameter::Omega0,
                             SweepParameter::Kappa, SweepParameter::Gamma, SweepParameter::KFiber})
        if (name == name_of(p))
            return p;
    throw std::invalid_argument("unknown sweep parameter: " + name);
}

Engine engine_from(const std::string& name) {
    for (Engine e : {Engine::Schrodinger, Engine::Lindblad})
        if (name == name_of(e))
            return e;
    throw std::invalid_argument("unknown engine: " + name);
}

double AxisSpec::value(int i) const {
    return min + (max - min) * i / (count - 1);
}

void SweepSpec::validate() const {
    if (x.count < 2 || y.count < 2)
        throw std::invalid_argument("sweep axes need at least 2 points");
    if (!(x.min <= x.max) || !(y.min <= y.max))
        throw std::invalid_argument("sweep axis range is inverted");
    if (!(dt > 0.0))
        throw std::invalid_argument("sweep dt must be positive");
}

SystemParams with_parameter(SystemParams params, SweepParameter which, double value) {
    switch (which) {
    case SweepParameter::Tau:
        params.tau = value;
        break;
    case SweepParameter::Width:
        params.width = value;
        break;
    case SweepParameter::Omega0:
        params.omega0 = value;
        break;
    case SweepParameter::Kappa:
        params.kappa = value;
        break;
    case SweepParameter::Gamma:
        params.gamma = value;
        break;
    case SweepParameter::KFiber:
        params.k_fiber = value;
        break;
    }
    return params;
}

SweepPoint evaluate_sweep_point(const SweepSpec& spec, double x, double y) {
    SweepPoint point;
    point.x = x;
    point.y = y;
    try {
        SystemParams p = with_parameter(spec.base, spec.x.param, x);
        p = with_parameter(p, spec.y.param, y);
        p.validate();
        const double t0 = spec.auto_start ? -(p.tau + p.width) : spec.t_start;
        const ComplexVector target = target_ghz(p);
        if (spec.engine == Engine::Schrodinger) {
            ComplexVector psi0 = ComplexVector::Zero(Basis::coherent(p).size());
            psi0[0] = 1.0;
            point.fidelity =
                fidelity_pure(schrodinger_final(psi0, p, t0, spec.eval_time, spec.dt), target);
        } else {
            ComplexMatrix rho0 =
                ComplexMatrix::Zero(Basis::dissipative(p).size(), Basis::dissipative(p).size());
            rho0(0, 0) = 1.0;
            point.fidelity =
                fidelity_mixed(lindblad_final(rho0, p, t0, spec.eval_time, spec.dt), target);
        }
    } catch (const std::exception& err) {
        point.fidelity = std::numeric_limits<double>::quiet_NaN();
        point.failure = err.what();
    }
    return point;
}

SweepResult run_sweep(const SweepSpec& spec, int workers) {
    spec.validate();
    const int nx = spec.x.count;
    const int ny = spec.y.count;

    SweepResult result;
    result.spec = spec;
    result.points.resize(static_cast<std::size_t>(nx) * ny);

    if (workers <= 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, ny);

    auto run_rows = [&](int first_row) {
        for (int row = first_row; row < ny; row += workers) {
            const double y = spec.y.value(row);
            for (int i = 0; i < nx; ++i)
                result.points[static_cast<std::size_t>(row) * nx + i] =
                    evaluate_sweep_point(spec, spec.x.value(i), y);
        }
    };

    if (workers == 1) {
        run_rows(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(run_rows, w);
        for (std::thread& t : pool)
            t.join();
    }
    return result;
}

BandSummary band_extract(const SweepResult& result, double threshold) {
    BandSummary band;
    band.ratio_min = std::numeric_limits<double>::quiet_NaN();
    band.ratio_max = std::numeric_limits<double>::quiet_NaN();
    for (const SweepPoint& point : result.points) {
        if (std::isnan(point.fidelity) || point.fidelity < threshold)
            continue;
        const double ratio = point.x / point.y;
        if (band.points == 0) {
            band.ratio_min = band.ratio_max = ratio;
        } else {
            band.ratio_min = std::min(band.ratio_min, ratio);
            band.ratio_max = std::max(band.ratio_max, ratio);
        }
        ++band.points;
    }
    return band;
}

} // namespace ghzsim
