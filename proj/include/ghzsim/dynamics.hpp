#pragma once

#include "ghzsim/hamiltonian.hpp"
#include "ghzsim/model.hpp"
#include "ghzsim/types.hpp"

#include <vector>

namespace ghzsim {

inline constexpr double default_dt = 0.005;           // in 1/g
inline constexpr double default_sample_spacing = 0.5; // in 1/g

struct PureTrajectory {
    std::vector<double> times;
    std::vector<ComplexVector> states;
    double dt = 0.0;
    double sample_spacing = 0.0;
};

struct DensityTrajectory {
    std::vector<double> times;
    std::vector<ComplexMatrix> states;
    double dt = 0.0;
    double sample_spacing = 0.0;
};

// One decay channel as a matrix on the dissipative basis.  In the
// single-excitation sector every channel has exactly one matrix element.
struct JumpOperator {
    JumpSpec spec;
    double rate = 0.0;
    Index row = 0;
    Index col = 0;
    Index dim = 0;
    ComplexMatrix matrix() const;
};
using JumpOperatorSet = std::vector<JumpOperator>;

double channel_rate(DecayChannel channel, const SystemParams& params);

// Builds every channel, including those with zero rate.
JumpOperatorSet build_jump_operators(const SystemParams& params, const Basis& basis);

// Fixed-step RK4 for i d|psi>/dt = H(t)|psi> on the coherent basis.  No
// renormalization is applied; norm drift beyond 1e-6 raises
// IntegrationQualityError.
PureTrajectory propagate_schrodinger(const ComplexVector& psi0, const SystemParams& params,
                                     double t_start, double t_end, double dt = default_dt,
                                     double sample_spacing = default_sample_spacing);

// Same integrator for the master equation on the dissipative basis.  Trace is
// monitored every step, positivity at sample points.
DensityTrajectory propagate_lindblad(const ComplexMatrix& rho0, const SystemParams& params,
                                     double t_start, double t_end, double dt = default_dt,
                                     double sample_spacing = default_sample_spacing);

// Final state only, for sweeps.
ComplexVector schrodinger_final(const ComplexVector& psi0, const SystemParams& params,
                                double t_start, double t_end, double dt = default_dt);
ComplexMatrix lindblad_final(const ComplexMatrix& rho0, const SystemParams& params,
                             double t_start, double t_end, double dt = default_dt);

// Independent cross-check: piecewise-constant H with exact eigendecomposition
// propagators, midpoint sampling.  Converges to the true solution as n_steps
// grows; each sub-step is exactly unitary.
ComplexVector oracle_propagate(const ComplexVector& psi0, const SystemParams& params,
                               double t_start, double t_end, int n_steps);

} // namespace ghzsim
