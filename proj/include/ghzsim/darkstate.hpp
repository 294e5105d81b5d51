#pragma once

#include "ghzsim/hamiltonian.hpp"
#include "ghzsim/model.hpp"
#include "ghzsim/types.hpp"

#include <vector>

namespace ghzsim {

// Zero-energy eigenstate of the chain, written over the coherent basis.
struct DarkState {
    ComplexVector amplitudes;
    double x_ratio = 0.0; // Omega_1(t) / Omega_N(t)
    double g_ratio = 0.0; // g / Omega_N(t)
};

// Closed form for the three-atom chain.  Requires Omega_N(t) > 0.
DarkState analytic_dark_state(double t, const SystemParams& params);

// Null vector of H(t) for any supported chain size, phase-fixed so the
// component on the initial state is real and nonnegative.  Expects the
// coherent basis; decay extras would add spurious null directions.
DarkState numeric_dark_state(double t, const SystemParams& params, const Basis& basis);

// Asymptotic entangled target: cos(alpha) on the initial configuration and
// -e^{i(phi_1+phi_N)} sin(alpha) on the fully transferred one, fields in vacuum.
ComplexVector target_ghz(const SystemParams& params);

// Eigenvalues of H(t), ascending.
RealVector instantaneous_spectrum(double t, const SystemParams& params, const Basis& basis);

struct DarkTraceRow {
    double t = 0.0;
    double x_ratio = 0.0;
    double g_ratio = 0.0;
    std::vector<double> support_populations; // |c|^2 at ordinals 0, 2, ..., 4N-2
    double gap = 0.0;                        // distance from the zero mode to its neighbor
};

// Samples the numeric dark state on a uniform grid.  At instants where the
// null space degenerates (both pulses vanishing) the previous grid point's
// vector is carried forward.
std::vector<DarkTraceRow> dark_trace(const SystemParams& params, double t_start, double t_end,
                                     double spacing);

} // namespace ghzsim
