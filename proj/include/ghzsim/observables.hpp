#pragma once

#include "ghzsim/dynamics.hpp"
#include "ghzsim/model.hpp"
#include "ghzsim/types.hpp"

#include <vector>

namespace ghzsim {

// Fidelity is overlap squared |<target|psi>|^2, not the square-root
// (Uhlmann) convention.
double fidelity_pure(const ComplexVector& psi, const ComplexVector& target);

// <target|rho|target>.  A target over the coherent basis may be shorter than
// the density matrix; missing components are treated as zero.
double fidelity_mixed(const ComplexMatrix& rho, const ComplexVector& target);

double purity(const ComplexMatrix& rho);

RealVector populations(const ComplexVector& psi);
RealVector populations(const ComplexMatrix& rho);
std::vector<double> populations(const ComplexVector& psi, const std::vector<Index>& ordinals);

// Ordinals 0, 2, ..., 4N-2: the states free of excited atoms and fiber
// photons, which carry the dark state and the plotted P_n curves.
std::vector<Index> dark_support_ordinals(int n_atoms);

double excited_population(const RealVector& pops, const Basis& basis);
double fiber_population(const RealVector& pops, const Basis& basis);

// One CSV-ready record per retained sample.
struct TraceRow {
    double t = 0.0;
    std::vector<double> dark_populations; // over dark_support_ordinals
    double excited_total = 0.0;
    double fiber_total = 0.0;
    double fidelity = 0.0;
    double norm_or_trace = 0.0;
};

std::vector<TraceRow> trace_rows(const PureTrajectory& traj, const SystemParams& params);
std::vector<TraceRow> trace_rows(const DensityTrajectory& traj, const SystemParams& params);

} // namespace ghzsim
