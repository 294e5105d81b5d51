#include "ghzsim/observables.hpp"

#include "ghzsim/darkstate.hpp"

#include <stdexcept>

namespace ghzsim {

double fidelity_pure(const ComplexVector& psi, const ComplexVector& target) {
    if (psi.size() != target.size())
        throw std::invalid_argument("fidelity_pure: dimension mismatch");
    return std::norm(target.dot(psi));
}

double fidelity_mixed(const ComplexMatrix& rho, const ComplexVector& target) {
    const Index n = target.size();
    if (rho.rows() != rho.cols() || rho.rows() < n)
        throw std::invalid_argument("fidelity_mixed: dimension mismatch");
    const Complex value = target.dot(rho.topLeftCorner(n, n) * target);
    return value.real();
}

double purity(const ComplexMatrix& rho) {
    return rho.squaredNorm(); // tr(rho^2) for Hermitian rho
}

RealVector populations(const ComplexVector& psi) {
    return psi.cwiseAbs2();
}

RealVector populations(const ComplexMatrix& rho) {
    return rho.diagonal().real();
}

std::vector<double> populations(const ComplexVector& psi, const std::vector<Index>& ordinals) {
    std::vector<double> out;
    out.reserve(ordinals.size());
    for (Index i : ordinals) {
        if (i < 0 || i >= psi.size())
            throw std::out_of_range("populations: ordinal out of range");
        out.push_back(std::norm(psi[i]));
    }
    return out;
}

std::vector<Index> dark_support_ordinals(int n_atoms) {
    std::vector<Index> out;
    out.reserve(2 * n_atoms);
    for (Index i = 0; i < 4 * n_atoms - 1; i += 2)
        out.push_back(i);
    return out;
}

namespace {

double masked_sum(const RealVector& pops, const Basis& basis, bool excited) {
    if (pops.size() != basis.size())
        throw std::invalid_argument("population vector does not match basis");
    double total = 0.0;
    for (Index i = 0; i < basis.size(); ++i) {
        const BasisState& s = basis.state_of(i);
        if (excited ? s.has_excited_atom() : s.has_fiber_photon())
            total += pops[i];
    }
    return total;
}

} // namespace

double excited_population(const RealVector& pops, const Basis& basis) {
    return masked_sum(pops, basis, true);
}

double fiber_population(const RealVector& pops, const Basis& basis) {
    return masked_sum(pops, basis, false);
}

namespace {

template <typename Trajectory, typename PopsOf, typename FidelityOf, typename WeightOf>
std::vector<TraceRow> rows_impl(const Trajectory& traj, const SystemParams& params,
                                const Basis& basis, PopsOf pops_of, FidelityOf fidelity_of,
                                WeightOf weight_of) {
    const ComplexVector target = target_ghz(params);
    const std::vector<Index> tracked = dark_support_ordinals(params.n_atoms);

    std::vector<TraceRow> rows;
    rows.reserve(traj.times.size());
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const auto& state = traj.states[i];
        TraceRow row;
        row.t = traj.times[i];
        const RealVector pops = pops_of(state);
        row.dark_populations.reserve(tracked.size());
        for (Index ordinal : tracked)
            row.dark_populations.push_back(pops[ordinal]);
        row.excited_total = excited_population(pops, basis);
        row.fiber_total = fiber_population(pops, basis);
        row.fidelity = fidelity_of(state, target);
        row.norm_or_trace = weight_of(state);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::vector<TraceRow> trace_rows(const PureTrajectory& traj, const SystemParams& params) {
    return rows_impl(
        traj, params, Basis::coherent(params),
        [](const ComplexVector& psi) { return populations(psi); },
        [](const ComplexVector& psi, const ComplexVector& target) {
            return fidelity_pure(psi, target);
        },
        [](const ComplexVector& psi) { return psi.squaredNorm(); });
}

std::vector<TraceRow> trace_rows(const DensityTrajectory& traj, const SystemParams& params) {
    return rows_impl(
        traj, params, Basis::dissipative(params),
        [](const ComplexMatrix& rho) { return populations(rho); },
        [](const ComplexMatrix& rho, const ComplexVector& target) {
            return fidelity_mixed(rho, target);
        },
        [](const ComplexMatrix& rho) { return rho.trace().real(); });
}

} // namespace ghzsim
