#include "ghzsim/hamiltonian.hpp"

#include <cmath>

namespace ghzsim {

PulseShape pulse_of(const SystemParams& params) {
    return {params.omega0, params.alpha, params.tau, params.width};
}

double rabi_omega1(double t, const PulseShape& pulse) {
    const double u = (t - pulse.tau) / pulse.width;
    return pulse.omega0 * std::sin(pulse.alpha) * std::exp(-u * u);
}

double rabi_omegaN(double t, const PulseShape& pulse) {
    const double early = (t + pulse.tau) / pulse.width;
    const double late = (t - pulse.tau) / pulse.width;
    return pulse.omega0 *
           (std::exp(-early * early) + std::cos(pulse.alpha) * std::exp(-late * late));
}

double adiabaticity_lhs(double t, const PulseShape& pulse) {
    const double w1 = rabi_omega1(t, pulse);
    const double wN = rabi_omegaN(t, pulse);
    const double rms = std::hypot(w1, wN);
    return rms > 0.0 ? 2.0 * w1 * wN / rms : 0.0;
}

namespace {

Complex drive_coefficient(CouplingKind kind, bool conjugated, double t,
                          const SystemParams& params, const PulseShape& pulse) {
    // On |e><g0| the first drive enters as Omega_1 e^{i phi_1}, the last as
    // Omega_N e^{-i phi_N}; the transferred amplitude then carries phi_1 + phi_N.
    double amp, phase;
    if (kind == CouplingKind::DriveFirst) {
        amp = rabi_omega1(t, pulse);
        phase = params.phi1;
    } else {
        amp = rabi_omegaN(t, pulse);
        phase = -params.phiN;
    }
    const Complex z = amp * std::polar(1.0, phase);
    return conjugated ? std::conj(z) : z;
}

} // namespace

ComplexMatrix build_hamiltonian(double t, const SystemParams& params, const Basis& basis) {
    params.validate();
    const PulseShape pulse = pulse_of(params);
    ComplexMatrix h = ComplexMatrix::Zero(basis.size(), basis.size());
    for (Index col = 0; col < basis.size(); ++col) {
        for (const Coupling& c : couplings_from(basis.state_of(col), params)) {
            const Index row = basis.index_of(c.target); // bases are coupling-closed
            switch (c.kind) {
            case CouplingKind::DriveFirst:
            case CouplingKind::DriveLast:
                h(row, col) += drive_coefficient(c.kind, c.conjugated, t, params, pulse);
                break;
            case CouplingKind::AtomCavity:
                h(row, col) += SystemParams::g;
                break;
            case CouplingKind::CavityFiber:
                h(row, col) += params.v;
                break;
            }
        }
    }
    return h;
}

HamiltonianAssembler::HamiltonianAssembler(const SystemParams& params, const Basis& basis)
    : params_(params), pulse_(pulse_of(params)) {
    params_.validate();
    h_ = build_hamiltonian(0.0, params_, basis);
    for (Index col = 0; col < basis.size(); ++col) {
        for (const Coupling& c : couplings_from(basis.state_of(col), params_)) {
            if (c.kind != CouplingKind::DriveFirst && c.kind != CouplingKind::DriveLast)
                continue;
            drive_entries_.push_back({basis.index_of(c.target), col, c.kind, c.conjugated});
        }
    }
}

const ComplexMatrix& HamiltonianAssembler::at(double t) {
    for (const DriveEntry& e : drive_entries_)
        h_(e.row, e.col) = drive_coefficient(e.kind, e.conjugated, t, params_, pulse_);
    return h_;
}

} // namespace ghzsim
