#pragma once

#include <vector>

#include "ghzsim/model.hpp"
#include "ghzsim/types.hpp"

namespace ghzsim {

struct PulseShape {
    double omega0;
    double alpha;
    double tau;
    double width;
};

PulseShape pulse_of(const SystemParams& params);

// Omega_1(t) = Omega_0 sin(alpha) exp(-(t-tau)^2/T^2): the single late
// Gaussian on the first atom.
double rabi_omega1(double t, const PulseShape& pulse);

// Omega_N(t) = Omega_0 [exp(-(t+tau)^2/T^2) + cos(alpha) exp(-(t-tau)^2/T^2)]:
// an early Gaussian plus a late one overlapping Omega_1, so the ratio
// Omega_1/Omega_N rises from 0 to tan(alpha).
double rabi_omegaN(double t, const PulseShape& pulse);

// 2 Omega_1 Omega_N / sqrt(Omega_1^2 + Omega_N^2); adiabatic passage wants
// this small against g.
double adiabaticity_lhs(double t, const PulseShape& pulse);

// Hamiltonian at time t over `basis` (coherent or dissipative; rows and
// columns of the extra dissipative states are identically zero).
ComplexMatrix build_hamiltonian(double t, const SystemParams& params, const Basis& basis);

// Assembler for time stepping: the g/v part is constant, so per evaluation
// only the four laser entries are rewritten.
class HamiltonianAssembler {
public:
    HamiltonianAssembler(const SystemParams& params, const Basis& basis);

    const ComplexMatrix& at(double t);
    const SystemParams& params() const { return params_; }

private:
    struct DriveEntry {
        Index row, col;
        CouplingKind kind;
        bool conjugated;
    };

    SystemParams params_;
    PulseShape pulse_;
    ComplexMatrix h_;
    std::vector<DriveEntry> drive_entries_;
};

} // namespace ghzsim
