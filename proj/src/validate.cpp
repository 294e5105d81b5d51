#include "ghzsim/validate.hpp"

#include "ghzsim/darkstate.hpp"
#include "ghzsim/dynamics.hpp"
#include "ghzsim/hamiltonian.hpp"
#include "ghzsim/io.hpp"
#include "ghzsim/model.hpp"
#include "ghzsim/observables.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace ghzsim {

namespace {

SystemParams random_params(std::mt19937& rng, int n_atoms) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    SystemParams p;
    p.n_atoms = n_atoms;
    p.v = 1.0 + 19.0 * u01(rng);
    p.omega0 = 0.01 + 0.39 * u01(rng);
    p.alpha = 0.5 * pi * u01(rng);
    p.tau = 150.0 * u01(rng);
    p.width = 20.0 + 180.0 * u01(rng);
    p.phi1 = 2.0 * pi * u01(rng);
    p.phiN = 2.0 * pi * u01(rng);
    return p;
}

std::string check_basis(int n_atoms) {
    SystemParams p;
    p.n_atoms = n_atoms;
    const Basis coherent = Basis::coherent(p);
    const Basis dissipative = Basis::dissipative(p);
    if (coherent.size() != 4 * n_atoms - 1)
        return "coherent size " + std::to_string(coherent.size());
    if (dissipative.size() != 6 * n_atoms - 2)
        return "dissipative size " + std::to_string(dissipative.size());
    for (const Basis* basis : {&coherent, &dissipative}) {
        for (Index i = 0; i < basis->size(); ++i) {
            for (const Coupling& c : couplings_from(basis->state_of(i), p))
                if (!basis->find(c.target))
                    return "coupling leaves basis at ordinal " + std::to_string(i);
        }
    }
    for (Index i = 0; i < dissipative.size(); ++i) {
        for (const JumpSpec& jump : jump_specs(p))
            if (const auto target = apply_jump(jump, dissipative.state_of(i)))
                if (!dissipative.find(*target))
                    return jump.label() + " leaves basis at ordinal " + std::to_string(i);
    }
    return {};
}

std::string check_hermiticity(int n_atoms) {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> ut(-200.0, 300.0);
    for (int trial = 0; trial < 200; ++trial) {
        const SystemParams p = random_params(rng, n_atoms);
        const double t = ut(rng);
        const Basis basis = Basis::coherent(p);
        const ComplexMatrix h = build_hamiltonian(t, p, basis);
        if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
            return "non-Hermitian at trial " + std::to_string(trial);

        const Basis full = Basis::dissipative(p);
        const ComplexMatrix hd = build_hamiltonian(t, p, full);
        const Index extra = full.size() - basis.size();
        if (hd.bottomRows(extra).cwiseAbs().maxCoeff() != 0.0 ||
            hd.rightCols(extra).cwiseAbs().maxCoeff() != 0.0)
            return "decay extras acquire coherent couplings at trial " + std::to_string(trial);
    }
    return {};
}

std::string check_nullity(int n_atoms) {
    SystemParams p;
    p.n_atoms = n_atoms;
    const Basis basis = Basis::coherent(p);
    for (int i = 0; i <= 100; ++i) {
        const double t = -130.0 + 3.0 * i;
        const DarkState dark = numeric_dark_state(t, p, basis);
        const double residual = (build_hamiltonian(t, p, basis) * dark.amplitudes).norm();
        if (residual > 1e-10)
            return "residual " + format_number(residual) + " at t = " + format_number(t);
        if (n_atoms == 3) {
            const DarkState closed = analytic_dark_state(t, p);
            const double diff = (dark.amplitudes - closed.amplitudes).cwiseAbs().maxCoeff();
            if (diff > 1e-10)
                return "analytic mismatch " + format_number(diff) + " at t = " + format_number(t);
        }
    }
    return {};
}

std::string check_zero_decay(double dt) {
    const SystemParams p;
    const double t0 = -(p.tau + p.width);
    const double t1 = 300.0;
    const ComplexVector target = target_ghz(p);

    ComplexVector psi0 = ComplexVector::Zero(Basis::coherent(p).size());
    psi0[0] = 1.0;
    const double pure = fidelity_pure(schrodinger_final(psi0, p, t0, t1, dt), target);

    const Index dim = Basis::dissipative(p).size();
    ComplexMatrix rho0 = ComplexMatrix::Zero(dim, dim);
    rho0(0, 0) = 1.0;
    const double mixed = fidelity_mixed(lindblad_final(rho0, p, t0, t1, dt), target);

    if (std::abs(pure - mixed) > 1e-6)
        return "fidelities differ by " + format_number(std::abs(pure - mixed));
    return {};
}

std::string check_step_halving(double dt) {
    const SystemParams p;
    const double t0 = -(p.tau + p.width);
    const double t1 = 300.0;
    const ComplexVector target = target_ghz(p);
    ComplexVector psi0 = ComplexVector::Zero(Basis::coherent(p).size());
    psi0[0] = 1.0;
    const double coarse = fidelity_pure(schrodinger_final(psi0, p, t0, t1, dt), target);
    const double fine = fidelity_pure(schrodinger_final(psi0, p, t0, t1, 0.5 * dt), target);
    if (std::abs(coarse - fine) > 1e-6)
        return "fidelity shifts by " + format_number(std::abs(coarse - fine)) +
               " when halving dt = " + format_number(dt);
    return {};
}

} // namespace

std::vector<CheckResult> run_validation(int n_atoms, double dt) {
    const std::vector<std::pair<std::string, std::function<std::string()>>> checks = {
        {"basis closure and sizes", [&] { return check_basis(n_atoms); }},
        {"hamiltonian hermiticity", [&] { return check_hermiticity(n_atoms); }},
        {"dark-state nullity", [&] { return check_nullity(n_atoms); }},
        {"zero-decay equivalence", [&] { return check_zero_decay(dt); }},
        {"step-halving convergence", [&] { return check_step_halving(dt); }},
    };

    std::vector<CheckResult> results;
    results.reserve(checks.size());
    for (const auto& [name, fn] : checks) {
        CheckResult r;
        r.name = name;
        try {
            r.detail = fn();
            r.passed = r.detail.empty();
        } catch (const std::exception& err) {
            r.passed = false;
            r.detail = err.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace ghzsim
