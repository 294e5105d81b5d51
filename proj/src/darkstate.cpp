#include "ghzsim/darkstate.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ghzsim {

DarkState analytic_dark_state(double t, const SystemParams& params) {
    params.validate();
    if (params.n_atoms != 3)
        throw std::invalid_argument("analytic_dark_state: closed form covers three atoms only");
    const PulseShape pulse = pulse_of(params);
    const double wN = rabi_omegaN(t, pulse);
    if (!(wN > 0.0))
        throw std::domain_error("analytic_dark_state: Omega_N vanishes, X and G are undefined");
    const double x = rabi_omega1(t, pulse) / wN;
    const double gr = SystemParams::g / wN;

    // Walking the chain from the initial state fixes the alternating pattern;
    // each interior amplitude picks up the first drive's phase.
    const Complex inner = std::polar(1.0, params.phi1);
    ComplexVector c = ComplexVector::Zero(11);
    c[0] = gr;
    c[2] = -x * inner;
    c[4] = x * inner;
    c[6] = -x * inner;
    c[8] = x * inner;
    c[10] = -gr * x * std::polar(1.0, params.phi1 + params.phiN);
    c /= std::sqrt(4.0 * x * x + gr * gr * (x * x + 1.0));
    return {std::move(c), x, gr};
}

DarkState numeric_dark_state(double t, const SystemParams& params, const Basis& basis) {
    if (basis.size() != basis.coherent_size())
        throw std::invalid_argument("numeric_dark_state: expects the coherent basis");

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(build_hamiltonian(t, params, basis));
    const RealVector& evals = solver.eigenvalues();
    const double tol = 1e-8 * std::max(evals.cwiseAbs().maxCoeff(), 1.0);

    Index zero_index = -1;
    int nullity = 0;
    for (Index i = 0; i < evals.size(); ++i) {
        if (std::abs(evals[i]) > tol)
            continue;
        ++nullity;
        if (zero_index < 0 || std::abs(evals[i]) < std::abs(evals[zero_index]))
            zero_index = i;
    }
    if (nullity != 1)
        throw DegenerateDarkSpaceError(
            "numeric_dark_state: zero eigenspace has dimension " + std::to_string(nullity),
            nullity);

    ComplexVector c = solver.eigenvectors().col(zero_index);
    Index anchor = 0;
    if (std::abs(c[0]) < 1e-12)
        c.cwiseAbs().maxCoeff(&anchor);
    c *= std::polar(1.0, -std::arg(c[anchor]));

    const PulseShape pulse = pulse_of(params);
    const double wN = rabi_omegaN(t, pulse);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {std::move(c), wN > 0.0 ? rabi_omega1(t, pulse) / wN : nan,
            wN > 0.0 ? SystemParams::g / wN : nan};
}

ComplexVector target_ghz(const SystemParams& params) {
    params.validate();
    const Index dim = 4 * params.n_atoms - 1;
    ComplexVector c = ComplexVector::Zero(dim);
    c[0] = std::cos(params.alpha);
    c[dim - 1] = -std::sin(params.alpha) * std::polar(1.0, params.phi1 + params.phiN);
    return c;
}

RealVector instantaneous_spectrum(double t, const SystemParams& params, const Basis& basis) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
        build_hamiltonian(t, params, basis), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

std::vector<DarkTraceRow> dark_trace(const SystemParams& params, double t_start, double t_end,
                                     double spacing) {
    params.validate();
    if (!(spacing > 0.0))
        throw std::invalid_argument("dark_trace: spacing must be positive");
    if (!(t_end > t_start))
        throw std::invalid_argument("dark_trace: t_end must exceed t_start");

    const Basis basis = Basis::coherent(params);
    const PulseShape pulse = pulse_of(params);
    const long long n = std::max<long long>(1, std::llround((t_end - t_start) / spacing));
    const double h = (t_end - t_start) / n;

    std::vector<DarkTraceRow> rows;
    rows.reserve(n + 1);
    ComplexVector carried;
    for (long long i = 0; i <= n; ++i) {
        const double t = t_start + i * h;
        try {
            carried = numeric_dark_state(t, params, basis).amplitudes;
        } catch (const DegenerateDarkSpaceError&) {
            if (carried.size() == 0)
                throw;
        }

        DarkTraceRow row;
        row.t = t;
        const double wN = rabi_omegaN(t, pulse);
        const double nan = std::numeric_limits<double>::quiet_NaN();
        row.x_ratio = wN > 0.0 ? rabi_omega1(t, pulse) / wN : nan;
        row.g_ratio = wN > 0.0 ? SystemParams::g / wN : nan;
        for (Index ordinal = 0; ordinal < basis.size(); ordinal += 2)
            row.support_populations.push_back(std::norm(carried[ordinal]));

        RealVector abs_evals = instantaneous_spectrum(t, params, basis).cwiseAbs();
        std::sort(abs_evals.begin(), abs_evals.end());
        row.gap = abs_evals[1];
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace ghzsim
