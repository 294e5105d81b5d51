#include "ghzsim/dynamics.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <string>

namespace ghzsim {

double channel_rate(DecayChannel channel, const SystemParams& params) {
    switch (channel) {
    case DecayChannel::Fiber:
        return params.k_fiber;
    case DecayChannel::Cavity:
        return params.kappa;
    case DecayChannel::Atomic:
        return params.gamma;
    }
    return 0.0;
}

ComplexMatrix JumpOperator::matrix() const {
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    m(row, col) = 1.0;
    return m;
}

JumpOperatorSet build_jump_operators(const SystemParams& params, const Basis& basis) {
    JumpOperatorSet ops;
    for (const JumpSpec& spec : jump_specs(params)) {
        JumpOperator op;
        op.spec = spec;
        op.rate = channel_rate(spec.channel, params);
        op.dim = basis.size();
        int entries = 0;
        for (Index col = 0; col < basis.size(); ++col) {
            if (const auto target = apply_jump(spec, basis.state_of(col))) {
                op.row = basis.index_of(*target);
                op.col = col;
                ++entries;
            }
        }
        if (entries != 1)
            throw std::logic_error("build_jump_operators: " + spec.label() + " has " +
                                   std::to_string(entries) + " matrix elements, expected 1");
        ops.push_back(op);
    }
    return ops;
}

namespace {

struct Grid {
    long long n_steps;
    long long per_sample;
    double h;
};

// Step count is rounded up to a multiple of the sample stride so retained
// samples are uniformly spaced and the last one lands exactly on t_end.
Grid make_grid(double t_start, double t_end, double dt, double sample_spacing) {
    if (!(dt > 0.0))
        throw std::invalid_argument("integration step dt must be positive");
    if (!(t_end > t_start))
        throw std::invalid_argument("t_end must exceed t_start");
    const double span = t_end - t_start;
    long long n = std::max<long long>(1, std::llround(span / dt));
    long long per = 1;
    if (sample_spacing > 0.0) {
        per = std::max<long long>(1, std::min<long long>(std::llround(sample_spacing * n / span), n));
        n = ((n + per - 1) / per) * per;
    }
    return {n, per, span / n};
}

} // namespace

PureTrajectory propagate_schrodinger(const ComplexVector& psi0, const SystemParams& params,
                                     double t_start, double t_end, double dt,
                                     double sample_spacing) {
    params.validate();
    const Basis basis = Basis::coherent(params);
    if (psi0.size() != basis.size())
        throw std::invalid_argument("propagate_schrodinger: state dimension does not match basis");
    if (std::abs(psi0.squaredNorm() - 1.0) > 1e-8)
        throw std::invalid_argument("propagate_schrodinger: initial state is not normalized");

    const Grid grid = make_grid(t_start, t_end, dt, sample_spacing);
    const double h = grid.h;
    HamiltonianAssembler assembler(params, basis);
    const Index dim = basis.size();
    ComplexVector psi = psi0, k1(dim), k2(dim), k3(dim), k4(dim), stage(dim);

    auto deriv = [&](double t, const ComplexVector& v, ComplexVector& out) {
        out.noalias() = assembler.at(t) * v;
        out *= Complex(0.0, -1.0);
    };

    PureTrajectory traj;
    traj.dt = h;
    traj.sample_spacing = grid.per_sample * h;
    const long long n_samples = grid.n_steps / grid.per_sample + 1;
    traj.times.reserve(n_samples);
    traj.states.reserve(n_samples);
    traj.times.push_back(t_start);
    traj.states.push_back(psi);

    for (long long i = 0; i < grid.n_steps; ++i) {
        const double t = t_start + i * h;
        deriv(t, psi, k1);
        stage = psi + (0.5 * h) * k1;
        deriv(t + 0.5 * h, stage, k2);
        stage = psi + (0.5 * h) * k2;
        deriv(t + 0.5 * h, stage, k3);
        stage = psi + h * k3;
        deriv(t + h, stage, k4);
        psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        if (std::abs(psi.squaredNorm() - 1.0) > 1e-6)
            throw IntegrationQualityError("norm drift above 1e-6 at t = " +
                                          std::to_string(t + h) + "; reduce dt");
        if ((i + 1) % grid.per_sample == 0) {
            traj.times.push_back(t_start + (i + 1) * h);
            traj.states.push_back(psi);
        }
    }
    return traj;
}

DensityTrajectory propagate_lindblad(const ComplexMatrix& rho0, const SystemParams& params,
                                     double t_start, double t_end, double dt,
                                     double sample_spacing) {
    params.validate();
    const Basis basis = Basis::dissipative(params);
    if (rho0.rows() != basis.size() || rho0.cols() != basis.size())
        throw std::invalid_argument("propagate_lindblad: density matrix does not match basis");
    if ((rho0 - rho0.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("propagate_lindblad: initial state is not Hermitian");
    if (std::abs(rho0.trace().real() - 1.0) > 1e-8)
        throw std::invalid_argument("propagate_lindblad: initial trace is not one");
    {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho0, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-8)
            throw std::invalid_argument("propagate_lindblad: initial state is not positive");
    }

    const Grid grid = make_grid(t_start, t_end, dt, sample_spacing);
    const double h = grid.h;
    HamiltonianAssembler assembler(params, basis);
    const JumpOperatorSet jumps = build_jump_operators(params, basis);
    const Index dim = basis.size();

    // d(rho)/dt = -(A rho) - (A rho)^dag + feed, with A = iH + (1/2) sum r J^dag J.
    // J^dag J is diagonal here, so A costs one product plus a diagonal scale.
    RealVector damping = RealVector::Zero(dim);
    for (const JumpOperator& op : jumps)
        damping[op.col] += 0.5 * op.rate;

    ComplexMatrix rho = rho0;
    ComplexMatrix k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim);
    ComplexMatrix stage(dim, dim), hr(dim, dim), m(dim, dim);

    auto deriv = [&](double t, const ComplexMatrix& r, ComplexMatrix& out) {
        hr.noalias() = assembler.at(t) * r;
        m = Complex(0.0, -1.0) * hr;
        m -= damping.asDiagonal() * r;
        out = m;
        out += m.adjoint();
        for (const JumpOperator& op : jumps)
            out(op.row, op.row) += op.rate * r(op.col, op.col);
    };

    auto check_positive = [&](const ComplexMatrix& r, double t) {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(r, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-6)
            throw IntegrationQualityError("negativity below -1e-6 at t = " +
                                          std::to_string(t) + "; reduce dt");
    };

    DensityTrajectory traj;
    traj.dt = h;
    traj.sample_spacing = grid.per_sample * h;
    const long long n_samples = grid.n_steps / grid.per_sample + 1;
    traj.times.reserve(n_samples);
    traj.states.reserve(n_samples);
    traj.times.push_back(t_start);
    traj.states.push_back(rho);

    for (long long i = 0; i < grid.n_steps; ++i) {
        const double t = t_start + i * h;
        deriv(t, rho, k1);
        stage = rho + (0.5 * h) * k1;
        deriv(t + 0.5 * h, stage, k2);
        stage = rho + (0.5 * h) * k2;
        deriv(t + 0.5 * h, stage, k3);
        stage = rho + h * k3;
        deriv(t + h, stage, k4);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        if (std::abs(rho.trace().real() - 1.0) > 1e-6)
            throw IntegrationQualityError("trace drift above 1e-6 at t = " +
                                          std::to_string(t + h) + "; reduce dt");
        if ((i + 1) % grid.per_sample == 0) {
            const double ts = t_start + (i + 1) * h;
            check_positive(rho, ts);
            traj.times.push_back(ts);
            traj.states.push_back(rho);
        }
    }
    return traj;
}

ComplexVector schrodinger_final(const ComplexVector& psi0, const SystemParams& params,
                                double t_start, double t_end, double dt) {
    return propagate_schrodinger(psi0, params, t_start, t_end, dt, t_end - t_start)
        .states.back();
}

ComplexMatrix lindblad_final(const ComplexMatrix& rho0, const SystemParams& params,
                             double t_start, double t_end, double dt) {
    return propagate_lindblad(rho0, params, t_start, t_end, dt, t_end - t_start)
        .states.back();
}

ComplexVector oracle_propagate(const ComplexVector& psi0, const SystemParams& params,
                               double t_start, double t_end, int n_steps) {
    params.validate();
    if (n_steps < 1)
        throw std::invalid_argument("oracle_propagate: n_steps must be at least 1");
    const Basis basis = Basis::coherent(params);
    if (psi0.size() != basis.size())
        throw std::invalid_argument("oracle_propagate: state dimension does not match basis");

    const double h = (t_end - t_start) / n_steps;
    ComplexVector psi = psi0;
    ComplexVector w(basis.size());
    for (int i = 0; i < n_steps; ++i) {
        const double tm = t_start + (i + 0.5) * h;
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(build_hamiltonian(tm, params, basis));
        w.noalias() = es.eigenvectors().adjoint() * psi;
        w.array() *= (Complex(0.0, -h) * es.eigenvalues().cast<Complex>().array()).exp();
        psi.noalias() = es.eigenvectors() * w;
    }
    return psi;
}

} // namespace ghzsim
