#include <doctest.h>

#include "ghzsim/darkstate.hpp"
#include "ghzsim/dynamics.hpp"
#include "ghzsim/observables.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace ghzsim;

namespace {

ComplexVector ground_start(const Basis& basis) {
    ComplexVector psi = ComplexVector::Zero(basis.size());
    psi[0] = 1.0;
    return psi;
}

ComplexMatrix ground_projector(const Basis& basis) {
    ComplexMatrix rho = ComplexMatrix::Zero(basis.size(), basis.size());
    rho(0, 0) = 1.0;
    return rho;
}

ComplexVector random_state(Index dim, std::mt19937& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexVector psi(dim);
    for (Index i = 0; i < dim; ++i)
        psi[i] = Complex(normal(rng), normal(rng));
    psi.normalize();
    return psi;
}

} // namespace

TEST_CASE("jump operator catalogue: one matrix element each, channel rates attached") {
    SystemParams p;
    p.kappa = 0.02;
    p.k_fiber = 0.03;
    p.gamma = 0.05;
    const Basis basis = Basis::dissipative(p);
    const JumpOperatorSet ops = build_jump_operators(p, basis);
    REQUIRE(ops.size() == 15);

    for (const JumpOperator& op : ops) {
        const ComplexMatrix m = op.matrix();
        CHECK(m.rows() == 16);
        CHECK(m.cwiseAbs().sum() == doctest::Approx(1.0));
        CHECK(m(op.row, op.col) == Complex(1.0, 0.0));
        CHECK((m * m).cwiseAbs().maxCoeff() == 0.0);

        switch (op.spec.channel) {
        case DecayChannel::Fiber: CHECK(op.rate == 0.03); break;
        case DecayChannel::Cavity: CHECK(op.rate == 0.02); break;
        case DecayChannel::Atomic: CHECK(op.rate == 0.05); break;
        }
    }

    CHECK(channel_rate(DecayChannel::Fiber, p) == 0.03);
    CHECK(channel_rate(DecayChannel::Cavity, p) == 0.02);
    CHECK(channel_rate(DecayChannel::Atomic, p) == 0.05);
}

TEST_CASE("sampling grid honors spacing and endpoints") {
    SystemParams p;
    const Basis basis = Basis::coherent(p);
    const PureTrajectory traj =
        propagate_schrodinger(ground_start(basis), p, 0.0, 10.0, 0.01, 2.0);
    REQUIRE(traj.times.size() == 6);
    for (std::size_t i = 0; i < traj.times.size(); ++i)
        CHECK(traj.times[i] == doctest::Approx(2.0 * static_cast<double>(i)));
    CHECK(traj.states.size() == traj.times.size());
}

TEST_CASE("without lasers the start configuration is stationary") {
    SystemParams p;
    p.omega0 = 0.0;
    const Basis basis = Basis::coherent(p);
    const ComplexVector psi0 = ground_start(basis);
    const ComplexVector psi = schrodinger_final(psi0, p, 0.0, 50.0, 0.01);
    CHECK((psi - psi0).norm() < 1e-12);
}

TEST_CASE("norm is conserved along random closed-system evolutions") {
    std::mt19937 rng(99);
    SystemParams p;
    const Basis basis = Basis::coherent(p);
    // A random state puts full weight on the fast fiber-split eigenmodes, so
    // the step must be finer than for the adiabatic runs the defaults target.
    const PureTrajectory traj =
        propagate_schrodinger(random_state(basis.size(), rng), p, -20.0, 30.0, 0.001, 5.0);
    for (const ComplexVector& psi : traj.states)
        CHECK(std::abs(psi.norm() - 1.0) < 1e-7);
}

TEST_CASE("integrator agrees with the eigendecomposition oracle") {
    SystemParams p;
    const Basis basis = Basis::coherent(p);
    const ComplexVector psi0 = ground_start(basis);
    const ComplexVector rk = schrodinger_final(psi0, p, -130.0, 170.0, 0.005);
    const ComplexVector exact = oracle_propagate(psi0, p, -130.0, 170.0, 1 << 16);
    CHECK((rk - exact).norm() < 1e-6);
}

TEST_CASE("oracle steps are exactly unitary and invertible") {
    SystemParams p;
    std::mt19937 rng(7);
    const Basis basis = Basis::coherent(p);
    const ComplexVector psi0 = random_state(basis.size(), rng);
    const ComplexVector fwd = oracle_propagate(psi0, p, 0.0, 40.0, 512);
    CHECK(std::abs(fwd.norm() - 1.0) < 1e-12);
    const ComplexVector back = oracle_propagate(fwd, p, 40.0, 0.0, 512);
    CHECK((back - psi0).norm() < 1e-12);
}

TEST_CASE("halving the step leaves the final fidelity unchanged at 1e-6") {
    SystemParams p;
    const Basis basis = Basis::coherent(p);
    const ComplexVector psi0 = ground_start(basis);
    const ComplexVector target = target_ghz(p);
    const double coarse =
        fidelity_pure(schrodinger_final(psi0, p, -130.0, 170.0, 0.01), target);
    const double fine =
        fidelity_pure(schrodinger_final(psi0, p, -130.0, 170.0, 0.005), target);
    CHECK(std::abs(coarse - fine) < 1e-6);
}

TEST_CASE("a hopelessly coarse step is rejected, not silently accepted") {
    SystemParams p;
    const Basis basis = Basis::coherent(p);
    CHECK_THROWS_AS(propagate_schrodinger(ground_start(basis), p, 0.0, 50.0, 0.5),
                    IntegrationQualityError);
}

TEST_CASE("window and step arguments are validated") {
    SystemParams p;
    const Basis basis = Basis::coherent(p);
    const ComplexVector psi0 = ground_start(basis);
    CHECK_THROWS_AS(propagate_schrodinger(psi0, p, 10.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(propagate_schrodinger(psi0, p, 0.0, 10.0, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(propagate_schrodinger(ComplexVector::Zero(7), p, 0.0, 10.0),
                    std::invalid_argument);
    ComplexVector unnormalized = psi0 * 0.5;
    CHECK_THROWS_AS(propagate_schrodinger(unnormalized, p, 0.0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(oracle_propagate(psi0, p, 0.0, 10.0, 0), std::invalid_argument);
}

TEST_CASE("master equation initial state is vetted") {
    SystemParams p;
    const Basis basis = Basis::dissipative(p);
    ComplexMatrix rho = ground_projector(basis);

    ComplexMatrix off = rho;
    off(0, 1) = Complex(0.3, 0.1); // not Hermitian
    CHECK_THROWS_AS(propagate_lindblad(off, p, 0.0, 1.0), std::invalid_argument);

    ComplexMatrix scaled = rho * 0.5; // trace 1/2
    CHECK_THROWS_AS(propagate_lindblad(scaled, p, 0.0, 1.0), std::invalid_argument);

    ComplexMatrix negative = rho;
    negative(1, 1) = -0.2;
    negative(0, 0) = 1.2;
    CHECK_THROWS_AS(propagate_lindblad(negative, p, 0.0, 1.0), std::invalid_argument);

    CHECK_THROWS_AS(propagate_lindblad(ComplexMatrix::Zero(4, 4), p, 0.0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("zero decay rates make the master equation track the pure evolution") {
    SystemParams p;
    const Basis coh = Basis::coherent(p);
    const Basis full = Basis::dissipative(p);
    const ComplexVector target = target_ghz(p);

    const PureTrajectory pure =
        propagate_schrodinger(ground_start(coh), p, -130.0, 300.0, 0.005, 20.0);
    const DensityTrajectory mixed =
        propagate_lindblad(ground_projector(full), p, -130.0, 300.0, 0.005, 20.0);

    REQUIRE(pure.times.size() == mixed.times.size());
    for (std::size_t i = 0; i < pure.times.size(); ++i) {
        CAPTURE(pure.times[i]);
        const double fp = fidelity_pure(pure.states[i], target);
        const double fm = fidelity_mixed(mixed.states[i], target);
        CHECK(std::abs(fp - fm) < 1e-6);
        CHECK(std::abs(purity(mixed.states[i]) - 1.0) < 1e-6);
    }
}

TEST_CASE("dissipative run conserves trace and stays positive and hermitian") {
    SystemParams p;
    p.kappa = 0.05;
    p.gamma = 0.02;
    p.k_fiber = 0.01;
    const Basis basis = Basis::dissipative(p);
    const DensityTrajectory traj =
        propagate_lindblad(ground_projector(basis), p, -130.0, 100.0, 0.005, 25.0);

    for (const ComplexMatrix& rho : traj.states) {
        CHECK(std::abs(rho.trace().real() - 1.0) < 1e-8);
        CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho, Eigen::EigenvaluesOnly);
        CHECK(solver.eigenvalues().minCoeff() > -1e-6);
    }
    // Decay degrades both purity and the final fidelity.
    const ComplexMatrix& last = traj.states.back();
    CHECK(purity(last) < 1.0 - 1e-3);
}

TEST_CASE("fiber loss barely hurts while cavity loss bites") {
    SystemParams p;
    const Basis basis = Basis::dissipative(p);
    const ComplexVector target = target_ghz(p);

    SystemParams fiber = p;
    fiber.k_fiber = 0.1;
    const double f_fiber = fidelity_mixed(
        lindblad_final(ground_projector(basis), fiber, -130.0, 300.0, 0.02), target);

    SystemParams cavity = p;
    cavity.kappa = 0.1;
    const double f_cavity = fidelity_mixed(
        lindblad_final(ground_projector(basis), cavity, -130.0, 300.0, 0.02), target);

    CHECK(f_fiber > 0.99);
    CHECK(f_cavity < f_fiber - 0.05);
}

TEST_CASE("final-state helpers match the trajectory tail") {
    SystemParams p;
    const Basis coh = Basis::coherent(p);
    const ComplexVector psi0 = ground_start(coh);
    const PureTrajectory traj = propagate_schrodinger(psi0, p, 0.0, 40.0, 0.01, 10.0);
    const ComplexVector fin = schrodinger_final(psi0, p, 0.0, 40.0, 0.01);
    CHECK((traj.states.back() - fin).norm() < 1e-12);
}
