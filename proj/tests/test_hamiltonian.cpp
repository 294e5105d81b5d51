#include <doctest.h>

#include "ghzsim/hamiltonian.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace ghzsim;

namespace {

// The three-atom matrix written out entry by entry: a tridiagonal chain
// phi_1 -- phi_11 with the laser corners carrying the phases.
ComplexMatrix reference_h3(double t, const SystemParams& p) {
    const PulseShape pulse = pulse_of(p);
    const double g = SystemParams::g;
    const double v = p.v;
    ComplexMatrix h = ComplexMatrix::Zero(11, 11);
    h(0, 1) = rabi_omega1(t, pulse) * std::polar(1.0, -p.phi1);
    h(1, 2) = g;
    h(2, 3) = v;
    h(3, 4) = v;
    h(4, 5) = g;
    h(5, 6) = g;
    h(6, 7) = v;
    h(7, 8) = v;
    h(8, 9) = g;
    h(9, 10) = rabi_omegaN(t, pulse) * std::polar(1.0, -p.phiN);
    for (Index i = 0; i + 1 < 11; ++i)
        h(i + 1, i) = std::conj(h(i, i + 1));
    return h;
}

} // namespace

TEST_CASE("pulse envelopes at pinned instants") {
    SystemParams p;
    const PulseShape pulse = pulse_of(p);

    CHECK(rabi_omega1(38.0, pulse) == doctest::Approx(0.0691374530).epsilon(1e-8));
    CHECK(rabi_omegaN(38.0, pulse) == doctest::Approx(0.0989571810).epsilon(1e-8));
    CHECK(rabi_omega1(170.0, pulse) / rabi_omegaN(170.0, pulse) ==
          doctest::Approx(0.9930767759).epsilon(1e-8));

    // At the crossing point the ratio equals tan(alpha/2) for any tau, T.
    CHECK(rabi_omega1(0.0, pulse) / rabi_omegaN(0.0, pulse) ==
          doctest::Approx(std::tan(p.alpha / 2.0)).epsilon(1e-12));
    SystemParams other = p;
    other.tau = 23.0;
    other.width = 105.0;
    other.alpha = 0.31;
    const PulseShape op = pulse_of(other);
    CHECK(rabi_omega1(0.0, op) / rabi_omegaN(0.0, op) ==
          doctest::Approx(std::tan(other.alpha / 2.0)).epsilon(1e-12));
}

TEST_CASE("pulse ratio runs from zero to tan(alpha)") {
    SystemParams p;
    const PulseShape pulse = pulse_of(p);
    CHECK(rabi_omega1(-600.0, pulse) / rabi_omegaN(-600.0, pulse) < 1e-6);
    CHECK(rabi_omega1(600.0, pulse) / rabi_omegaN(600.0, pulse) ==
          doctest::Approx(std::tan(p.alpha)).epsilon(1e-6));

    SystemParams tilted = p;
    tilted.alpha = 0.6;
    const PulseShape tp = pulse_of(tilted);
    CHECK(rabi_omega1(600.0, tp) / rabi_omegaN(600.0, tp) ==
          doctest::Approx(std::tan(0.6)).epsilon(1e-5));
}

TEST_CASE("adiabaticity measure stays under sqrt(2) Omega_0 and peaks as frozen") {
    SystemParams p;
    const PulseShape pulse = pulse_of(p);
    double peak = 0.0;
    for (double t = -130.0; t <= 170.0; t += 0.01)
        peak = std::max(peak, adiabaticity_lhs(t, pulse));
    CHECK(peak == doctest::Approx(0.1134380699).epsilon(1e-6));
    CHECK(peak <= std::sqrt(2.0) * p.omega0);

    // Far outside the pulses both envelopes vanish; the measure must not NaN.
    CHECK(adiabaticity_lhs(1e6, pulse) == 0.0);
}

TEST_CASE("three-atom matrix equals the handwritten tridiagonal") {
    SystemParams p;
    const Basis basis = Basis::coherent(p);
    for (double t : {-130.0, -40.0, 0.0, 38.0, 100.0, 170.0}) {
        CAPTURE(t);
        const ComplexMatrix h = build_hamiltonian(t, p, basis);
        CHECK((h - reference_h3(t, p)).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("laser phases sit on the drive corners only") {
    SystemParams p;
    p.phi1 = 0.7;
    p.phiN = 2.1;
    const Basis basis = Basis::coherent(p);
    const ComplexMatrix h = build_hamiltonian(25.0, p, basis);
    CHECK((h - reference_h3(25.0, p)).cwiseAbs().maxCoeff() < 1e-15);

    CHECK(std::arg(h(1, 0)) == doctest::Approx(0.7));
    CHECK(std::arg(h(9, 10)) == doctest::Approx(-2.1));
    // Interior couplings stay real.
    for (Index i = 1; i + 2 < 11; ++i)
        CHECK(h(i, i + 1).imag() == 0.0);
}

TEST_CASE("hamiltonian is hermitian for random parameter draws") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int draw = 0; draw < 50; ++draw) {
        SystemParams p;
        p.v = 1.0 + 19.0 * unit(rng);
        p.omega0 = 0.3 * unit(rng);
        p.alpha = 1.5 * unit(rng);
        p.tau = 80.0 * unit(rng);
        p.width = 20.0 + 120.0 * unit(rng);
        p.phi1 = 2.0 * pi * unit(rng);
        p.phiN = 2.0 * pi * unit(rng);
        const Basis basis = Basis::coherent(p);
        const double t = -150.0 + 450.0 * unit(rng);
        const ComplexMatrix h = build_hamiltonian(t, p, basis);
        CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("five-atom chain carries the expected coupling sequence") {
    SystemParams p;
    p.n_atoms = 5;
    const Basis basis = Basis::coherent(p);
    REQUIRE(basis.size() == 19);
    const double t = 12.0;
    const ComplexMatrix h = build_hamiltonian(t, p, basis);
    const PulseShape pulse = pulse_of(p);

    const double g = SystemParams::g;
    const double v = p.v;
    const Complex expected[18] = {
        rabi_omega1(t, pulse) * std::polar(1.0, -p.phi1),
        g, v, v, g, g, v, v, g, g, v, v, g, g, v, v, g,
        rabi_omegaN(t, pulse) * std::polar(1.0, -p.phiN),
    };
    for (Index i = 0; i < 18; ++i) {
        CAPTURE(i);
        CHECK(std::abs(h(i, i + 1) - expected[i]) < 1e-15);
    }
    // Tridiagonal: nothing beyond the first off-diagonal.
    for (Index i = 0; i < 19; ++i)
        for (Index j = 0; j < 19; ++j)
            if (std::abs(i - j) > 1)
                CHECK(h(i, j) == Complex(0.0, 0.0));
    CHECK(h.diagonal().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("dissipative embedding leaves the extra states uncoupled") {
    SystemParams p;
    const Basis coh = Basis::coherent(p);
    const Basis full = Basis::dissipative(p);
    const ComplexMatrix small = build_hamiltonian(40.0, p, coh);
    const ComplexMatrix big = build_hamiltonian(40.0, p, full);
    CHECK((big.topLeftCorner(11, 11) - small).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(big.bottomRows(5).cwiseAbs().maxCoeff() == 0.0);
    CHECK(big.rightCols(5).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("assembler reproduces the built matrix at arbitrary times") {
    SystemParams p;
    p.phi1 = 1.3;
    p.phiN = 0.4;
    const Basis basis = Basis::coherent(p);
    HamiltonianAssembler assembler(p, basis);
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> times(-200.0, 400.0);
    for (int i = 0; i < 25; ++i) {
        const double t = times(rng);
        CAPTURE(t);
        CHECK((assembler.at(t) - build_hamiltonian(t, p, basis)).cwiseAbs().maxCoeff() < 1e-15);
    }
}
