#include <doctest.h>

#include "ghzsim/sweep.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

using namespace ghzsim;

namespace {

SweepSpec quick_spec() {
    SweepSpec spec;
    spec.base.tau = 6.0;
    spec.base.width = 8.0;
    spec.x = {SweepParameter::Tau, 4.0, 8.0, 3};
    spec.y = {SweepParameter::Width, 6.0, 10.0, 2};
    spec.engine = Engine::Schrodinger;
    spec.eval_time = 20.0;
    spec.dt = 0.05;
    return spec;
}

} // namespace

TEST_CASE("parameter and engine names round-trip") {
    for (SweepParameter p : {SweepParameter::Tau, SweepParameter::Width, SweepParameter::Omega0,
                             SweepParameter::Kappa, SweepParameter::Gamma, SweepParameter::KFiber})
        CHECK(sweep_parameter_from(name_of(p)) == p);
    CHECK(engine_from("schrodinger") == Engine::Schrodinger);
    CHECK(engine_from("lindblad") == Engine::Lindblad);
    CHECK(std::string(name_of(SweepParameter::Width)) == "T");
    CHECK(std::string(name_of(SweepParameter::KFiber)) == "k");
    CHECK_THROWS_AS(sweep_parameter_from("sideways"), std::invalid_argument);
    CHECK_THROWS_AS(engine_from("exact"), std::invalid_argument);
}

TEST_CASE("axis values hit both endpoints uniformly") {
    const AxisSpec axis{SweepParameter::Kappa, 0.0, 0.1, 41};
    CHECK(axis.value(0) == doctest::Approx(0.0));
    CHECK(axis.value(40) == doctest::Approx(0.1));
    CHECK(axis.value(20) == doctest::Approx(0.05));
}

TEST_CASE("with_parameter writes the chosen field") {
    SystemParams p;
    CHECK(with_parameter(p, SweepParameter::Tau, 33.0).tau == 33.0);
    CHECK(with_parameter(p, SweepParameter::Width, 44.0).width == 44.0);
    CHECK(with_parameter(p, SweepParameter::Omega0, 0.2).omega0 == 0.2);
    CHECK(with_parameter(p, SweepParameter::Kappa, 0.01).kappa == 0.01);
    CHECK(with_parameter(p, SweepParameter::Gamma, 0.02).gamma == 0.02);
    CHECK(with_parameter(p, SweepParameter::KFiber, 0.03).k_fiber == 0.03);
}

TEST_CASE("spec validation rejects degenerate grids") {
    SweepSpec spec = quick_spec();
    CHECK_NOTHROW(spec.validate());
    spec.x.count = 1;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = quick_spec();
    spec.y.min = 12.0; // inverted
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = quick_spec();
    spec.dt = 0.0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("grid is row-major with x fastest") {
    const SweepSpec spec = quick_spec();
    const SweepResult result = run_sweep(spec, 1);
    REQUIRE(result.points.size() == 6);
    for (int iy = 0; iy < 2; ++iy)
        for (int ix = 0; ix < 3; ++ix) {
            const SweepPoint& pt = result.points[static_cast<std::size_t>(iy * 3 + ix)];
            CHECK(pt.x == doctest::Approx(spec.x.value(ix)));
            CHECK(pt.y == doctest::Approx(spec.y.value(iy)));
            CHECK(pt.failure.empty());
            CHECK(std::isfinite(pt.fidelity));
        }
}

TEST_CASE("worker count never changes the numbers") {
    const SweepSpec spec = quick_spec();
    const SweepResult serial = run_sweep(spec, 1);
    const SweepResult threaded = run_sweep(spec, 4);
    REQUIRE(serial.points.size() == threaded.points.size());
    for (std::size_t i = 0; i < serial.points.size(); ++i)
        CHECK(serial.points[i].fidelity == threaded.points[i].fidelity);

    const SweepResult again = run_sweep(spec, 1);
    for (std::size_t i = 0; i < serial.points.size(); ++i)
        CHECK(serial.points[i].fidelity == again.points[i].fidelity);
}

TEST_CASE("a failing grid point is captured, not thrown") {
    SweepSpec spec = quick_spec();
    spec.x = {SweepParameter::Omega0, -0.2, 0.1, 2}; // negative peak is invalid
    const SweepResult result = run_sweep(spec, 1);
    REQUIRE(result.points.size() == 4);
    CHECK(!result.points[0].failure.empty());
    CHECK(std::isnan(result.points[0].fidelity));
    CHECK(result.points[1].failure.empty());
    CHECK(std::isfinite(result.points[1].fidelity));
}

TEST_CASE("band extraction summarizes the passing ratio range") {
    SweepSpec spec = quick_spec();
    SweepResult result;
    result.spec = spec;
    result.points = {
        {4.0, 8.0, 0.5, ""},  {6.0, 8.0, 0.995, ""}, {8.0, 8.0, 0.992, ""},
        {4.0, 10.0, 0.2, ""}, {6.0, 10.0, 0.3, ""},  {8.0, 10.0, std::nan(""), "boom"},
    };
    const BandSummary band = band_extract(result, 0.99);
    CHECK(band.points == 2);
    CHECK(band.ratio_min == doctest::Approx(6.0 / 8.0));
    CHECK(band.ratio_max == doctest::Approx(8.0 / 8.0));

    const BandSummary none = band_extract(result, 1.01);
    CHECK(none.points == 0);
}

TEST_CASE("evaluate_sweep_point honors the lindblad engine") {
    SweepSpec spec = quick_spec();
    spec.engine = Engine::Lindblad;
    spec.x = {SweepParameter::Kappa, 0.0, 0.2, 2};
    spec.y = {SweepParameter::Gamma, 0.0, 0.1, 2};
    const SweepPoint clean = evaluate_sweep_point(spec, 0.0, 0.0);
    const SweepPoint lossy = evaluate_sweep_point(spec, 0.2, 0.1);
    CHECK(clean.failure.empty());
    CHECK(lossy.failure.empty());
    CHECK(clean.fidelity > lossy.fidelity);
}
