#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "otto/bath.hpp"
#include "otto/dynamics.hpp"
#include "otto/errors.hpp"

using namespace otto;

TEST_CASE("closed-form relaxation matches the ODE oracle") {
    const AtomBath hot = make_bath(0.2, 0.4);
    const AtomBath cold = make_bath(0.05, 0.7);
    for (double n0 : {0.0, 0.3, 5.0}) {
        for (double t : {0.0, 0.1, 1.0, 7.5, 40.0}) {
            CHECK(nbar_evolve(n0, t, hot) == doctest::Approx(oracle::ode_nbar(n0, t, 0.2, 0.4)).epsilon(1e-11));
            CHECK(nbar_evolve(n0, t, cold) == doctest::Approx(oracle::ode_nbar(n0, t, 0.05, 0.7)).epsilon(1e-11));
        }
    }
}

TEST_CASE("relaxation composes as a semigroup") {
    const AtomBath b = make_bath(0.1, 0.25);
    const double direct = nbar_evolve(3.0, 5.0, b);
    const double split = nbar_evolve(nbar_evolve(3.0, 2.0, b), 3.0, b);
    CHECK(direct == doctest::Approx(split).epsilon(1e-14));
    const PhotonState s = evolve({3.0, 1.0}, 5.0, b);
    CHECK(s.t == 6.0);
    CHECK(s.nbar == doctest::Approx(direct).epsilon(1e-15));
}

TEST_CASE("steady state is a fixed point") {
    const AtomBath b = make_bath(0.1, 0.25);
    CHECK(nbar_rate(nbar_ss(b), b) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(nbar_evolve(nbar_ss(b), 123.0, b) == doctest::Approx(nbar_ss(b)).epsilon(1e-14));
}

TEST_CASE("temperature and photon number are inverses") {
    for (double n : {1e-6, 0.55, 2.0, 300.0}) {
        CHECK(nbar_from_temperature(temperature_from_nbar(n, 0.7), 0.7) == doctest::Approx(n).epsilon(1e-12));
    }
    CHECK_THROWS_AS(temperature_from_nbar(0.0, 1.0), DomainError);
}

TEST_CASE("thermal entropy") {
    CHECK(entropy(0.0) == 0.0);
    CHECK(entropy(1.0) == doctest::Approx(2.0 * std::log(2.0)));
    double sum = 0.0;
    const AtomBath b = make_bath(0.2, 0.4);
    for (int n = 0; n < 200; ++n) sum += thermal_population(n, b);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
}
