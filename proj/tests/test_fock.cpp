#include <doctest.h>

#include <array>
#include <cmath>

#include "otto/dynamics.hpp"
#include "otto/errors.hpp"
#include "otto/fock.hpp"

using namespace otto;

TEST_CASE("generator conserves trace away from the cutoff") {
    const AtomBath b = make_bath(0.2, 0.4);
    const fock::FockDensity rho = fock::thermal(make_bath(0.1, 0.5), 80);
    const auto dp = fock::generator(rho.populations, b);
    double total = 0.0;
    for (double x : dp) total += x;
    CHECK(std::abs(total) < 1e-15);
}

TEST_CASE("mean photon number follows the closed form") {
    const AtomBath b = make_bath(0.2, 0.4);
    fock::FockDensity rho = fock::vacuum(80);
    for (int k = 1; k <= 10; ++k) {
        rho = fock::propagate(rho, 1.0, b);
        CHECK(std::abs(rho.mean() - nbar_evolve(0.0, k, b)) < 1e-9);
    }
    CHECK(rho.leakage() < 1e-12);
}

TEST_CASE("thermal state is stationary") {
    const AtomBath b = make_bath(0.2, 0.4);
    const fock::FockDensity steady = fock::thermal(b, 100);
    CHECK(fock::total_variation(fock::propagate(steady, 2.0, b), steady) < 1e-12);
}

TEST_CASE("truncation leakage is detected") {
    const AtomBath b = make_bath(0.3, 0.35);  // nbar_ss = 6
    CHECK_THROWS_AS(fock::propagate(fock::vacuum(10), 50.0, b), TruncationError);
}

TEST_CASE("default cutoff covers the geometric tail") {
    const std::array<AtomBath, 2> baths{make_bath(0.2, 0.4), make_bath(0.3, 0.35)};
    const int n = fock::default_cutoff(baths);
    const double ratio = 0.3 / 0.35;
    CHECK(std::pow(ratio, n) < 1e-12);
}

TEST_CASE("one collision is a small Euler step of the generator") {
    const AtomBath b = make_bath(0.2, 0.4);
    const fock::FockDensity rho = fock::thermal(make_bath(0.1, 0.6), 60);
    const fock::FockDensity out = fock::collision_map(rho, {0.1, b});
    const auto dp = fock::generator(rho.populations, b);
    for (std::size_t n = 0; n < dp.size(); ++n) {
        CHECK(out.populations[n] == doctest::Approx(rho.populations[n] + 0.01 * dp[n]).epsilon(1e-14));
    }
    CHECK_THROWS_AS(fock::collision_map(rho, {3.0, b}), NegativityError);
}
