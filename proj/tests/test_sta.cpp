#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "otto/errors.hpp"
#include "otto/quadrature.hpp"
#include "otto/sta.hpp"

using namespace otto;

// Reference values from an independent scipy evaluation of the unit-ramp integral.
constexpr double kGeometryHalf = 0.25064090018695373;   // omega 1 -> 0.5 and 0.5 -> 1
constexpr double kGeometryTwoOne = 0.12532045009347687; // omega 2 -> 1

TEST_CASE("ramp hits its endpoints with zero velocity and acceleration") {
    const FrequencyProtocol p{1.0, 0.5, 3.0};
    for (double t : {0.0, 3.0}) {
        const FrequencySample s = omega_at(p, t);
        CHECK(s.omega_dot == doctest::Approx(0.0).epsilon(1e-15));
        CHECK(s.omega_ddot == doctest::Approx(0.0).epsilon(1e-15));
    }
    CHECK(omega_at(p, 0.0).omega == 1.0);
    CHECK(omega_at(p, 3.0).omega == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(omega_at(p, 1.5).omega == doctest::Approx(0.75).epsilon(1e-15));
    CHECK_THROWS_AS(omega_at(p, 3.5), DomainError);
}

TEST_CASE("ramp derivatives agree with finite differences") {
    const FrequencyProtocol p{0.5, 1.0, 2.0};
    for (double t : {0.3, 0.9, 1.7}) {
        const auto w = [&](double x) { return omega_at(p, x).omega; };
        const auto dw = [&](double x) { return omega_at(p, x).omega_dot; };
        CHECK(omega_at(p, t).omega_dot == doctest::Approx(oracle::derivative(w, t)).epsilon(1e-9));
        CHECK(omega_at(p, t).omega_ddot == doctest::Approx(oracle::derivative(dw, t)).epsilon(1e-9));
    }
}

TEST_CASE("bad protocols are rejected") {
    CHECK_THROWS_AS(validate(FrequencyProtocol{-1.0, 0.5, 1.0}), ProtocolError);
    CHECK_THROWS_AS(validate(FrequencyProtocol{1.0, 0.5, 0.0}), ProtocolError);
    CHECK_THROWS_AS(sta_cost(FrequencyProtocol{1.0, 0.5, 1.0}, -1.0), DomainError);
}

TEST_CASE("geometry factor matches reference values and the Gauss-Kronrod oracle") {
    CHECK(cost_geometry(1.0, 0.5).value == doctest::Approx(kGeometryHalf).epsilon(1e-13));
    CHECK(cost_geometry(0.5, 1.0).value == doctest::Approx(kGeometryHalf).epsilon(1e-13));
    CHECK(cost_geometry(2.0, 1.0).value == doctest::Approx(kGeometryTwoOne).epsilon(1e-13));
    for (auto [a, b] : {std::pair{1.0, 0.2}, std::pair{0.3, 1.7}, std::pair{5.0, 4.0}}) {
        const double g = cost_geometry(a, b).value;
        CHECK(g == doctest::Approx(oracle::cost_geometry(a, b)).epsilon(1e-12));
        CHECK(g == doctest::Approx(cost_geometry_fixed_rule(a, b)).epsilon(1e-12));
        CHECK(g > 0.0);
    }
}

TEST_CASE("literal time-domain cost equals geometry over tau squared") {
    const FrequencyProtocol p{1.0, 0.5, 2.5};
    const StaCost c = sta_cost(p, 3.0);
    CHECK(c.V == doctest::Approx(3.0 * kGeometryHalf / 6.25).epsilon(1e-10));
    const StaCostModel m = StaCostModel::for_frequencies(1.0, 0.5);
    CHECK(m.expansion(3.0, 2.5) == doctest::Approx(c.V).epsilon(1e-10));
    CHECK(m.compression_geometry == doctest::Approx(m.expansion_geometry).epsilon(1e-13));
}

TEST_CASE("adaptive quadrature reports its work") {
    const auto r = quad::integrate([](double x) { return std::exp(-x) * std::sin(5.0 * x); }, 0.0, 4.0);
    const double exact = (5.0 - std::exp(-4.0) * (std::sin(20.0) + 5.0 * std::cos(20.0))) / 26.0;
    CHECK(r.value == doctest::Approx(exact).epsilon(1e-12));
    CHECK(r.error < 1e-9);
    CHECK(r.intervals >= 1);
}
