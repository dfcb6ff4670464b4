#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "otto/cycle.hpp"
#include "otto/dynamics.hpp"
#include "otto/errors.hpp"

using namespace otto;

namespace {

OttoConfig sample_engine(double t_h = 3.0, double t_c = 2.0) {
    OttoConfig cfg;
    cfg.hot = make_bath(0.25, 0.375);
    cfg.cold = make_bath(11.0 / 73.0, 31.0 / 73.0);
    cfg.schedule = {t_h, t_c, 1.5, 2.5};
    return cfg;
}

oracle::Rates rates(const OttoConfig& c) {
    return {c.hot.E, c.hot.G, c.cold.E, c.cold.G, c.schedule.t_h, c.schedule.t_c};
}

}  // namespace

TEST_CASE("stroke fractions split the cycle") {
    const StrokeSchedule s = StrokeSchedule::from_fractions(10.0, 0.6, 0.7, 0.2);
    CHECK(s.t_h == doctest::Approx(4.2));
    CHECK(s.t_c == doctest::Approx(1.8));
    CHECK(s.t_We == doctest::Approx(0.8));
    CHECK(s.t_Wc == doctest::Approx(3.2));
    CHECK(s.t_cycle() == doctest::Approx(10.0));
    CHECK(StrokeSchedule::quarters(8.0).t_We == 2.0);
    CHECK_THROWS_AS(StrokeSchedule::from_fractions(10.0, 1.0, 0.5, 0.5), DomainError);
    CHECK_THROWS_AS(StrokeSchedule::from_fractions(-1.0, 0.5, 0.5, 0.5), DomainError);
}

TEST_CASE("steady cycle agrees with the iterated ODE map") {
    for (double t_h : {0.05, 1.0, 3.0, 30.0}) {
        const OttoConfig cfg = sample_engine(t_h, 2.0);
        const double n = oracle::iterate_to_fixed_point(rates(cfg));
        CHECK(steady_cycle_nbar(cfg) == doctest::Approx(n).epsilon(1e-10));
        const double after_hot = oracle::ode_nbar(n, t_h, cfg.hot.E, cfg.hot.G);
        CHECK(nbar_hot(cfg) == doctest::Approx(after_hot).epsilon(1e-10));
        CHECK(delta_nbar(cfg) == doctest::Approx(after_hot - n).epsilon(1e-9));
    }
}

TEST_CASE("tiny exponents use the series without losing the limit") {
    OttoConfig cfg = sample_engine();
    cfg.schedule.t_h = 1e-10;
    cfg.schedule.t_c = 1e-10;
    const double a = cfg.hot.delta() * 1e-10;
    const double b = cfg.cold.delta() * 1e-10;
    const double expected = (nbar_ss(cfg.hot) * a + nbar_ss(cfg.cold) * b) / (a + b);
    CHECK(steady_cycle_nbar(cfg) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(delta_nbar(cfg) > 0.0);
}

TEST_CASE("long heat strokes thermalize fully") {
    const OttoConfig cfg = sample_engine(400.0, 400.0);
    CHECK(steady_cycle_nbar(cfg) == doctest::Approx(nbar_ss(cfg.cold)).epsilon(1e-14));
    CHECK(nbar_hot(cfg) == doctest::Approx(nbar_ss(cfg.hot)).epsilon(1e-14));
}

TEST_CASE("transient closed form matches explicit iteration") {
    const OttoConfig cfg = sample_engine();
    double n = 7.0;
    for (int d = 1; d <= 20; ++d) {
        n = two_stroke_map(n, cfg);
        CHECK(nbar_after_cycles(7.0, d, cfg) == doctest::Approx(n).epsilon(1e-13));
    }
    CHECK(nbar_after_cycles(7.0, 0, cfg) == 7.0);
    CHECK_THROWS_AS(nbar_after_cycles(7.0, -1, cfg), DomainError);
}

TEST_CASE("trajectory rows") {
    const OttoConfig cfg = sample_engine();
    const auto rows = transient_trajectory(0.0, 5, cfg, 8);
    CHECK(rows.size() == 1 + 5 * (2 * 8 + 2));
    for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k].t >= rows[k - 1].t);
    int cycle = 0;
    for (const auto& r : rows) {
        if (r.phase == StrokePhase::Compression) {
            ++cycle;
            CHECK(r.nbar == nbar_after_cycles(0.0, cycle, cfg));
            CHECK(r.t == doctest::Approx(cycle * cfg.schedule.t_cycle()));
        }
    }
    // Starting on the steady cycle stays on it.
    const double sc = steady_cycle_nbar(cfg);
    for (const auto& r : transient_trajectory(sc, 3, cfg, 4)) {
        if (r.phase == StrokePhase::Compression) CHECK(r.nbar == doctest::Approx(sc).epsilon(1e-14));
    }
}

TEST_CASE("report bookkeeping") {
    const OttoConfig cfg = sample_engine();
    const CycleReport r = run_cycle(cfg);
    CHECK(r.Q_h + r.Q_c == doctest::Approx(r.W));
    CHECK(r.W == doctest::Approx(0.5 * (r.nbar_h - r.nbar_c)));
    CHECK(r.P == doctest::Approx((r.W - r.V_e - r.V_c) / 9.0));
    CHECK(r.eta == doctest::Approx(1.0 - 0.5 - (r.V_e + r.V_c) / r.Q_h));
    CHECK(r.V_e == doctest::Approx(r.nbar_h * 0.25064090018695373 / (1.5 * 1.5)).epsilon(1e-12));
    CHECK(r.V_c == doctest::Approx(r.nbar_c * 0.25064090018695373 / (2.5 * 2.5)).epsilon(1e-12));
    CHECK(r.profitable() == (r.W >= r.V_e + r.V_c));
}

TEST_CASE("kappa stretches the ramps") {
    OttoConfig cfg = sample_engine();
    const CycleReport one = run_cycle(cfg);
    cfg.kappa = 2.0;
    const CycleReport two = run_cycle(cfg);
    CHECK(two.V_e == doctest::Approx(4.0 * one.V_e));
    CHECK(two.W == one.W);
}

TEST_CASE("invalid engines are rejected") {
    OttoConfig cfg = sample_engine();
    cfg.omega_c = 1.5;
    CHECK_THROWS_AS(run_cycle(cfg), DomainError);
    cfg = sample_engine();
    cfg.schedule.t_We = 0.0;
    CHECK_THROWS_AS(run_cycle(cfg), DomainError);
    cfg = sample_engine();
    cfg.kappa = 0.0;
    CHECK_THROWS_AS(run_cycle(cfg), DomainError);
}
