#include "otto/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "otto/dynamics.hpp"
#include "otto/errors.hpp"

namespace otto::sampling {

namespace {

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double log_uniform(Rng& rng, double lo, double hi) {
    return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

std::pair<double, double> draw_photon_numbers(Rng& rng) {
    const double hot = uniform(rng, 1.0, 5.0);
    return {hot, uniform(rng, 0.1, 0.9 * hot)};
}

AtomBath rate_bath(Rng& rng, double steady, const char* label) {
    // G = Delta (2 nbar + 1) must stay below 1.
    const double cap = std::min(1.0, 0.99 / (2.0 * steady + 1.0));
    const double delta = log_uniform(rng, 1e-2, cap);
    const double E = steady * delta;
    return make_bath(E, E + delta, 2, label);
}

StrokeSchedule draw_schedule(Rng& rng) {
    StrokeSchedule s;
    s.t_h = uniform(rng, 0.1, 20.0);
    s.t_c = uniform(rng, 0.1, 20.0);
    s.t_We = uniform(rng, 0.1, 20.0);
    s.t_Wc = uniform(rng, 0.1, 20.0);
    return s;
}

}  // namespace

OttoConfig draw_rate_config(Rng& rng) {
    const auto [hot, cold] = draw_photon_numbers(rng);
    OttoConfig cfg;
    cfg.hot = rate_bath(rng, hot, "draw.hot");
    cfg.cold = rate_bath(rng, cold, "draw.cold");
    cfg.schedule = draw_schedule(rng);
    return validate(cfg);
}

PairDraw draw_pairs(Rng& rng) {
    constexpr double omega = 1.0;
    for (;;) {
        const auto [hot, cold] = draw_photon_numbers(rng);
        const StrokeSchedule schedule = draw_schedule(rng);
        const double beta_h = temperature_from_nbar(hot, omega);
        const double beta_c = temperature_from_nbar(cold, omega);
        try {
            PairDraw draw{make_pair(PairKind::I, beta_h, beta_c, omega),
                          make_pair(PairKind::CH, beta_h, beta_c, omega),
                          make_pair(PairKind::CC, beta_h, beta_c, omega),
                          {}};
            draw.engine.hot = draw.incoherent.hot;
            draw.engine.cold = draw.incoherent.cold;
            draw.engine.schedule = schedule;
            return draw;
        } catch (const Infeasible&) {
            continue;
        }
    }
}

}  // namespace otto::sampling
