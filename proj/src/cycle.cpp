#include "otto/cycle.hpp"

#include <cmath>
#include <limits>

#include "otto/dynamics.hpp"
#include "otto/errors.hpp"

namespace otto {

namespace {

// Relaxation exponents a = Delta_h t_h, b = Delta_c t_c and the weights the
// steady-cycle closed forms are built from. In sinh notation
//   w_a = e^{b/2} sinh(a/2) / sinh((a+b)/2),
// written here with expm1 so that neither large nor small exponents lose digits.
struct HeatWeights {
    double decay_h;  // e^{-a}
    double decay_c;  // e^{-b}
    double w_a;      // (1 - e^{-a}) / (1 - e^{-a-b})
    double w_b;      // (1 - e^{-b}) / (1 - e^{-a-b})
};

// (1 - e^{-x}) / (1 - e^{-(x+y)}), with a series below total exponent 1e-8.
double weight(double x, double y) {
    const double s = x + y;
    if (s < 1e-8) {
        return (x / s) * (1.0 + y / 2.0 + y * (y - x) / 12.0);
    }
    return std::expm1(-x) / std::expm1(-s);
}

HeatWeights heat_weights(const OttoConfig& cfg) {
    const double a = cfg.hot.delta() * cfg.schedule.t_h;
    const double b = cfg.cold.delta() * cfg.schedule.t_c;
    return {std::exp(-a), std::exp(-b), weight(a, b), weight(b, a)};
}

}  // namespace

StrokeSchedule StrokeSchedule::from_fractions(double t_cycle, double p, double q, double r) {
    if (!(t_cycle > 0.0)) {
        throw DomainError("cycle time must be positive");
    }
    for (double f : {p, q, r}) {
        if (!(f > 0.0 && f < 1.0)) {
            throw DomainError("stroke fractions p, q, r must lie in (0, 1)");
        }
    }
    const double t_heat = p * t_cycle;
    const double t_work = t_cycle - t_heat;
    return {q * t_heat, t_heat - q * t_heat, r * t_work, t_work - r * t_work};
}

const OttoConfig& validate(const OttoConfig& cfg) {
    validate(cfg.hot);
    validate(cfg.cold);
    if (!(cfg.omega_c > 0.0) || !(cfg.omega_h > cfg.omega_c)) {
        throw DomainError("engine needs omega_h > omega_c > 0");
    }
    const auto& s = cfg.schedule;
    if (!(s.t_h > 0.0 && s.t_c > 0.0 && s.t_We > 0.0 && s.t_Wc > 0.0)) {
        throw DomainError("all stroke durations must be positive");
    }
    if (!(cfg.kappa > 0.0)) {
        throw DomainError("clock conversion kappa must be positive");
    }
    return cfg;
}

double two_stroke_map(double nbar, const OttoConfig& cfg) {
    const double after_hot = nbar_evolve(nbar, cfg.schedule.t_h, cfg.hot);
    return nbar_evolve(after_hot, cfg.schedule.t_c, cfg.cold);
}

double steady_cycle_nbar(const OttoConfig& cfg) {
    validate(cfg);
    const HeatWeights w = heat_weights(cfg);
    return nbar_ss(cfg.hot) * w.decay_c * w.w_a + nbar_ss(cfg.cold) * w.w_b;
}

double nbar_hot(const OttoConfig& cfg) {
    validate(cfg);
    const HeatWeights w = heat_weights(cfg);
    return nbar_ss(cfg.hot) * w.w_a + nbar_ss(cfg.cold) * w.decay_h * w.w_b;
}

double delta_nbar(const OttoConfig& cfg) {
    validate(cfg);
    const HeatWeights w = heat_weights(cfg);
    const double b = cfg.cold.delta() * cfg.schedule.t_c;
    return (nbar_ss(cfg.hot) - nbar_ss(cfg.cold)) * w.w_a * -std::expm1(-b);
}

double nbar_after_cycles(double n0, int cycles, const OttoConfig& cfg) {
    if (cycles < 0) {
        throw DomainError("cycle count must be >= 0");
    }
    const double steady = steady_cycle_nbar(cfg);
    const double per_cycle = cfg.hot.delta() * cfg.schedule.t_h + cfg.cold.delta() * cfg.schedule.t_c;
    return std::exp(-cycles * per_cycle) * (n0 - steady) + steady;
}

CycleReport run_cycle(const OttoConfig& cfg) {
    validate(cfg);
    return run_cycle(cfg, StaCostModel::for_frequencies(cfg.omega_h, cfg.omega_c));
}

CycleReport run_cycle(const OttoConfig& cfg, const StaCostModel& costs) {
    validate(cfg);
    CycleReport report;
    report.t_cycle = cfg.schedule.t_cycle();
    report.nbar_c = steady_cycle_nbar(cfg);
    report.nbar_h = nbar_hot(cfg);
    const double dn = delta_nbar(cfg);
    report.W = (cfg.omega_h - cfg.omega_c) * dn;
    report.Q_h = cfg.omega_h * dn;
    report.Q_c = -cfg.omega_c * dn;
    report.V_e = costs.expansion(report.nbar_h, cfg.schedule.t_We / cfg.kappa);
    report.V_c = costs.compression(report.nbar_c, cfg.schedule.t_Wc / cfg.kappa);
    const double net = report.W - report.V_e - report.V_c;
    report.eta = report.Q_h != 0.0 ? net / report.Q_h : std::numeric_limits<double>::quiet_NaN();
    report.P = net / report.t_cycle;
    return report;
}

std::string_view to_string(StrokePhase phase) {
    switch (phase) {
        case StrokePhase::Start: return "start";
        case StrokePhase::Hot: return "hot";
        case StrokePhase::Expansion: return "expansion";
        case StrokePhase::Cold: return "cold";
        case StrokePhase::Compression: return "compression";
    }
    return "?";
}

std::vector<TrajectorySample> transient_trajectory(double n0, int cycles, const OttoConfig& cfg,
                                                   int samples_per_heat_stroke) {
    validate(cfg);
    if (cycles < 0 || samples_per_heat_stroke < 1) {
        throw DomainError("trajectory needs cycles >= 0 and at least one sample per stroke");
    }
    const auto& s = cfg.schedule;
    const int k = samples_per_heat_stroke;
    std::vector<TrajectorySample> out;
    out.reserve(static_cast<std::size_t>(cycles) * (2 * k + 2) + 1);
    out.push_back({0.0, n0, 0, StrokePhase::Start});

    for (int j = 0; j < cycles; ++j) {
        const double t0 = j * s.t_cycle();
        const double start = nbar_after_cycles(n0, j, cfg);
        const double end = nbar_after_cycles(n0, j + 1, cfg);
        for (int i = 1; i <= k; ++i) {
            const double dt = s.t_h * i / k;
            out.push_back({t0 + dt, nbar_evolve(start, dt, cfg.hot), j, StrokePhase::Hot});
        }
        const double after_hot = out.back().nbar;
        const double t_cold = t0 + s.t_h + s.t_We;
        out.push_back({t_cold, after_hot, j, StrokePhase::Expansion});
        for (int i = 1; i < k; ++i) {
            const double dt = s.t_c * i / k;
            out.push_back({t_cold + dt, nbar_evolve(after_hot, dt, cfg.cold), j, StrokePhase::Cold});
        }
        out.push_back({t_cold + s.t_c, end, j, StrokePhase::Cold});
        out.push_back({t0 + s.t_cycle(), end, j, StrokePhase::Compression});
    }
    return out;
}

}  // namespace otto
