#pragma once

#include <string_view>
#include <vector>

#include "otto/bath.hpp"
#include "otto/sta.hpp"

namespace otto {

/// Durations of the four strokes on the collision clock.
struct StrokeSchedule {
    double t_h = 1.0;   ///< hot isochore
    double t_c = 1.0;   ///< cold isochore
    double t_We = 1.0;  ///< expansion (omega_h -> omega_c)
    double t_Wc = 1.0;  ///< compression (omega_c -> omega_h)

    /// t_Q = p t_cycle split q : 1-q between hot and cold, and
    /// t_W = (1-p) t_cycle split r : 1-r between expansion and compression.
    static StrokeSchedule from_fractions(double t_cycle, double p, double q, double r);
    static StrokeSchedule quarters(double t_cycle) { return from_fractions(t_cycle, 0.5, 0.5, 0.5); }

    [[nodiscard]] double t_cycle() const { return t_h + t_c + t_We + t_Wc; }
    [[nodiscard]] double t_heat() const { return t_h + t_c; }
    [[nodiscard]] double t_work() const { return t_We + t_Wc; }
};

struct OttoConfig {
    AtomBath hot;
    AtomBath cold;
    double omega_h = 1.0;
    double omega_c = 0.5;
    StrokeSchedule schedule;
    /// Work-stroke time on the collision clock per unit of ramp time.
    double kappa = 1.0;
};

/// Throws on omega_h <= omega_c, non-positive durations or a non-thermalizing bath.
const OttoConfig& validate(const OttoConfig& cfg);

/// Hot stroke followed by cold stroke; the work strokes leave nbar unchanged.
double two_stroke_map(double nbar, const OttoConfig& cfg);

/// Start-of-cycle photon number of the steady cycle (fixed point of two_stroke_map).
double steady_cycle_nbar(const OttoConfig& cfg);

/// Photon number after the hot stroke of the steady cycle.
double nbar_hot(const OttoConfig& cfg);

/// nbar_hot - steady_cycle_nbar, from its own closed form.
double delta_nbar(const OttoConfig& cfg);

/// Start-of-cycle photon number after `cycles` full cycles from n0.
double nbar_after_cycles(double n0, int cycles, const OttoConfig& cfg);

struct CycleReport {
    double t_cycle = 0.0;
    double nbar_c = 0.0;
    double nbar_h = 0.0;
    double W = 0.0;
    double Q_h = 0.0;
    double Q_c = 0.0;
    double V_e = 0.0;
    double V_c = 0.0;
    double eta = 0.0;  ///< NaN when Q_h = 0
    double P = 0.0;

    /// False when the shortcut costs exceed the extracted work.
    [[nodiscard]] bool profitable() const { return W >= V_e + V_c; }
};

/// Steady-cycle bookkeeping. The overload without a cost model integrates
/// the ramp geometry on every call; sweeps should build the model once.
CycleReport run_cycle(const OttoConfig& cfg);
CycleReport run_cycle(const OttoConfig& cfg, const StaCostModel& costs);

enum class StrokePhase { Start, Hot, Expansion, Cold, Compression };

std::string_view to_string(StrokePhase phase);

struct TrajectorySample {
    double t = 0.0;
    double nbar = 0.0;
    int cycle = 0;
    StrokePhase phase = StrokePhase::Start;
};

/// Piecewise trajectory from n0: exponential arcs on heat strokes (sampled
/// `samples_per_heat_stroke` times each), flat across work strokes. The row
/// closing cycle j carries nbar_after_cycles(n0, j + 1).
std::vector<TrajectorySample> transient_trajectory(double n0, int cycles, const OttoConfig& cfg,
                                                   int samples_per_heat_stroke = 16);

}  // namespace otto
