#pragma once

#include <functional>
#include <string>
#include <vector>

#include "otto/bath.hpp"
#include "otto/cycle.hpp"
#include "otto/sta.hpp"

namespace otto {

/// Stroke fractions: p splits heat vs work time, q hot vs cold, r expansion vs compression.
struct Fractions {
    double p = 0.5;
    double q = 0.5;
    double r = 0.5;
};

/// Everything about an engine except its schedule; the ramp geometry is integrated once.
struct EngineModel {
    AtomBath hot;
    AtomBath cold;
    double omega_h = 1.0;
    double omega_c = 0.5;
    double kappa = 1.0;
    StaCostModel costs;

    static EngineModel make(const AtomBath& hot, const AtomBath& cold, double omega_h,
                            double omega_c, double kappa = 1.0);

    [[nodiscard]] OttoConfig config(const StrokeSchedule& schedule) const;
    [[nodiscard]] CycleReport report(double t_cycle, const Fractions& f) const;
    [[nodiscard]] double power(double t_cycle, const Fractions& f) const;
};

/// Log-spaced scan over t_cycle followed by golden-section refinement of the peak.
struct PowerScan {
    double t_min = 1e-2;
    double t_max = 1e3;
    int grid = 200;
    double rel_tol = 1e-6;
};

struct Neighbor {
    std::string label;
    double at = 0.0;
    double value = 0.0;
};

struct Optimum {
    double t_cycle = 0.0;
    Fractions fractions;
    double power = 0.0;
    bool at_scan_boundary = false;
    /// Evaluations next to the argmax; the optimum dominates every entry.
    std::vector<Neighbor> certificate;

    [[nodiscard]] bool dominates_certificate(double rel_tol = 1e-12) const;
};

/// Peak of P over t_cycle at fixed fractions, whatever its sign.
Optimum peak_power(const EngineModel& engine, const Fractions& f, const PowerScan& scan = {});

/// As peak_power but throws NoProfitableCycle when the peak is not positive.
Optimum max_power_tcycle(const EngineModel& engine, const Fractions& f, const PowerScan& scan = {});

struct CoordinateAscentOptions {
    double lo = 0.01;
    double hi = 0.99;
    int grid = 49;
    double coordinate_tol = 1e-7;
    double improvement_tol = 1e-8;
    int max_rounds = 20;
};

struct AscentResult {
    Fractions argmax;
    double value = 0.0;
    int rounds = 0;
    std::vector<double> history;  ///< objective after each round
};

/// Cyclic coordinate ascent over (p, q, r): grid then golden-section on each
/// coordinate in turn. A coordinate only moves on strict improvement.
AscentResult coordinate_ascent(const std::function<double(const Fractions&)>& objective,
                               const Fractions& start, const CoordinateAscentOptions& options = {});

struct CrossSectionPoint {
    double value = 0.0;  ///< the varied fraction
    double max_power = 0.0;
    double t_cycle = 0.0;
};

struct CrossSection {
    char variable = 'p';
    Fractions fixed;
    std::vector<CrossSectionPoint> points;
};

struct SweepSpec {
    EngineModel engine;
    Fractions start;
    PowerScan scan;
    CoordinateAscentOptions ascent;
    int cross_section_points = 99;
};

struct PqrResult {
    Optimum optimum;
    AscentResult ascent;
    Optimum baseline;  ///< peak at the start fractions
    /// p with q, r at the start; q with the optimal p and start r; r with optimal p, q.
    std::vector<CrossSection> cross_sections;
};

/// Maximizes the peak power over (p, q, r). Throws NoProfitableCycle if even the
/// optimized peak is not positive.
PqrResult max_power_pqr(const SweepSpec& spec);

struct PiSweepRow {
    double pi = 0.0;
    double max_power = 0.0;
    double t_cycle_at_max = 0.0;
    double work_at_reference = 0.0;  ///< per-cycle W at the reference cycle time
};

struct PiSweepResult {
    std::vector<PiSweepRow> rows;
    double argmax_pi_power = 0.0;
    double argmax_pi_work = 0.0;
};

/// Peak power and per-cycle work along pi in [0, 1] (`points` values, endpoints included).
PiSweepResult pi_sweep(const BathPair& incoherent, double omega_h, double omega_c, double kappa,
                       const Fractions& fractions, double reference_t_cycle, int points = 21,
                       const PowerScan& scan = {});

}  // namespace otto
