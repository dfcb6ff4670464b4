#include "otto/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "otto/errors.hpp"

namespace otto {

namespace {

constexpr double kInvPhi = 0.6180339887498948482;  // 1/golden ratio

// Golden-section maximization of f on [lo, hi]; returns (argmax, value).
template <class F>
std::pair<double, double> golden_max(const F& f, double lo, double hi, double tol) {
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f(x1);
        }
    }
    return f1 >= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

double& coordinate(Fractions& f, int index) {
    return index == 0 ? f.p : (index == 1 ? f.q : f.r);
}

}  // namespace

EngineModel EngineModel::make(const AtomBath& hot, const AtomBath& cold, double omega_h,
                              double omega_c, double kappa) {
    EngineModel engine{hot, cold, omega_h, omega_c, kappa, {}};
    validate(engine.config(StrokeSchedule::quarters(1.0)));
    engine.costs = StaCostModel::for_frequencies(omega_h, omega_c);
    return engine;
}

OttoConfig EngineModel::config(const StrokeSchedule& schedule) const {
    return {hot, cold, omega_h, omega_c, schedule, kappa};
}

CycleReport EngineModel::report(double t_cycle, const Fractions& f) const {
    return run_cycle(config(StrokeSchedule::from_fractions(t_cycle, f.p, f.q, f.r)), costs);
}

double EngineModel::power(double t_cycle, const Fractions& f) const {
    return report(t_cycle, f).P;
}

bool Optimum::dominates_certificate(double rel_tol) const {
    return std::all_of(certificate.begin(), certificate.end(), [&](const Neighbor& n) {
        return power >= n.value - rel_tol * std::abs(power);
    });
}

Optimum peak_power(const EngineModel& engine, const Fractions& f, const PowerScan& scan) {
    if (!(scan.t_min > 0.0) || !(scan.t_max > scan.t_min) || scan.grid < 3) {
        throw DomainError("power scan needs 0 < t_min < t_max and at least 3 grid points");
    }
    const double log_lo = std::log(scan.t_min);
    const double step = (std::log(scan.t_max) - log_lo) / (scan.grid - 1);
    auto power_at_log = [&](double log_t) { return engine.power(std::exp(log_t), f); };

    int best = 0;
    double best_power = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < scan.grid; ++k) {
        const double value = power_at_log(log_lo + k * step);
        if (value > best_power) {
            best_power = value;
            best = k;
        }
    }
    const double lo = log_lo + std::max(best - 1, 0) * step;
    const double hi = log_lo + std::min(best + 1, scan.grid - 1) * step;
    auto [log_t, value] = golden_max(power_at_log, lo, hi, scan.rel_tol);
    if (value < best_power) {
        log_t = log_lo + best * step;
        value = best_power;
    }

    Optimum opt;
    opt.t_cycle = std::exp(log_t);
    opt.fractions = f;
    opt.power = value;
    opt.at_scan_boundary = best == 0 || best == scan.grid - 1;
    for (double factor : {1.0 - 1e-3, 1.0 + 1e-3}) {
        const double t = opt.t_cycle * factor;
        opt.certificate.push_back({"t_cycle", t, engine.power(t, f)});
    }
    return opt;
}

Optimum max_power_tcycle(const EngineModel& engine, const Fractions& f, const PowerScan& scan) {
    Optimum opt = peak_power(engine, f, scan);
    if (!(opt.power > 0.0)) {
        std::ostringstream os;
        os << "no profitable cycle time in [" << scan.t_min << ", " << scan.t_max
           << "]; best power " << opt.power << " at t_cycle " << opt.t_cycle;
        throw NoProfitableCycle(os.str());
    }
    return opt;
}

AscentResult coordinate_ascent(const std::function<double(const Fractions&)>& objective,
                               const Fractions& start, const CoordinateAscentOptions& options) {
    if (!(options.lo > 0.0 && options.hi < 1.0 && options.lo < options.hi) || options.grid < 3) {
        throw DomainError("coordinate search range must sit inside (0, 1) with >= 3 grid points");
    }
    AscentResult result;
    result.argmax = start;
    result.value = objective(start);
    const double step = (options.hi - options.lo) / (options.grid - 1);

    for (int round = 0; round < options.max_rounds; ++round) {
        const double before = result.value;
        for (int axis = 0; axis < 3; ++axis) {
            Fractions trial = result.argmax;
            auto along = [&](double x) {
                coordinate(trial, axis) = x;
                return objective(trial);
            };
            const double current = coordinate(result.argmax, axis);
            double best_x = current;
            double best_value = result.value;
            for (int k = 0; k < options.grid; ++k) {
                const double x = options.lo + k * step;
                const double value = along(x);
                if (value > best_value) {
                    best_value = value;
                    best_x = x;
                }
            }
            const double lo = std::max(options.lo, best_x - step);
            const double hi = std::min(options.hi, best_x + step);
            const auto [x, value] = golden_max(along, lo, hi, options.coordinate_tol);
            if (value > best_value) {
                best_value = value;
                best_x = x;
            }
            if (best_value > result.value) {
                coordinate(result.argmax, axis) = best_x;
                result.value = best_value;
            }
        }
        result.rounds = round + 1;
        result.history.push_back(result.value);
        if (result.value - before < options.improvement_tol) {
            break;
        }
    }
    return result;
}

PqrResult max_power_pqr(const SweepSpec& spec) {
    auto objective = [&spec](const Fractions& f) {
        return peak_power(spec.engine, f, spec.scan).power;
    };

    PqrResult result;
    result.baseline = peak_power(spec.engine, spec.start, spec.scan);
    result.ascent = coordinate_ascent(objective, spec.start, spec.ascent);
    result.optimum = peak_power(spec.engine, result.ascent.argmax, spec.scan);

    constexpr double nudge = 1e-3;
    const char* names[] = {"p", "q", "r"};
    for (int axis = 0; axis < 3; ++axis) {
        for (double sign : {-1.0, 1.0}) {
            Fractions f = result.ascent.argmax;
            double& x = coordinate(f, axis);
            x = std::clamp(x + sign * nudge, 1e-9, 1.0 - 1e-9);
            result.optimum.certificate.push_back({names[axis], x, objective(f)});
        }
    }

    const auto& opt = result.ascent.argmax;
    const Fractions section_base[] = {
        spec.start, {opt.p, spec.start.q, spec.start.r}, {opt.p, opt.q, spec.start.r}};
    const int n = spec.cross_section_points;
    for (int axis = 0; axis < 3 && n >= 2; ++axis) {
        CrossSection section;
        section.variable = names[axis][0];
        section.fixed = section_base[axis];
        for (int k = 0; k < n; ++k) {
            Fractions f = section.fixed;
            const double x = spec.ascent.lo + (spec.ascent.hi - spec.ascent.lo) * k / (n - 1);
            coordinate(f, axis) = x;
            const Optimum peak = peak_power(spec.engine, f, spec.scan);
            section.points.push_back({x, peak.power, peak.t_cycle});
        }
        result.cross_sections.push_back(std::move(section));
    }

    if (!(result.optimum.power > 0.0)) {
        throw NoProfitableCycle("optimized stroke fractions still give no positive power");
    }
    return result;
}

PiSweepResult pi_sweep(const BathPair& incoherent, double omega_h, double omega_c, double kappa,
                       const Fractions& fractions, double reference_t_cycle, int points,
                       const PowerScan& scan) {
    if (points < 2) {
        throw DomainError("pi sweep needs at least two points");
    }
    PiSweepResult result;
    const StaCostModel costs = StaCostModel::for_frequencies(omega_h, omega_c);
    double best_power = -std::numeric_limits<double>::infinity();
    double best_work = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < points; ++k) {
        const double pi = static_cast<double>(k) / (points - 1);
        const BathPair pair = make_pair_pi(pi, incoherent);
        EngineModel engine{pair.hot, pair.cold, omega_h, omega_c, kappa, costs};
        const Optimum peak = peak_power(engine, fractions, scan);
        PiSweepRow row{pi, peak.power, peak.t_cycle, engine.report(reference_t_cycle, fractions).W};
        if (row.max_power > best_power) {
            best_power = row.max_power;
            result.argmax_pi_power = pi;
        }
        if (row.work_at_reference > best_work) {
            best_work = row.work_at_reference;
            result.argmax_pi_work = pi;
        }
        result.rows.push_back(row);
    }
    return result;
}

}  // namespace otto
