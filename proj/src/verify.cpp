#include "otto/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>

#include "otto/analysis.hpp"
#include "otto/dynamics.hpp"
#include "otto/errors.hpp"
#include "otto/fock.hpp"
#include "otto/sampling.hpp"
#include "otto/sta.hpp"

namespace otto::verify {

namespace {

PropertyCheck bound(std::string name, double measured, double tolerance, std::string detail = {}) {
    return {std::move(name), measured, tolerance, std::isfinite(measured) && measured <= tolerance,
            std::move(detail)};
}

// Central difference of f along Delta of one bath with Richardson extrapolation.
double constrained_derivative(const std::function<double(const OttoConfig&)>& f,
                              const OttoConfig& cfg, Side side) {
    const double delta = side == Side::Hot ? cfg.hot.delta() : cfg.cold.delta();
    auto central = [&](double h) {
        return (f(with_delta(cfg, side, delta + h)) - f(with_delta(cfg, side, delta - h))) / (2.0 * h);
    };
    const double h = 1e-3 * delta;
    return (4.0 * central(h / 2.0) - central(h)) / 3.0;
}

// Relative error with a floor at the resolution of a difference quotient of f.
double derivative_error(double analytic, double numeric, double value, double delta) {
    const double floor = 1e-10 * std::abs(value) / delta;
    return std::abs(analytic - numeric) / std::max(std::abs(analytic), floor);
}

std::vector<PropertyCheck> fock_checks(const io::RunConfig& cfg) {
    const AtomBath bath = make_bath(0.2, 0.4, 2, "fock");
    constexpr int cutoff = 120;
    fock::FockDensity rho = fock::vacuum(cutoff);
    double worst = 0.0;
    for (int k = 1; k <= 50; ++k) {
        rho = fock::propagate(rho, 1.0, bath);
        worst = std::max(worst, std::abs(rho.mean() - nbar_evolve(0.0, k, bath)));
    }
    const fock::FockDensity steady = fock::thermal(bath, cutoff);
    const double drift = fock::total_variation(fock::propagate(steady, 1.0, bath), steady);
    return {bound("fock_vs_closed_form", worst, cfg.tol_fock, "N_cut=120 E=0.2 G=0.4 t<=50"),
            bound("fock_stationarity", drift, cfg.tol_stationarity, "TV drift per unit time")};
}

std::vector<PropertyCheck> cycle_checks(const io::RunConfig& cfg) {
    sampling::Rng rng(cfg.seed);
    double fixed = 0.0;
    double after = 0.0;
    for (int d = 0; d < cfg.draws; ++d) {
        const OttoConfig engine = sampling::draw_rate_config(rng);
        double n = 0.0;
        for (int k = 0; k < 500; ++k) n = two_stroke_map(n, engine);
        fixed = std::max(fixed, std::abs(n - steady_cycle_nbar(engine)));
        const double n0 = 3.0 * nbar_ss(engine.hot);
        double iterated = n0;
        for (int delta = 1; delta <= 20; ++delta) {
            iterated = two_stroke_map(iterated, engine);
            after = std::max(after, std::abs(iterated - nbar_after_cycles(n0, delta, engine)));
        }
    }
    return {bound("steady_cycle_fixed_point", fixed, cfg.tol_fixed_point, "500 iterated maps"),
            bound("after_cycles_closed_form", after, cfg.tol_after_cycles, "delta <= 20")};
}

std::vector<PropertyCheck> sta_checks(const io::RunConfig& cfg) {
    // Steep and nearly flat ramps as well as the engine's own pair.
    const std::array<std::pair<double, double>, 8> ramps{{{cfg.omega_h, cfg.omega_c},
                                                          {cfg.omega_c, cfg.omega_h},
                                                          {1.0, 0.2},
                                                          {0.2, 1.0},
                                                          {3.0, 1.0},
                                                          {1.0, 0.1},
                                                          {0.1, 1.0},
                                                          {2.0, 1.9}}};
    double agreement = 0.0;
    for (const auto& [wi, wf] : ramps) {
        const double adaptive = cost_geometry(wi, wf).value;
        const double fixed = cost_geometry_fixed_rule(wi, wf);
        agreement = std::max(agreement, std::abs(adaptive - fixed) / std::abs(fixed));
    }
    const FrequencyProtocol slow{cfg.omega_h, cfg.omega_c, 2.0};
    const FrequencyProtocol fast{cfg.omega_h, cfg.omega_c, 1.0};
    const double v1 = sta_cost(fast, 1.0).V;
    const double v2 = sta_cost(slow, 1.0).V;
    const double scaling = std::abs(v2 - v1 / 4.0) / std::abs(v1 / 4.0);
    return {bound("quadrature_agreement", agreement, cfg.tol_quadrature, "adaptive vs fixed Gauss rule"),
            bound("sta_tau_scaling", scaling, 1e-8, "V(2 tau) = V(tau)/4")};
}

std::vector<PropertyCheck> ordering_checks(const io::RunConfig& cfg) {
    sampling::Rng rng(cfg.seed + 1);
    const StaCostModel costs = StaCostModel::for_frequencies(1.0, 0.5);
    int eta_cc = 0;
    int eta_ch = 0;
    int power_cc = 0;
    int b4_applied = 0;
    int b4_wrong = 0;
    int sign_mismatch = 0;
    for (int d = 0; d < cfg.draws; ++d) {
        const sampling::PairDraw draw = sampling::draw_pairs(rng);
        OttoConfig i = draw.engine;
        OttoConfig ch = i;
        ch.hot = draw.coherent_hot.hot;
        ch.cold = draw.coherent_hot.cold;
        OttoConfig cc = i;
        cc.hot = draw.coherent_cold.hot;
        cc.cold = draw.coherent_cold.cold;
        const CycleReport ri = run_cycle(i, costs);
        const CycleReport rch = run_cycle(ch, costs);
        const CycleReport rcc = run_cycle(cc, costs);
        eta_cc += !(rcc.eta > ri.eta);
        eta_ch += !(rch.eta < ri.eta);
        power_cc += !(rcc.P > ri.P);
        try {
            efficiency_ordering(draw.incoherent, draw.coherent_cold, i, costs);
            efficiency_ordering(draw.incoherent, draw.coherent_hot, i, costs);
        } catch (const InconsistentOrdering&) {
            ++sign_mismatch;
        }
        const CostRates rates = cost_rates(i, costs);
        const PowerVerdict v = power_monotonicity(i, rates.I_e, rates.I_c);
        sign_mismatch += !v.signs_agree;
        if (v.applicable && v.increasing_in_delta_h) {
            ++b4_applied;
            b4_wrong += !(rch.P <= ri.P);
        }
    }
    std::ostringstream b4;
    b4 << "condition held on " << b4_applied << " draws";
    return {bound("eta_CC_above_I", eta_cc, 0, "violations"),
            bound("eta_CH_below_I", eta_ch, 0, "violations"),
            bound("power_CC_above_I", power_cc, 0, "violations"),
            bound("power_condition_predicts_CH", b4_wrong, 0, b4.str()),
            bound("analytic_vs_direct_signs", sign_mismatch, 0, "violations")};
}

std::vector<PropertyCheck> derivative_checks(const io::RunConfig& cfg) {
    sampling::Rng rng(cfg.seed + 2);
    const StaCostModel costs = StaCostModel::for_frequencies(1.0, 0.5);
    double worst = 0.0;
    std::string worst_name = "none";
    int negative = 0;
    double zeta_gap = 0.0;
    auto consider = [&](const char* name, double analytic, const std::function<double(const OttoConfig&)>& f,
                        const OttoConfig& engine, Side side) {
        const double delta = side == Side::Hot ? engine.hot.delta() : engine.cold.delta();
        const double err = derivative_error(analytic, constrained_derivative(f, engine, side),
                                            f(engine), delta);
        if (err > worst) {
            worst = err;
            worst_name = name;
        }
    };
    auto work = [](const OttoConfig& c) { return delta_nbar(c); };
    auto start = [](const OttoConfig& c) { return steady_cycle_nbar(c); };
    auto hot = [](const OttoConfig& c) { return nbar_hot(c); };
    auto zeta = [](const OttoConfig& c) { return zeta_values(c).zeta_h; };

    for (int d = 0; d < cfg.draws; ++d) {
        const OttoConfig engine = sampling::draw_rate_config(rng);
        const DerivativeReport r = derivative_report(engine, costs);
        consider("work_h", r.work.d_delta_h, work, engine, Side::Hot);
        consider("work_c", r.work.d_delta_c, work, engine, Side::Cold);
        consider("nsc_h", r.cost.dnsc_d_delta_h, start, engine, Side::Hot);
        consider("nsc_c", r.cost.dnsc_d_delta_c, start, engine, Side::Cold);
        consider("nh_h", r.cost.dnh_d_delta_h, hot, engine, Side::Hot);
        consider("nh_c", r.cost.dnh_d_delta_c, hot, engine, Side::Cold);
        consider("zeta_h", r.zeta.d_delta_h, zeta, engine, Side::Hot);
        consider("zeta_c", r.zeta.d_delta_c, zeta, engine, Side::Cold);
        const CostRates rates = cost_rates(engine, costs);
        consider("power_h", r.dP_dDelta_h,
                 [&rates](const OttoConfig& c) { return power_with_rates(c, rates); }, engine, Side::Hot);
        for (double v : {r.work.alpha_h, r.work.alpha_c, r.cost.gamma_h, r.cost.gamma_c, r.cost.xi_h,
                         r.cost.xi_c}) {
            negative += !(v > 0.0);
        }
        zeta_gap = std::max(zeta_gap, std::abs(r.zeta.zeta_h - r.zeta.zeta_c - 1.0));
    }
    return {bound("derivatives_vs_finite_difference", worst, cfg.tol_derivative, "worst: " + worst_name),
            bound("alpha_gamma_xi_positive", negative, 0, "violations"),
            bound("zeta_gap_is_one", zeta_gap, cfg.tol_zeta)};
}

std::vector<PropertyCheck> pi_checks(const io::RunConfig& cfg) {
    const BathPair base = io::build_pair(cfg, PairKind::I);
    if (base.kind != PairKind::I) {
        return {{"pi_endpoints", 0.0, cfg.tol_pi_endpoint, true, "skipped: custom baths"}};
    }
    const BathPair ch = io::build_pair(cfg, PairKind::CH);
    const BathPair cc = io::build_pair(cfg, PairKind::CC);
    const BathPair p0 = make_pair_pi(0.0, base);
    const BathPair p1 = make_pair_pi(1.0, base);
    double gap = 0.0;
    for (const auto& [a, b] : {std::pair{p0, ch}, std::pair{p1, cc}}) {
        gap = std::max({gap, std::abs(a.hot.E - b.hot.E), std::abs(a.hot.G - b.hot.G),
                        std::abs(a.cold.E - b.cold.E), std::abs(a.cold.G - b.cold.G)});
        OttoConfig ca{a.hot, a.cold, cfg.omega_h, cfg.omega_c,
                      StrokeSchedule::from_fractions(cfg.t_cycle, cfg.fractions.p, cfg.fractions.q,
                                                     cfg.fractions.r),
                      cfg.kappa};
        OttoConfig cb = ca;
        cb.hot = b.hot;
        cb.cold = b.cold;
        gap = std::max(gap, std::abs(run_cycle(ca).P - run_cycle(cb).P));
    }
    return {bound("pi_endpoints", gap, cfg.tol_pi_endpoint, "pi=0 vs CH, pi=1 vs CC")};
}

}  // namespace

std::vector<PropertyCheck> run_all(const io::RunConfig& cfg) {
    std::vector<PropertyCheck> out;
    for (auto part : {fock_checks, cycle_checks, sta_checks, ordering_checks, derivative_checks, pi_checks}) {
        auto checks = part(cfg);
        out.insert(out.end(), checks.begin(), checks.end());
    }
    return out;
}

bool all_passed(const std::vector<PropertyCheck>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed; });
}

}  // namespace otto::verify
