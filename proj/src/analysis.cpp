#include "otto/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "otto/errors.hpp"

namespace otto {

namespace {

double one_minus_exp(double x) { return -std::expm1(-x); }

// coth(x/2) = (1 + e^{-x}) / (1 - e^{-x})
double coth_half(double x) { return (1.0 + std::exp(-x)) / one_minus_exp(x); }

struct Exponents {
    double a;  // Delta_h t_h
    double b;  // Delta_c t_c
    double spread;  // E_h/Delta_h - E_c/Delta_c
    double denom;   // (1 - e^{-a-b})^2
};

Exponents exponents(const OttoConfig& cfg) {
    validate(cfg);
    const double a = cfg.hot.delta() * cfg.schedule.t_h;
    const double b = cfg.cold.delta() * cfg.schedule.t_c;
    const double total = one_minus_exp(a + b);
    return {a, b, nbar_ss(cfg.hot) - nbar_ss(cfg.cold), total * total};
}

Ordering compare(double coherent, double incoherent, double rel_tol) {
    const double scale = std::max(std::abs(coherent), std::abs(incoherent));
    if (std::abs(coherent - incoherent) <= rel_tol * scale) return Ordering::Equal;
    return coherent > incoherent ? Ordering::Higher : Ordering::Lower;
}

int sign(Ordering o) {
    switch (o) {
        case Ordering::Higher: return 1;
        case Ordering::Lower: return -1;
        default: return 0;
    }
}

std::string_view name(Ordering o) {
    switch (o) {
        case Ordering::Lower: return "lower";
        case Ordering::Equal: return "equal";
        case Ordering::Higher: return "higher";
        case Ordering::Indeterminate: return "indeterminate";
    }
    return "?";
}

}  // namespace

OttoConfig with_delta(const OttoConfig& cfg, Side side, double delta) {
    OttoConfig out = cfg;
    AtomBath& bath = side == Side::Hot ? out.hot : out.cold;
    const double steady = nbar_ss(bath);
    bath.E = steady * delta;
    bath.G = bath.E + delta;
    bath.provenance.reset();
    return out;
}

WorkDerivatives work_derivatives(const OttoConfig& cfg) {
    const Exponents x = exponents(cfg);
    const double om_a = one_minus_exp(x.a);
    const double om_b = one_minus_exp(x.b);
    WorkDerivatives d;
    d.alpha_h = cfg.schedule.t_h * std::exp(-x.a) * om_b * om_b / x.denom;
    d.alpha_c = cfg.schedule.t_c * std::exp(-x.b) * om_a * om_a / x.denom;
    d.d_delta_h = d.alpha_h * x.spread;
    d.d_delta_c = d.alpha_c * x.spread;
    return d;
}

CostDerivatives cost_derivatives(const OttoConfig& cfg) {
    const Exponents x = exponents(cfg);
    const double om_a = one_minus_exp(x.a);
    const double om_b = one_minus_exp(x.b);
    const double both = std::exp(-(x.a + x.b));
    const double t_h = cfg.schedule.t_h;
    const double t_c = cfg.schedule.t_c;
    CostDerivatives d;
    d.gamma_h = t_h * om_b * both / x.denom;
    d.gamma_c = t_c * om_a * std::exp(-x.b) / x.denom;
    d.xi_h = t_h * om_b * std::exp(-x.a) / x.denom;
    d.xi_c = t_c * om_a * both / x.denom;
    d.dnsc_d_delta_h = d.gamma_h * x.spread;
    d.dnsc_d_delta_c = -d.gamma_c * x.spread;
    d.dnh_d_delta_h = d.xi_h * x.spread;
    d.dnh_d_delta_c = -d.xi_c * x.spread;
    return d;
}

ZetaValues zeta_values(const OttoConfig& cfg) {
    const Exponents x = exponents(cfg);
    const double x_h = nbar_ss(cfg.hot);
    const double x_c = nbar_ss(cfg.cold);
    const double shared = (x_h * coth_half(x.b) + x_c * coth_half(x.a)) / (2.0 * x.spread);
    const double om_a = one_minus_exp(x.a);
    const double om_b = one_minus_exp(x.b);
    ZetaValues z;
    z.zeta_h = 0.5 + shared;
    z.zeta_c = -0.5 + shared;
    // 1/sinh^2(x/2) = 4 e^{-x} / (1 - e^{-x})^2
    z.d_delta_h = -cfg.schedule.t_h * x_c * std::exp(-x.a) / (x.spread * om_a * om_a);
    z.d_delta_c = -cfg.schedule.t_c * x_h * std::exp(-x.b) / (x.spread * om_b * om_b);
    return z;
}

CostRates cost_rates(const OttoConfig& cfg, const StaCostModel& costs) {
    validate(cfg);
    return {costs.expansion(1.0, cfg.schedule.t_We / cfg.kappa),
            costs.compression(1.0, cfg.schedule.t_Wc / cfg.kappa)};
}

double power_with_rates(const OttoConfig& cfg, const CostRates& rates) {
    const double work = (cfg.omega_h - cfg.omega_c) * delta_nbar(cfg);
    const double cost = nbar_hot(cfg) * rates.I_e + steady_cycle_nbar(cfg) * rates.I_c;
    return (work - cost) / cfg.schedule.t_cycle();
}

double power_derivative_delta_h(const OttoConfig& cfg, const CostRates& rates) {
    const Exponents x = exponents(cfg);
    const double gap = cfg.omega_h - cfg.omega_c;
    const double om_b = one_minus_exp(x.b);
    const double bracket = gap * om_b - rates.I_e - rates.I_c * std::exp(-x.b);
    return cfg.schedule.t_h / cfg.schedule.t_cycle() * x.spread * std::exp(-x.a) * om_b *
           bracket / x.denom;
}

DerivativeReport derivative_report(const OttoConfig& cfg, const StaCostModel& costs) {
    return {work_derivatives(cfg), cost_derivatives(cfg), zeta_values(cfg),
            power_derivative_delta_h(cfg, cost_rates(cfg, costs))};
}

EfficiencyVerdict efficiency_ordering(const BathPair& incoherent, const BathPair& coherent,
                                      const OttoConfig& cfg, const StaCostModel& costs) {
    constexpr double same = 1e-12;
    if (std::abs(nbar_ss(incoherent.hot) - nbar_ss(coherent.hot)) >
            same * nbar_ss(incoherent.hot) ||
        std::abs(nbar_ss(incoherent.cold) - nbar_ss(coherent.cold)) >
            same * nbar_ss(incoherent.cold)) {
        throw DomainError("efficiency ordering compares pairs with equal effective temperatures");
    }
    OttoConfig base = cfg;
    base.hot = incoherent.hot;
    base.cold = incoherent.cold;
    OttoConfig other = cfg;
    other.hot = coherent.hot;
    other.cold = coherent.cold;

    // eta = 1 - omega_c/omega_h - (zeta_h I_e + zeta_c I_c)/omega_h, with I_e, I_c > 0,
    // so eta moves against zeta. zeta is monotone in each Delta on the whole segment
    // between the two pairs because the derivative sign depends only on the spread.
    const ZetaValues z = zeta_values(base);
    const int shift_h = sign(compare(coherent.hot.delta(), incoherent.hot.delta(), same));
    const int shift_c = sign(compare(coherent.cold.delta(), incoherent.cold.delta(), same));
    const int move_h = -(z.d_delta_h < 0.0 ? -1 : 1) * shift_h;
    const int move_c = -(z.d_delta_c < 0.0 ? -1 : 1) * shift_c;

    EfficiencyVerdict verdict;
    if (move_h == 0 && move_c == 0) {
        verdict.implied = Ordering::Equal;
    } else if (move_h >= 0 && move_c >= 0) {
        verdict.implied = Ordering::Higher;
    } else if (move_h <= 0 && move_c <= 0) {
        verdict.implied = Ordering::Lower;
    } else {
        verdict.implied = Ordering::Indeterminate;
    }

    verdict.eta_incoherent = run_cycle(base, costs).eta;
    verdict.eta_coherent = run_cycle(other, costs).eta;
    verdict.direct = compare(verdict.eta_coherent, verdict.eta_incoherent, same);

    if (verdict.implied != Ordering::Indeterminate && verdict.implied != verdict.direct) {
        std::ostringstream os;
        os.precision(17);
        os << "zeta analysis implies coherent efficiency is " << name(verdict.implied)
           << " but direct evaluation gives " << verdict.eta_coherent << " vs "
           << verdict.eta_incoherent;
        throw InconsistentOrdering(os.str());
    }
    return verdict;
}

PowerVerdict power_monotonicity(const OttoConfig& cfg, double I_e, double I_c) {
    validate(cfg);
    const CostRates rates{I_e, I_c};
    const double gap = cfg.omega_h - cfg.omega_c;
    PowerVerdict verdict;
    verdict.lhs = std::exp(cfg.cold.delta() * cfg.schedule.t_c);
    verdict.applicable = gap > I_e;
    if (verdict.applicable) {
        verdict.rhs = (gap + I_c) / (gap - I_e);
        verdict.increasing_in_delta_h = verdict.lhs > verdict.rhs;
    }
    verdict.dP_analytic = power_derivative_delta_h(cfg, rates);
    const double delta = cfg.hot.delta();
    const double h = 1e-6 * delta;
    verdict.dP_finite_difference = (power_with_rates(with_delta(cfg, Side::Hot, delta + h), rates) -
                                    power_with_rates(with_delta(cfg, Side::Hot, delta - h), rates)) /
                                   (2.0 * h);
    verdict.signs_agree = (verdict.dP_analytic > 0.0) == (verdict.dP_finite_difference > 0.0);
    return verdict;
}

}  // namespace otto
