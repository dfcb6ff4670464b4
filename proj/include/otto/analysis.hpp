#pragma once

#include "otto/bath.hpp"
#include "otto/cycle.hpp"
#include "otto/sta.hpp"

namespace otto {

// Derivatives with respect to a bath's thermalization rate Delta while its
// effective temperature E/Delta is held fixed. Each derivative of a photon
// number has the form  prefactor * (E_h/Delta_h - E_c/Delta_c).

enum class Side { Hot, Cold };

/// Copy of cfg with one bath's Delta replaced and its E rescaled to keep E/Delta.
OttoConfig with_delta(const OttoConfig& cfg, Side side, double delta);

struct WorkDerivatives {
    double alpha_h = 0.0;
    double alpha_c = 0.0;
    double d_delta_h = 0.0;  ///< d(nbar_h - nbar_c)/dDelta_h
    double d_delta_c = 0.0;  ///< d(nbar_h - nbar_c)/dDelta_c
};

WorkDerivatives work_derivatives(const OttoConfig& cfg);

struct CostDerivatives {
    double gamma_h = 0.0;
    double gamma_c = 0.0;
    double xi_h = 0.0;
    double xi_c = 0.0;
    double dnsc_d_delta_h = 0.0;  ///< +gamma_h * spread
    double dnsc_d_delta_c = 0.0;  ///< -gamma_c * spread
    double dnh_d_delta_h = 0.0;   ///< +xi_h * spread
    double dnh_d_delta_c = 0.0;   ///< -xi_c * spread
};

CostDerivatives cost_derivatives(const OttoConfig& cfg);

/// Cost-to-heat ratios nbar_h/(nbar_h - nbar_c) and nbar_c/(nbar_h - nbar_c).
struct ZetaValues {
    double zeta_h = 0.0;
    double zeta_c = 0.0;
    double d_delta_h = 0.0;  ///< shared by zeta_h and zeta_c
    double d_delta_c = 0.0;
};

ZetaValues zeta_values(const OttoConfig& cfg);

/// Shortcut cost per unit photon number of each work stroke: V_e = nbar_h I_e.
struct CostRates {
    double I_e = 0.0;
    double I_c = 0.0;
};

CostRates cost_rates(const OttoConfig& cfg, const StaCostModel& costs);

/// Steady-cycle power with the cost rates held fixed.
double power_with_rates(const OttoConfig& cfg, const CostRates& rates);

/// dP/dDelta_h at fixed hot effective temperature and fixed cost rates.
double power_derivative_delta_h(const OttoConfig& cfg, const CostRates& rates);

struct DerivativeReport {
    WorkDerivatives work;
    CostDerivatives cost;
    ZetaValues zeta;
    double dP_dDelta_h = 0.0;
};

DerivativeReport derivative_report(const OttoConfig& cfg, const StaCostModel& costs);

enum class Ordering { Lower, Equal, Higher, Indeterminate };

struct EfficiencyVerdict {
    Ordering implied = Ordering::Indeterminate;  ///< coherent relative to incoherent
    Ordering direct = Ordering::Indeterminate;
    double eta_incoherent = 0.0;
    double eta_coherent = 0.0;
};

/// Predicts the efficiency ordering of `coherent` against `incoherent` from the
/// signs of the zeta derivatives and the Delta shifts, then checks it against
/// directly computed efficiencies. Both pairs run on cfg's frequencies and
/// schedule. Throws InconsistentOrdering if the two disagree.
EfficiencyVerdict efficiency_ordering(const BathPair& incoherent, const BathPair& coherent,
                                      const OttoConfig& cfg, const StaCostModel& costs);

struct PowerVerdict {
    /// False when omega_h - omega_c <= I_e: the threshold has no positive value.
    bool applicable = false;
    /// e^{Delta_c t_c} > (dw + I_c) / (dw - I_e): P increases with Delta_h.
    bool increasing_in_delta_h = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double dP_analytic = 0.0;
    double dP_finite_difference = 0.0;
    bool signs_agree = false;
};

PowerVerdict power_monotonicity(const OttoConfig& cfg, double I_e, double I_c);

}  // namespace otto
