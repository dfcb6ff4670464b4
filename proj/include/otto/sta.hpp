#pragma once

#include "otto/quadrature.hpp"

namespace otto {

/// Quintic (10-15-6) frequency ramp from omega_i to omega_f over tau.
/// First and second derivatives vanish at both ends.
struct FrequencyProtocol {
    double omega_i = 1.0;
    double omega_f = 0.5;
    double tau = 1.0;
};

/// Checks positivity of the endpoints and duration and samples the ramp on
/// 10^4 points for omega > 0. Throws ProtocolError otherwise.
const FrequencyProtocol& validate(const FrequencyProtocol& protocol);

struct FrequencySample {
    double omega;
    double omega_dot;
    double omega_ddot;
};

FrequencySample omega_at(const FrequencyProtocol& protocol, double t);

/// Coefficient of x^2 in the counterdiabatic Hamiltonian:
/// (1/2)(omega_ddot / (2 omega) - 3 omega_dot^2 / (4 omega^2)).
double counterdiabatic_coefficient(const FrequencyProtocol& protocol, double t);

/// Integrand of the energy-cost integral per unit initial photon number,
/// omega (omega_ddot / (4 omega^3) - omega_dot^2 / (4 omega^4)).
double cost_integrand(const FrequencyProtocol& protocol, double t);

enum class Stroke { Expansion, Compression };

struct StaCost {
    double V = 0.0;
    Stroke stroke = Stroke::Expansion;
    double nbar0 = 0.0;
    double error = 0.0;  ///< quadrature error estimate carried into V
};

/// V = (nbar0 / tau) * integral_0^tau cost_integrand dt.
StaCost sta_cost(const FrequencyProtocol& protocol, double nbar0,
                 const quad::Tolerance& tol = {});

/// Dimensionless geometry factor C with V = nbar0 * C / tau^2, evaluated on
/// the unit ramp u = t / tau.
quad::Result cost_geometry(double omega_i, double omega_f, const quad::Tolerance& tol = {});

/// Same factor from a fixed composite Gauss-Legendre rule; independent check
/// of the adaptive route.
double cost_geometry_fixed_rule(double omega_i, double omega_f, int panels = 4);

/// Cost per unit photon number for both work strokes of an engine running
/// between omega_h and omega_c. V = nbar0 * geometry / tau^2.
struct StaCostModel {
    double expansion_geometry = 0.0;   ///< omega_h -> omega_c
    double compression_geometry = 0.0; ///< omega_c -> omega_h

    static StaCostModel for_frequencies(double omega_h, double omega_c,
                                        const quad::Tolerance& tol = {});

    [[nodiscard]] double expansion(double nbar0, double tau) const {
        return nbar0 * expansion_geometry / (tau * tau);
    }
    [[nodiscard]] double compression(double nbar0, double tau) const {
        return nbar0 * compression_geometry / (tau * tau);
    }
};

}  // namespace otto
