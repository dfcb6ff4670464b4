#pragma once

#include "otto/bath.hpp"

namespace otto {

/// Mean photon number at a point of the dimensionless collision clock.
struct PhotonState {
    double nbar = 0.0;
    double t = 0.0;
};

/// d(nbar)/dt = E (nbar + 1) - G nbar.
double nbar_rate(double nbar, const AtomBath& bath);

/// Closed-form relaxation of the mean photon number toward E/Delta.
double nbar_evolve(double n0, double t, const AtomBath& bath);

PhotonState evolve(const PhotonState& state, double dt, const AtomBath& bath);

/// Inverse temperature of a thermal oscillator state: ln((n+1)/n)/omega.
double temperature_from_nbar(double nbar, double omega);

/// Thermal mean photon number at inverse temperature beta: 1/(e^{beta omega} - 1).
double nbar_from_temperature(double beta, double omega);

/// Von Neumann entropy of a thermal state, (n+1)ln(n+1) - n ln n, with S(0) = 0.
double entropy(double nbar);

/// Geometric steady-state population (1 - E/G)(E/G)^n.
double thermal_population(int n, const AtomBath& bath);

}  // namespace otto
