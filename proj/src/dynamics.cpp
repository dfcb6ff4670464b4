#include "otto/dynamics.hpp"

#include <cmath>

#include "otto/errors.hpp"

namespace otto {

double nbar_rate(double nbar, const AtomBath& bath) {
    if (!(nbar >= 0.0)) {
        throw DomainError("mean photon number must be >= 0");
    }
    return bath.E * (nbar + 1.0) - bath.G * nbar;
}

double nbar_evolve(double n0, double t, const AtomBath& bath) {
    if (!(t >= 0.0)) {
        throw DomainError("evolution time must be >= 0");
    }
    validate(bath);
    const double steady = nbar_ss(bath);
    return (n0 - steady) * std::exp(-bath.delta() * t) + steady;
}

PhotonState evolve(const PhotonState& state, double dt, const AtomBath& bath) {
    return {nbar_evolve(state.nbar, dt, bath), state.t + dt};
}

double temperature_from_nbar(double nbar, double omega) {
    if (!(nbar > 0.0)) {
        throw DomainError("zero photon number corresponds to infinite beta");
    }
    return std::log1p(1.0 / nbar) / omega;
}

double nbar_from_temperature(double beta, double omega) {
    return 1.0 / std::expm1(beta * omega);
}

double entropy(double nbar) {
    if (!(nbar >= 0.0)) {
        throw DomainError("mean photon number must be >= 0");
    }
    if (nbar == 0.0) {
        return 0.0;
    }
    return (nbar + 1.0) * std::log1p(nbar) - nbar * std::log(nbar);
}

double thermal_population(int n, const AtomBath& bath) {
    if (n < 0) {
        throw DomainError("photon number must be >= 0");
    }
    validate(bath);
    const double ratio = bath.E / bath.G;
    return (bath.delta() / bath.G) * std::pow(ratio, n);
}

}  // namespace otto
