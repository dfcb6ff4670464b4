#include "otto/sta.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <sstream>

#include "otto/errors.hpp"

namespace otto {

namespace {

// 10 s^3 - 15 s^4 + 6 s^5 and its first two derivatives in s.
struct Smoothstep {
    double value, first, second;
};

Smoothstep smoothstep(double s) {
    const double s2 = s * s;
    return {s2 * s * (10.0 - 15.0 * s + 6.0 * s2),
            30.0 * s2 * (1.0 - s) * (1.0 - s),
            60.0 * s * (1.0 - s) * (1.0 - 2.0 * s)};
}

// The integrand on the unit ramp, u = t / tau; the tau-dependence factors out.
double unit_integrand(double omega_i, double omega_f, double u) {
    const double span = omega_f - omega_i;
    const Smoothstep s = smoothstep(u);
    const double w = omega_i + span * s.value;
    const double w1 = span * s.first;
    const double w2 = span * s.second;
    return w * (w2 / (4.0 * w * w * w) - w1 * w1 / (4.0 * w * w * w * w));
}

}  // namespace

const FrequencyProtocol& validate(const FrequencyProtocol& protocol) {
    if (!(protocol.omega_i > 0.0) || !(protocol.omega_f > 0.0)) {
        throw ProtocolError("ramp endpoints must be positive frequencies");
    }
    if (!(protocol.tau > 0.0) || !std::isfinite(protocol.tau)) {
        throw ProtocolError("ramp duration must be positive and finite");
    }
    constexpr int samples = 10000;
    const double span = protocol.omega_f - protocol.omega_i;
    for (int k = 0; k <= samples; ++k) {
        const double u = static_cast<double>(k) / samples;
        if (!(protocol.omega_i + span * smoothstep(u).value > 0.0)) {
            throw ProtocolError("ramp frequency is not positive everywhere");
        }
    }
    return protocol;
}

FrequencySample omega_at(const FrequencyProtocol& protocol, double t) {
    if (!(t >= 0.0 && t <= protocol.tau)) {
        std::ostringstream os;
        os << "ramp time " << t << " outside [0, " << protocol.tau << "]";
        throw DomainError(os.str());
    }
    const double span = protocol.omega_f - protocol.omega_i;
    const Smoothstep s = smoothstep(t / protocol.tau);
    return {protocol.omega_i + span * s.value, span * s.first / protocol.tau,
            span * s.second / (protocol.tau * protocol.tau)};
}

double counterdiabatic_coefficient(const FrequencyProtocol& protocol, double t) {
    const auto [w, w1, w2] = omega_at(protocol, t);
    return 0.5 * (w2 / (2.0 * w) - 3.0 * w1 * w1 / (4.0 * w * w));
}

double cost_integrand(const FrequencyProtocol& protocol, double t) {
    const auto [w, w1, w2] = omega_at(protocol, t);
    return w * (w2 / (4.0 * w * w * w) - w1 * w1 / (4.0 * w * w * w * w));
}

StaCost sta_cost(const FrequencyProtocol& protocol, double nbar0, const quad::Tolerance& tol) {
    validate(protocol);
    if (!(nbar0 >= 0.0)) {
        throw DomainError("initial photon number must be >= 0");
    }
    StaCost cost;
    cost.stroke = protocol.omega_f < protocol.omega_i ? Stroke::Expansion : Stroke::Compression;
    cost.nbar0 = nbar0;
    if (protocol.omega_i == protocol.omega_f) {
        return cost;
    }
    const auto integral = quad::integrate(
        [&protocol](double t) { return cost_integrand(protocol, t); }, 0.0, protocol.tau, tol);
    cost.V = nbar0 / protocol.tau * integral.value;
    cost.error = nbar0 / protocol.tau * integral.error;
    return cost;
}

quad::Result cost_geometry(double omega_i, double omega_f, const quad::Tolerance& tol) {
    validate(FrequencyProtocol{omega_i, omega_f, 1.0});
    if (omega_i == omega_f) {
        return {};
    }
    return quad::integrate(
        [omega_i, omega_f](double u) { return unit_integrand(omega_i, omega_f, u); }, 0.0, 1.0,
        tol);
}

double cost_geometry_fixed_rule(double omega_i, double omega_f, int panels) {
    validate(FrequencyProtocol{omega_i, omega_f, 1.0});
    if (panels < 1) {
        throw DomainError("fixed rule needs at least one panel");
    }
    using Rule = boost::math::quadrature::gauss<double, 20>;
    double sum = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double a = static_cast<double>(k) / panels;
        const double b = static_cast<double>(k + 1) / panels;
        sum += Rule::integrate(
            [omega_i, omega_f](double u) { return unit_integrand(omega_i, omega_f, u); }, a, b);
    }
    return sum;
}

StaCostModel StaCostModel::for_frequencies(double omega_h, double omega_c,
                                           const quad::Tolerance& tol) {
    return {cost_geometry(omega_h, omega_c, tol).value,
            cost_geometry(omega_c, omega_h, tol).value};
}

}  // namespace otto
