#include "otto/bath.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "otto/errors.hpp"

namespace otto {

namespace {

std::string describe(const AtomBath& bath) {
    std::ostringstream os;
    os.precision(17);
    os << (bath.label.empty() ? std::string("bath") : bath.label) << " (E=" << bath.E
       << ", G=" << bath.G << ")";
    return os.str();
}

// Thermal populations at beta_R that reproduce E, plus the coherence needed for G.
ThermalAtomSpec realize(double E, double G, double omega, int ell) {
    const double boltzmann = ell * E / (1.0 - E);  // exp(-beta_R * omega)
    ThermalAtomSpec spec;
    spec.omega = omega;
    spec.ell = ell;
    spec.beta_R = -std::log(boltzmann) / omega;
    spec.coherence_g = G / (1.0 - E);
    return spec;
}

// Same E/Delta as `reference`, excitation weight E.
AtomBath rescaled_member(double E, const AtomBath& reference, double omega, int ell,
                         std::string label) {
    if (reference.E <= 0.0) {
        throw DomainError("cannot rescale a zero-temperature bath: " + describe(reference));
    }
    AtomBath out;
    out.E = E;
    out.G = E + E * reference.delta() / reference.E;
    out.ell = ell;
    out.label = std::move(label);
    const ThermalAtomSpec spec = realize(out.E, out.G, omega, ell);
    if (spec.coherence_g > 1.0 + 1e-12) {
        std::ostringstream os;
        os.precision(17);
        os << describe(out) << " needs <G|rho_g|G> = " << spec.coherence_g
           << " > 1 (beyond the coherence cooling limit)";
        throw Infeasible(os.str());
    }
    out.provenance = spec;
    return validate(out);
}

}  // namespace

const AtomBath& validate(const AtomBath& bath) {
    if (!(bath.ell >= 1)) {
        throw DomainError("ground-state degeneracy must be >= 1");
    }
    constexpr double slack = 1e-12;
    if (!(bath.E >= 0.0 && bath.G >= 0.0 && bath.E <= 1.0 && bath.G <= 1.0) ||
        bath.E + bath.G > 1.0 + slack) {
        throw DomainError("transition weights out of range: " + describe(bath));
    }
    if (!(bath.delta() > 0.0)) {
        throw NonThermalizing("G <= E, the oscillator does not thermalize: " + describe(bath));
    }
    return bath;
}

AtomBath make_bath(double E, double G, int ell, std::string label) {
    AtomBath bath;
    bath.E = E;
    bath.G = G;
    bath.ell = ell;
    bath.label = std::move(label);
    return validate(bath);
}

double excited_population(double beta_R, double omega, int ell) {
    const double boltzmann = std::exp(-beta_R * omega);
    return boltzmann / (ell + boltzmann);
}

AtomBath bath_from_spec(const ThermalAtomSpec& spec, std::string label) {
    if (!(spec.beta_R >= 0.0) || !(spec.omega > 0.0) || spec.ell < 1) {
        throw DomainError("thermal atom spec needs beta_R >= 0, omega > 0, ell >= 1");
    }
    if (!(spec.coherence_g >= 0.0 && spec.coherence_g <= 1.0)) {
        throw DomainError("<G|rho_g|G> must lie in [0, 1]");
    }
    const double p_e = excited_population(spec.beta_R, spec.omega, spec.ell);
    AtomBath bath;
    bath.E = p_e;
    bath.G = (1.0 - p_e) * spec.coherence_g;
    bath.ell = spec.ell;
    bath.label = std::move(label);
    bath.provenance = spec;
    return validate(bath);
}

double effective_beta(const AtomBath& bath, double omega) {
    validate(bath);
    return std::log(bath.G / bath.E) / omega;
}

double nbar_ss(const AtomBath& bath) {
    return bath.E / bath.delta();
}

bool approx_equal(const AtomBath& a, const AtomBath& b, double rel_tol) {
    auto close = [rel_tol](double x, double y) {
        return std::abs(x - y) <= rel_tol * std::max(std::abs(x), std::abs(y));
    };
    return a.ell == b.ell && close(a.E, b.E) && close(a.delta(), b.delta());
}

std::string_view to_string(PairKind kind) {
    switch (kind) {
        case PairKind::I: return "I";
        case PairKind::CH: return "CH";
        case PairKind::CC: return "CC";
        case PairKind::Pi: return "pi";
        case PairKind::Custom: return "custom";
    }
    return "?";
}

PairKind parse_pair_kind(std::string_view text) {
    if (text == "I") return PairKind::I;
    if (text == "CH") return PairKind::CH;
    if (text == "CC") return PairKind::CC;
    if (text == "pi") return PairKind::Pi;
    if (text == "custom") return PairKind::Custom;
    throw ConfigError("unknown bath pair kind '" + std::string(text) + "'");
}

BathPair make_pair(PairKind kind, double beta_h, double beta_c, double omega, int ell) {
    if (!(beta_h >= 0.0) || !(beta_c > beta_h)) {
        throw DomainError("bath pair needs beta_c > beta_h >= 0");
    }
    BathPair pair;
    pair.kind = kind;
    pair.beta_h = beta_h;
    pair.beta_c = beta_c;
    pair.omega = omega;
    pair.ell = ell;

    const double incoherent = 1.0 / ell;
    const AtomBath hot_i = bath_from_spec({beta_h, omega, ell, incoherent}, "I.hot");
    const AtomBath cold_i = bath_from_spec({beta_c, omega, ell, incoherent}, "I.cold");

    switch (kind) {
        case PairKind::I:
            pair.hot = hot_i;
            pair.cold = cold_i;
            break;
        case PairKind::CH:
            pair.hot = rescaled_member(cold_i.E, hot_i, omega, ell, "CH.hot");
            pair.cold = rescaled_member(cold_i.E, cold_i, omega, ell, "CH.cold");
            break;
        case PairKind::CC:
            pair.hot = rescaled_member(hot_i.E, hot_i, omega, ell, "CC.hot");
            pair.cold = rescaled_member(hot_i.E, cold_i, omega, ell, "CC.cold");
            break;
        case PairKind::Pi:
            return make_pair_pi(0.0, make_pair(PairKind::I, beta_h, beta_c, omega, ell));
        case PairKind::Custom:
            throw DomainError("custom pairs are built with make_custom_pair");
    }
    return pair;
}

BathPair make_pair_pi(double pi, const BathPair& base) {
    if (base.kind != PairKind::I) {
        throw DomainError("pi-parametrized pairs interpolate from an incoherent pair");
    }
    if (!(pi >= 0.0 && pi <= 1.0)) {
        throw DomainError("pi must lie in [0, 1]");
    }
    BathPair pair = base;
    pair.kind = PairKind::Pi;
    pair.pi = pi;
    const double E = pi * base.hot.E + (1.0 - pi) * base.cold.E;
    pair.hot = rescaled_member(E, base.hot, base.omega, base.ell, "pi.hot");
    pair.cold = rescaled_member(E, base.cold, base.omega, base.ell, "pi.cold");
    return pair;
}

BathPair make_custom_pair(const AtomBath& hot, const AtomBath& cold) {
    validate(hot);
    validate(cold);
    BathPair pair;
    pair.kind = PairKind::Custom;
    pair.hot = hot;
    pair.cold = cold;
    pair.ell = hot.ell;
    pair.omega = hot.provenance ? hot.provenance->omega : 1.0;
    pair.beta_h = effective_beta(hot, pair.omega);
    pair.beta_c = effective_beta(cold, pair.omega);
    return pair;
}

}  // namespace otto
