#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace otto {

/// Thermal populations plus ground-space coherence of one atom stream.
struct ThermalAtomSpec {
    double beta_R = 0.0;       ///< inverse temperature of the atomic populations
    double omega = 1.0;        ///< atomic gap, tuned to the oscillator
    int ell = 2;               ///< ground-state degeneracy
    double coherence_g = 0.5;  ///< <G|rho_g|G>; 1/ell means no coherence
};

/// A bath emulated by a stream of (ell+1)-level atoms.
///
/// Only the two transition weights matter to the oscillator:
/// E = <e|rho_R|e> drives absorption, G = <G|rho_R|G> drives emission.
/// A bath thermalizes only when Delta = G - E > 0.
struct AtomBath {
    double E = 0.0;
    double G = 0.0;
    int ell = 2;
    std::string label;
    /// Set when the bath was built from thermal populations.
    std::optional<ThermalAtomSpec> provenance;

    [[nodiscard]] double delta() const { return G - E; }
};

/// Validates the invariants of a bath and returns it; throws otherwise.
const AtomBath& validate(const AtomBath& bath);

AtomBath make_bath(double E, double G, int ell = 2, std::string label = {});

double excited_population(double beta_R, double omega, int ell);

AtomBath bath_from_spec(const ThermalAtomSpec& spec, std::string label = {});

/// ln(G/E)/omega. Infinite for E = 0.
double effective_beta(const AtomBath& bath, double omega);

/// Steady-state mean photon number E/Delta.
double nbar_ss(const AtomBath& bath);

/// Relative comparison on (E, Delta).
bool approx_equal(const AtomBath& a, const AtomBath& b, double rel_tol = 1e-9);

enum class PairKind { I, CH, CC, Pi, Custom };

std::string_view to_string(PairKind kind);
PairKind parse_pair_kind(std::string_view text);

/// A hot/cold pair sharing the effective temperatures of an incoherent pair.
struct BathPair {
    PairKind kind = PairKind::I;
    double beta_h = 0.0;
    double beta_c = 0.0;
    double omega = 1.0;
    int ell = 2;
    double pi = 0.0;  ///< only meaningful for PairKind::Pi
    AtomBath hot;
    AtomBath cold;
};

/// Builds the I, CH or CC pair for effective inverse temperatures
/// beta_h < beta_c. Coherent members get thermal populations from the
/// other temperature and enough coherence to reach their target.
BathPair make_pair(PairKind kind, double beta_h, double beta_c, double omega, int ell = 2);

/// Interpolates between CH (pi = 0) and CC (pi = 1). `base` must be an I pair.
BathPair make_pair_pi(double pi, const BathPair& base);

/// A pair from two arbitrary baths, e.g. read from a config file.
BathPair make_custom_pair(const AtomBath& hot, const AtomBath& cold);

}  // namespace otto
