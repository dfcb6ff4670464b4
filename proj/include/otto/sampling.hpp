#pragma once

#include <cstdint>
#include <random>

#include "otto/bath.hpp"
#include "otto/cycle.hpp"

namespace otto::sampling {

// Seeded random engines for the property checks. Distribution:
// effective photon numbers hot in [1, 5], cold in [0.1, 0.9 * hot];
// Delta log-uniform in [1e-2, 1] (capped so that E + G <= 1);
// heat and work stroke durations uniform in [0.1, 20]; omega_h = 1, omega_c = 0.5.

using Rng = std::mt19937_64;

/// Engine with directly drawn rates (E = nbar * Delta, G = E + Delta).
OttoConfig draw_rate_config(Rng& rng);

struct PairDraw {
    BathPair incoherent;
    BathPair coherent_hot;
    BathPair coherent_cold;
    OttoConfig engine;  ///< frequencies and schedule; baths are those of `incoherent`
};

/// Thermal-atom pairs with a shared random schedule. Draws whose CC pair would
/// need coherence beyond the cooling limit are redrawn.
PairDraw draw_pairs(Rng& rng);

}  // namespace otto::sampling
