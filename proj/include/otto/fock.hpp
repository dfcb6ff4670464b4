#pragma once

#include <span>
#include <vector>

#include "otto/bath.hpp"

namespace otto::fock {

// Brute-force check of the mean-photon-number dynamics. Both the Lindblad
// generator and the per-collision map keep number-diagonal states diagonal,
// so a state is just its populations over n = 0..N_cut.

struct FockDensity {
    std::vector<double> populations;

    [[nodiscard]] int cutoff() const { return static_cast<int>(populations.size()) - 1; }
    [[nodiscard]] double trace() const;
    /// Probability that has flowed past N_cut.
    [[nodiscard]] double leakage() const { return 1.0 - trace(); }
    [[nodiscard]] double mean() const;
};

struct CollisionParams {
    double lambda_tau = 0.0;
    AtomBath bath;
};

struct PropagationOptions {
    /// Zero selects 0.01 / ((E + G) * N_cut).
    double dt = 0.0;
    double max_leakage = 1e-8;
};

FockDensity vacuum(int cutoff);

/// Geometric steady state of `bath`, truncated (not renormalized) at `cutoff`.
FockDensity thermal(const AtomBath& bath, int cutoff);

/// Smallest N whose geometric tail mass beyond N is < 1e-12 for every bath, plus 20%.
int default_cutoff(std::span<const AtomBath> baths);

/// dp_n/dt = E[n p_{n-1} - (n+1) p_n] + G[(n+1) p_{n+1} - n p_n].
/// The E (N+1) p_N outflow at the top level leaves the truncated space.
std::vector<double> generator(std::span<const double> populations, const AtomBath& bath);

/// One classical RK4 step of the diagonal master equation.
FockDensity lindblad_step(const FockDensity& rho, double dt, const AtomBath& bath,
                          double max_leakage = 1e-8);

/// Repeated lindblad_step up to time t (last step shortened to land on t).
FockDensity propagate(const FockDensity& rho, double t, const AtomBath& bath,
                      const PropagationOptions& options = {});

/// One atom passing through: rho -> rho + (lambda tau)^2 (E D[a^dag] + G D[a]) rho.
FockDensity collision_map(const FockDensity& rho, const CollisionParams& params);

double total_variation(const FockDensity& a, const FockDensity& b);

}  // namespace otto::fock
