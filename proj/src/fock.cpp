#include "otto/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "otto/errors.hpp"

namespace otto::fock {

namespace {

void check_leakage(const FockDensity& rho, double max_leakage) {
    const double leaked = rho.leakage();
    if (leaked > max_leakage) {
        std::ostringstream os;
        os << "truncation leakage " << leaked << " exceeds bound " << max_leakage
           << " at N_cut = " << rho.cutoff();
        throw TruncationError(os.str());
    }
}

void axpy(std::vector<double>& y, double a, std::span<const double> x) {
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] += a * x[i];
    }
}

}  // namespace

double FockDensity::trace() const {
    return std::accumulate(populations.begin(), populations.end(), 0.0);
}

double FockDensity::mean() const {
    double sum = 0.0;
    for (std::size_t n = 0; n < populations.size(); ++n) {
        sum += static_cast<double>(n) * populations[n];
    }
    return sum;
}

FockDensity vacuum(int cutoff) {
    if (cutoff < 1) {
        throw DomainError("Fock cutoff must be >= 1");
    }
    FockDensity rho;
    rho.populations.assign(static_cast<std::size_t>(cutoff) + 1, 0.0);
    rho.populations[0] = 1.0;
    return rho;
}

FockDensity thermal(const AtomBath& bath, int cutoff) {
    FockDensity rho = vacuum(cutoff);
    validate(bath);
    const double ratio = bath.E / bath.G;
    double p = bath.delta() / bath.G;
    for (auto& value : rho.populations) {
        value = p;
        p *= ratio;
    }
    return rho;
}

int default_cutoff(std::span<const AtomBath> baths) {
    double worst = 0.0;
    for (const auto& bath : baths) {
        validate(bath);
        worst = std::max(worst, bath.E / bath.G);
    }
    int n = 1;
    if (worst > 0.0) {
        // tail mass beyond N is ratio^(N+1)
        n = std::max(1, static_cast<int>(std::ceil(std::log(1e-12) / std::log(worst))) - 1);
    }
    return static_cast<int>(std::ceil(1.2 * n));
}

std::vector<double> generator(std::span<const double> p, const AtomBath& bath) {
    const std::size_t size = p.size();
    std::vector<double> dp(size, 0.0);
    for (std::size_t n = 0; n < size; ++n) {
        const double nd = static_cast<double>(n);
        double rate = -bath.E * (nd + 1.0) * p[n] - bath.G * nd * p[n];
        if (n > 0) {
            rate += bath.E * nd * p[n - 1];
        }
        if (n + 1 < size) {
            rate += bath.G * (nd + 1.0) * p[n + 1];
        }
        dp[n] = rate;
    }
    return dp;
}

FockDensity lindblad_step(const FockDensity& rho, double dt, const AtomBath& bath,
                          double max_leakage) {
    if (!(dt >= 0.0)) {
        throw DomainError("time step must be >= 0");
    }
    const auto& p = rho.populations;
    const auto k1 = generator(p, bath);
    std::vector<double> stage = p;
    axpy(stage, 0.5 * dt, k1);
    const auto k2 = generator(stage, bath);
    stage = p;
    axpy(stage, 0.5 * dt, k2);
    const auto k3 = generator(stage, bath);
    stage = p;
    axpy(stage, dt, k3);
    const auto k4 = generator(stage, bath);

    FockDensity out = rho;
    for (std::size_t n = 0; n < p.size(); ++n) {
        out.populations[n] += dt / 6.0 * (k1[n] + 2.0 * k2[n] + 2.0 * k3[n] + k4[n]);
    }
    check_leakage(out, max_leakage);
    return out;
}

FockDensity propagate(const FockDensity& rho, double t, const AtomBath& bath,
                      const PropagationOptions& options) {
    validate(bath);
    if (!(t >= 0.0)) {
        throw DomainError("propagation time must be >= 0");
    }
    const double dt =
        options.dt > 0.0 ? options.dt : 0.01 / ((bath.E + bath.G) * rho.cutoff());
    const auto steps = static_cast<long long>(std::ceil(t / dt));
    FockDensity out = rho;
    for (long long k = 0; k < steps; ++k) {
        const double h = std::min(dt, t - static_cast<double>(k) * dt);
        out = lindblad_step(out, h, bath, options.max_leakage);
    }
    return out;
}

FockDensity collision_map(const FockDensity& rho, const CollisionParams& params) {
    if (!(params.lambda_tau >= 0.0) || !std::isfinite(params.lambda_tau)) {
        throw DomainError("lambda*tau must be finite and >= 0");
    }
    validate(params.bath);
    const double strength = params.lambda_tau * params.lambda_tau;
    FockDensity out = rho;
    axpy(out.populations, strength, generator(rho.populations, params.bath));
    for (std::size_t n = 0; n < out.populations.size(); ++n) {
        if (out.populations[n] < -1e-12) {
            std::ostringstream os;
            os << "population p_" << n << " = " << out.populations[n]
               << " after one collision; lambda*tau = " << params.lambda_tau
               << " is outside the second-order regime";
            throw NegativityError(os.str());
        }
    }
    return out;
}

double total_variation(const FockDensity& a, const FockDensity& b) {
    if (a.populations.size() != b.populations.size()) {
        throw DomainError("total variation needs equal cutoffs");
    }
    double sum = 0.0;
    for (std::size_t n = 0; n < a.populations.size(); ++n) {
        sum += std::abs(a.populations[n] - b.populations[n]);
    }
    return 0.5 * sum;
}

}  // namespace otto::fock
