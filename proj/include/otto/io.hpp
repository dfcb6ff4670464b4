#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "otto/bath.hpp"
#include "otto/optimize.hpp"

namespace otto::io {

inline constexpr const char* kVersion = "0.1.0";

/// Every knob the commands consume. Defaults reproduce the reference preset:
/// effective photon numbers 2 (hot) and 0.55 (cold), ell = 2, quarter-cycle
/// strokes, kappa = 1, omega_h = 1, omega_c = 0.5.
struct RunConfig {
    // [engine]
    double omega_h = 1.0;
    double omega_c = 0.5;
    double kappa = 1.0;
    // [baths]: effective temperatures of the incoherent reference pair
    int ell = 2;
    double bath_omega = 1.0;
    double nbar_hot = 2.0;
    double nbar_cold = 0.55;
    std::optional<double> beta_hot;   ///< overrides nbar_hot when set
    std::optional<double> beta_cold;  ///< overrides nbar_cold when set
    // [bath.hot] / [bath.cold]: explicit weights, replacing the constructed pairs
    std::optional<std::pair<double, double>> custom_hot;   ///< (E, G)
    std::optional<std::pair<double, double>> custom_cold;  ///< (E, G)
    // [schedule]
    double t_cycle = 20.0;
    Fractions fractions;
    // [sweep]
    PowerScan scan;
    int curve_grid = 200;
    // [transient]
    double n0 = 0.0;
    int cycles = 12;
    int samples_per_stroke = 16;
    // [optimize]
    CoordinateAscentOptions ascent;
    int cross_section_points = 99;
    // [pi]
    int pi_points = 21;
    // [verify]
    int draws = 100;
    double tol_fock = 1e-6;
    double tol_stationarity = 1e-8;
    double tol_fixed_point = 1e-10;
    double tol_after_cycles = 1e-12;
    double tol_quadrature = 1e-9;
    double tol_derivative = 1e-6;
    double tol_zeta = 1e-12;
    double tol_pi_endpoint = 1e-12;
    // [run]
    std::uint64_t seed = 20190101;
};

/// Reads an INI file; unknown keys are rejected. Throws ConfigError.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(std::istream& in);

/// Ordered key/value echo of every knob, e.g. ("engine.omega_h", "1").
std::vector<std::pair<std::string, std::string>> echo(const RunConfig& cfg);

/// FNV-1a 64-bit hash of the echo, as 16 hex digits.
std::string config_hash(const RunConfig& cfg);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

double effective_beta_hot(const RunConfig& cfg);
double effective_beta_cold(const RunConfig& cfg);

/// The I, CH, CC pair for the configured temperatures, or the custom pair.
BathPair build_pair(const RunConfig& cfg, PairKind kind);

bool has_custom_baths(const RunConfig& cfg);

/// "I,CH,CC" -> kinds. Throws ConfigError on unknown names.
std::vector<PairKind> parse_pairs(const std::string& list);

/// CSV with a '#'-prefixed metadata block followed by a header row.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::string& command, const RunConfig& cfg);

    void header(const std::vector<std::string>& columns);
    void row(const std::vector<std::string>& cells);

    [[nodiscard]] const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::size_t columns_ = 0;
};

}  // namespace otto::io
