#include "otto/io.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "otto/dynamics.hpp"
#include "otto/errors.hpp"

namespace otto::io {

namespace {

using Table = std::map<std::string, std::string>;

double to_double(const std::string& key, const std::string& text) {
    double value = 0.0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError("config key '" + key + "': '" + text + "' is not a number");
    }
    return value;
}

long long to_integer(const std::string& key, const std::string& text) {
    long long value = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError("config key '" + key + "': '" + text + "' is not an integer");
    }
    return value;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

class Reader {
public:
    explicit Reader(Table table) : table_(std::move(table)) {}

    void number(const std::string& key, double& out) {
        if (auto it = take(key)) out = to_double(key, **it);
    }
    void integer(const std::string& key, int& out) {
        if (auto it = take(key)) out = static_cast<int>(to_integer(key, **it));
    }
    void unsigned64(const std::string& key, std::uint64_t& out) {
        if (auto it = take(key)) {
            const std::string& text = **it;
            std::uint64_t value = 0;
            const char* end = text.data() + text.size();
            const auto [ptr, ec] = std::from_chars(text.data(), end, value);
            if (ec != std::errc() || ptr != end) {
                throw ConfigError("config key '" + key + "': '" + text + "' is not a u64");
            }
            out = value;
        }
    }
    void optional_number(const std::string& key, std::optional<double>& out) {
        if (auto it = take(key)) out = to_double(key, **it);
    }

    void finish() const {
        if (!table_.empty()) {
            throw ConfigError("unknown config key '" + table_.begin()->first + "'");
        }
    }

    bool has_prefix(const std::string& prefix) const {
        auto it = table_.lower_bound(prefix);
        return it != table_.end() && it->first.compare(0, prefix.size(), prefix) == 0;
    }

private:
    Table table_;
    std::string held_;

    std::optional<const std::string*> take(const std::string& key) {
        auto it = table_.find(key);
        if (it == table_.end()) return std::nullopt;
        held_ = it->second;
        table_.erase(it);
        return &held_;
    }
};

void read_custom(Reader& r, const std::string& section, std::optional<std::pair<double, double>>& out) {
    if (!r.has_prefix(section + ".")) return;
    std::optional<double> E;
    std::optional<double> G;
    r.optional_number(section + ".E", E);
    r.optional_number(section + ".G", G);
    if (!E || !G) {
        throw ConfigError("[" + section + "] needs both E and G");
    }
    out = std::pair{*E, *G};
}

void check(const RunConfig& cfg) {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw ConfigError(what);
    };
    require(cfg.omega_h > cfg.omega_c && cfg.omega_c > 0.0, "need omega_h > omega_c > 0");
    require(cfg.kappa > 0.0, "kappa must be positive");
    require(cfg.ell >= 1, "ell must be at least 1");
    require(cfg.bath_omega > 0.0, "baths.omega must be positive");
    require(cfg.nbar_hot > cfg.nbar_cold && cfg.nbar_cold > 0.0,
            "need nbar_hot > nbar_cold > 0");
    require(cfg.t_cycle > 0.0, "t_cycle must be positive");
    for (double f : {cfg.fractions.p, cfg.fractions.q, cfg.fractions.r}) {
        require(f > 0.0 && f < 1.0, "fractions p, q, r must lie in (0, 1)");
    }
    require(cfg.scan.t_min > 0.0 && cfg.scan.t_max > cfg.scan.t_min, "need 0 < t_min < t_max");
    require(cfg.scan.grid >= 3 && cfg.curve_grid >= 2, "grids too small");
    require(cfg.n0 >= 0.0, "n0 must be non-negative");
    require(cfg.cycles >= 1 && cfg.samples_per_stroke >= 1, "cycles and samples must be positive");
    require(cfg.pi_points >= 2, "pi.points must be at least 2");
    require(cfg.draws >= 1, "verify.draws must be positive");
}

}  // namespace

RunConfig parse_config(std::istream& in) {
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::ini_parser::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ConfigError(std::string("malformed config: ") + e.message());
    }
    Table table;
    for (const auto& [section, body] : tree) {
        if (body.empty()) {
            throw ConfigError("config key '" + section + "' must sit inside a section");
        }
        for (const auto& [key, value] : body) {
            // Inline comments after a value are dropped.
            const std::string& raw = value.data();
            table[section + "." + key] = trim(raw.substr(0, raw.find_first_of(";#")));
        }
    }

    RunConfig cfg;
    Reader r(std::move(table));
    r.number("engine.omega_h", cfg.omega_h);
    r.number("engine.omega_c", cfg.omega_c);
    r.number("engine.kappa", cfg.kappa);
    r.integer("baths.ell", cfg.ell);
    r.number("baths.omega", cfg.bath_omega);
    r.number("baths.nbar_hot", cfg.nbar_hot);
    r.number("baths.nbar_cold", cfg.nbar_cold);
    r.optional_number("baths.beta_hot", cfg.beta_hot);
    r.optional_number("baths.beta_cold", cfg.beta_cold);
    read_custom(r, "bath.hot", cfg.custom_hot);
    read_custom(r, "bath.cold", cfg.custom_cold);
    r.number("schedule.t_cycle", cfg.t_cycle);
    r.number("schedule.p", cfg.fractions.p);
    r.number("schedule.q", cfg.fractions.q);
    r.number("schedule.r", cfg.fractions.r);
    r.number("sweep.t_min", cfg.scan.t_min);
    r.number("sweep.t_max", cfg.scan.t_max);
    r.integer("sweep.peak_grid", cfg.scan.grid);
    r.number("sweep.rel_tol", cfg.scan.rel_tol);
    r.integer("sweep.grid", cfg.curve_grid);
    r.number("transient.n0", cfg.n0);
    r.integer("transient.cycles", cfg.cycles);
    r.integer("transient.samples", cfg.samples_per_stroke);
    r.number("optimize.lo", cfg.ascent.lo);
    r.number("optimize.hi", cfg.ascent.hi);
    r.integer("optimize.grid", cfg.ascent.grid);
    r.number("optimize.coordinate_tol", cfg.ascent.coordinate_tol);
    r.number("optimize.improvement_tol", cfg.ascent.improvement_tol);
    r.integer("optimize.max_rounds", cfg.ascent.max_rounds);
    r.integer("optimize.cross_section_points", cfg.cross_section_points);
    r.integer("pi.points", cfg.pi_points);
    r.integer("verify.draws", cfg.draws);
    r.number("verify.tol_fock", cfg.tol_fock);
    r.number("verify.tol_stationarity", cfg.tol_stationarity);
    r.number("verify.tol_fixed_point", cfg.tol_fixed_point);
    r.number("verify.tol_after_cycles", cfg.tol_after_cycles);
    r.number("verify.tol_quadrature", cfg.tol_quadrature);
    r.number("verify.tol_derivative", cfg.tol_derivative);
    r.number("verify.tol_zeta", cfg.tol_zeta);
    r.number("verify.tol_pi_endpoint", cfg.tol_pi_endpoint);
    r.unsigned64("run.seed", cfg.seed);
    r.finish();

    if (cfg.beta_hot) cfg.nbar_hot = nbar_from_temperature(*cfg.beta_hot, cfg.bath_omega);
    if (cfg.beta_cold) cfg.nbar_cold = nbar_from_temperature(*cfg.beta_cold, cfg.bath_omega);
    check(cfg);
    if (cfg.custom_hot) make_bath(cfg.custom_hot->first, cfg.custom_hot->second, cfg.ell);
    if (cfg.custom_cold) make_bath(cfg.custom_cold->first, cfg.custom_cold->second, cfg.ell);
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }
    return parse_config(in);
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::vector<std::pair<std::string, std::string>> echo(const RunConfig& cfg) {
    std::vector<std::pair<std::string, std::string>> out;
    auto num = [&](const char* key, double v) { out.emplace_back(key, format_double(v)); };
    auto integer = [&](const char* key, long long v) { out.emplace_back(key, std::to_string(v)); };
    num("engine.omega_h", cfg.omega_h);
    num("engine.omega_c", cfg.omega_c);
    num("engine.kappa", cfg.kappa);
    integer("baths.ell", cfg.ell);
    num("baths.omega", cfg.bath_omega);
    num("baths.nbar_hot", cfg.nbar_hot);
    num("baths.nbar_cold", cfg.nbar_cold);
    if (cfg.beta_hot) num("baths.beta_hot", *cfg.beta_hot);
    if (cfg.beta_cold) num("baths.beta_cold", *cfg.beta_cold);
    if (cfg.custom_hot) {
        num("bath.hot.E", cfg.custom_hot->first);
        num("bath.hot.G", cfg.custom_hot->second);
    }
    if (cfg.custom_cold) {
        num("bath.cold.E", cfg.custom_cold->first);
        num("bath.cold.G", cfg.custom_cold->second);
    }
    num("schedule.t_cycle", cfg.t_cycle);
    num("schedule.p", cfg.fractions.p);
    num("schedule.q", cfg.fractions.q);
    num("schedule.r", cfg.fractions.r);
    num("sweep.t_min", cfg.scan.t_min);
    num("sweep.t_max", cfg.scan.t_max);
    integer("sweep.peak_grid", cfg.scan.grid);
    num("sweep.rel_tol", cfg.scan.rel_tol);
    integer("sweep.grid", cfg.curve_grid);
    num("transient.n0", cfg.n0);
    integer("transient.cycles", cfg.cycles);
    integer("transient.samples", cfg.samples_per_stroke);
    num("optimize.lo", cfg.ascent.lo);
    num("optimize.hi", cfg.ascent.hi);
    integer("optimize.grid", cfg.ascent.grid);
    num("optimize.coordinate_tol", cfg.ascent.coordinate_tol);
    num("optimize.improvement_tol", cfg.ascent.improvement_tol);
    integer("optimize.max_rounds", cfg.ascent.max_rounds);
    integer("optimize.cross_section_points", cfg.cross_section_points);
    integer("pi.points", cfg.pi_points);
    integer("verify.draws", cfg.draws);
    num("verify.tol_fock", cfg.tol_fock);
    num("verify.tol_stationarity", cfg.tol_stationarity);
    num("verify.tol_fixed_point", cfg.tol_fixed_point);
    num("verify.tol_after_cycles", cfg.tol_after_cycles);
    num("verify.tol_quadrature", cfg.tol_quadrature);
    num("verify.tol_derivative", cfg.tol_derivative);
    num("verify.tol_zeta", cfg.tol_zeta);
    num("verify.tol_pi_endpoint", cfg.tol_pi_endpoint);
    out.emplace_back("run.seed", std::to_string(cfg.seed));
    return out;
}

std::string config_hash(const RunConfig& cfg) {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](char c) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    };
    for (const auto& [key, value] : echo(cfg)) {
        for (char c : key) mix(c);
        mix('=');
        for (char c : value) mix(c);
        mix('\n');
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

double effective_beta_hot(const RunConfig& cfg) {
    return temperature_from_nbar(cfg.nbar_hot, cfg.bath_omega);
}

double effective_beta_cold(const RunConfig& cfg) {
    return temperature_from_nbar(cfg.nbar_cold, cfg.bath_omega);
}

bool has_custom_baths(const RunConfig& cfg) {
    return cfg.custom_hot.has_value() || cfg.custom_cold.has_value();
}

BathPair build_pair(const RunConfig& cfg, PairKind kind) {
    if (has_custom_baths(cfg)) {
        const BathPair base =
            make_pair(PairKind::I, effective_beta_hot(cfg), effective_beta_cold(cfg), cfg.bath_omega, cfg.ell);
        const AtomBath hot = cfg.custom_hot
                                 ? make_bath(cfg.custom_hot->first, cfg.custom_hot->second, cfg.ell, "custom.hot")
                                 : base.hot;
        const AtomBath cold = cfg.custom_cold
                                  ? make_bath(cfg.custom_cold->first, cfg.custom_cold->second, cfg.ell, "custom.cold")
                                  : base.cold;
        return make_custom_pair(hot, cold);
    }
    return make_pair(kind, effective_beta_hot(cfg), effective_beta_cold(cfg), cfg.bath_omega, cfg.ell);
}

std::vector<PairKind> parse_pairs(const std::string& list) {
    std::vector<PairKind> kinds;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        PairKind kind;
        try {
            kind = parse_pair_kind(item);
        } catch (const OttoError&) {
            throw ConfigError("unknown pair '" + item + "' (expected I, CH or CC)");
        }
        if (kind != PairKind::I && kind != PairKind::CH && kind != PairKind::CC) {
            throw ConfigError("pair '" + item + "' cannot be selected here (expected I, CH or CC)");
        }
        kinds.push_back(kind);
    }
    if (kinds.empty()) throw ConfigError("empty pair list");
    return kinds;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::string& command,
                     const RunConfig& cfg)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) throw OttoError("cannot write '" + path_.string() + "'");
    std::string buffer_;
    buffer_ += "# command: " + command + "\n";
    buffer_ += std::string("# version: ") + kVersion + "\n";
    buffer_ += "# config_hash: " + config_hash(cfg) + "\n";
    buffer_ += "# seed: " + std::to_string(cfg.seed) + "\n";
    for (const auto& [key, value] : echo(cfg)) {
        buffer_ += "# " + key + " = " + value + "\n";
    }
    out_ << buffer_;
}

void CsvWriter::header(const std::vector<std::string>& columns) {
    columns_ = columns.size();
    row(columns);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (columns_ != 0 && cells.size() != columns_) {
        throw OttoError("csv row width does not match header");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
    if (!out_) throw OttoError("write to '" + path_.string() + "' failed");
}

}  // namespace otto::io
