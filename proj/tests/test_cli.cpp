#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "otto/commands.hpp"
#include "otto/errors.hpp"
#include "otto/io.hpp"
#include "otto/verify.hpp"

using namespace otto;

namespace {

io::RunConfig parse(const std::string& text) {
    std::istringstream in(text);
    return io::parse_config(in);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("otto_test_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

std::vector<std::string> data_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line[0] != '#') out.push_back(line);
    }
    return out;
}

}  // namespace

TEST_CASE("shortest round-trip formatting") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 123456789.0, -2.5e17}) {
        CHECK(std::stod(io::format_double(v)) == v);
    }
    CHECK(io::format_double(0.1) == "0.1");
    CHECK(io::format_double(2.0) == "2");
}

TEST_CASE("config parsing") {
    const io::RunConfig cfg = parse(
        "; comment\n[engine]\nomega_h = 2\nomega_c = 1\n[schedule]\np = 0.6\n[run]\nseed = 7\n");
    CHECK(cfg.omega_h == 2.0);
    CHECK(cfg.fractions.p == 0.6);
    CHECK(cfg.fractions.q == 0.5);
    CHECK(cfg.seed == 7);
    CHECK_THROWS_AS(parse("[engine]\nomega_x = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse("[engine]\nomega_h = abc\n"), ConfigError);
    CHECK_THROWS_AS(parse("[engine]\nomega_h = 0.3\n"), ConfigError);
    CHECK_THROWS_AS(parse("[bath.hot]\nE = 0.2\n"), ConfigError);
}

TEST_CASE("inline comments are ignored") {
    const io::RunConfig cfg = parse("[engine]\nkappa = 2   ; slower ramps\n[run]\nseed = 9 # fixed\n");
    CHECK(cfg.kappa == 2.0);
    CHECK(cfg.seed == 9);
}

TEST_CASE("forced G <= E is rejected while parsing") {
    CHECK_THROWS_AS(parse("[bath.hot]\nE = 0.4\nG = 0.3\n"), NonThermalizing);
}

TEST_CASE("temperatures override photon numbers") {
    const io::RunConfig cfg = parse("[baths]\nbeta_hot = 0.5\nbeta_cold = 2\n");
    CHECK(io::effective_beta_hot(cfg) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(io::effective_beta_cold(cfg) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("echo covers every knob and drives the hash") {
    const io::RunConfig a;
    io::RunConfig b;
    b.cross_section_points = 98;
    CHECK(io::config_hash(a) != io::config_hash(b));
    CHECK(io::config_hash(a).size() == 16);
    // Re-parsing the echo reproduces the config.
    std::string text;
    std::string section;
    for (const auto& [key, value] : io::echo(b)) {
        const auto dot = key.rfind('.');
        if (key.substr(0, dot) != section) {
            section = key.substr(0, dot);
            text += "[" + section + "]\n";
        }
        text += key.substr(dot + 1) + " = " + value + "\n";
    }
    CHECK(io::config_hash(parse(text)) == io::config_hash(b));
}

TEST_CASE("pair lists") {
    CHECK(io::parse_pairs("I, CC").size() == 2);
    CHECK_THROWS_AS(io::parse_pairs("I,XX"), ConfigError);
    CHECK_THROWS_AS(io::parse_pairs(""), ConfigError);
}

TEST_CASE("curve rows, header and determinism") {
    cli::Context ctx;
    ctx.cfg.curve_grid = 7;
    ctx.out_dir = scratch("curve");
    std::ostringstream log;
    REQUIRE(cli::cmd_curve(ctx, cli::Metric::Efficiency, log) == 0);
    const std::string first = slurp(ctx.out_dir / "curve_efficiency.csv");
    const auto lines = data_lines(first);
    REQUIRE(lines.size() == 1 + 3 * 7);
    CHECK(lines[0].rfind("pair,t_cycle,", 0) == 0);
    CHECK(first.find("# config_hash: " + io::config_hash(ctx.cfg)) != std::string::npos);
    REQUIRE(cli::cmd_curve(ctx, cli::Metric::Efficiency, log) == 0);
    CHECK(slurp(ctx.out_dir / "curve_efficiency.csv") == first);
    CHECK(std::filesystem::exists(ctx.out_dir / "curve_efficiency.json"));
}

TEST_CASE("transient end-of-cycle flags") {
    cli::Context ctx;
    ctx.cfg.cycles = 4;
    ctx.cfg.samples_per_stroke = 3;
    ctx.pairs = {PairKind::CC};
    ctx.out_dir = scratch("transient");
    std::ostringstream log;
    REQUIRE(cli::cmd_transient(ctx, log) == 0);
    int ends = 0;
    for (const auto& line : data_lines(slurp(ctx.out_dir / "transient.csv"))) {
        ends += line.size() > 2 && line.substr(line.size() - 2) == ",1";
    }
    CHECK(ends == 4);
}

TEST_CASE("optimize reports an unprofitable engine without failing") {
    cli::Context ctx;
    ctx.cfg.scan = {0.01, 0.5, 30, 1e-6};
    ctx.cfg.cross_section_points = 3;
    ctx.cfg.ascent.grid = 5;
    ctx.cfg.ascent.max_rounds = 1;
    ctx.cfg.curve_grid = 3;
    ctx.pairs = {PairKind::I};
    ctx.out_dir = scratch("optimize");
    std::ostringstream log;
    CHECK(cli::cmd_optimize(ctx, log) == 0);
    CHECK(slurp(ctx.out_dir / "optimize.json").find("no_profitable_cycle") != std::string::npos);
}

TEST_CASE("verify passes by default and fails a tampered tolerance") {
    io::RunConfig cfg;
    cfg.draws = 20;
    CHECK(verify::all_passed(verify::run_all(cfg)));
    cfg.tol_quadrature = 1e-15;
    const auto checks = verify::run_all(cfg);
    CHECK_FALSE(verify::all_passed(checks));
    for (const auto& c : checks) {
        if (c.name == "quadrature_agreement") CHECK_FALSE(c.passed);
        else CHECK(c.passed);
    }
}
