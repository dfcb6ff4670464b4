#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "otto/commands.hpp"
#include "otto/errors.hpp"

namespace {

constexpr int kConfigError = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-time quantum Otto engine with collision-model baths"};
    app.set_version_flag("--version", otto::io::kVersion);
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::string pairs = "I,CH,CC";
    int grid = 0;
    std::uint64_t seed = 0;
    app.add_option("--config", config_path, "INI config file (defaults apply when omitted)")
        ->check(CLI::ExistingFile);
    app.add_option("--out", out_dir, "Output directory (falls back to $OTTO_OUT_DIR, then .)");
    app.add_option("--pairs", pairs, "Comma-separated bath pairs from I, CH, CC")->capture_default_str();
    auto* grid_opt = app.add_option("--grid", grid, "Number of t_cycle points in curves");
    auto* seed_opt = app.add_option("--seed", seed, "Seed for the random draws of verify");

    std::string metric = "power";
    auto* curve = app.add_subcommand("curve", "Metric against t_cycle for each pair");
    curve->add_option("metric", metric, "power, efficiency or cost")->capture_default_str();
    auto* transient = app.add_subcommand("transient", "Photon-number trajectory from n0 toward the steady cycle");
    auto* optimize = app.add_subcommand("optimize", "Maximize peak power over the stroke fractions p, q, r");
    auto* verify = app.add_subcommand("verify", "Run the invariant suites and print a verdict table");
    auto* pi_sweep = app.add_subcommand("pi-sweep", "Peak power and work along the CH-to-CC family");

    CLI11_PARSE(app, argc, argv);

    try {
        otto::cli::Context ctx;
        ctx.cfg = config_path.empty() ? otto::io::RunConfig{} : otto::io::load_config(config_path);
        if (*grid_opt) {
            if (grid < 2) throw otto::ConfigError("--grid must be at least 2");
            ctx.cfg.curve_grid = grid;
        }
        if (*seed_opt) ctx.cfg.seed = seed;
        ctx.pairs = otto::io::parse_pairs(pairs);
        if (!out_dir.empty()) {
            ctx.out_dir = out_dir;
        } else if (const char* env = std::getenv("OTTO_OUT_DIR"); env && *env) {
            ctx.out_dir = env;
        }

        if (*curve) return otto::cli::cmd_curve(ctx, otto::cli::parse_metric(metric), std::cout);
        if (*transient) return otto::cli::cmd_transient(ctx, std::cout);
        if (*optimize) return otto::cli::cmd_optimize(ctx, std::cout);
        if (*verify) return otto::cli::cmd_verify(ctx, std::cout);
        if (*pi_sweep) return otto::cli::cmd_pi_sweep(ctx, std::cout);
    } catch (const otto::OttoError& e) {
        std::cerr << "otto: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "otto: " << e.what() << '\n';
        return kConfigError;
    }
    return 0;
}
