#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "otto/bath.hpp"
#include "otto/io.hpp"

namespace otto::cli {

struct Context {
    io::RunConfig cfg;
    std::filesystem::path out_dir = ".";
    std::vector<PairKind> pairs{PairKind::I, PairKind::CH, PairKind::CC};
};

enum class Metric { Power, Efficiency, Cost };
Metric parse_metric(const std::string& text);

// Each command writes its files under ctx.out_dir, prints a short summary to
// `log` and returns the process exit code.
int cmd_curve(const Context& ctx, Metric metric, std::ostream& log);
int cmd_transient(const Context& ctx, std::ostream& log);
int cmd_optimize(const Context& ctx, std::ostream& log);
int cmd_verify(const Context& ctx, std::ostream& log);
int cmd_pi_sweep(const Context& ctx, std::ostream& log);

}  // namespace otto::cli
