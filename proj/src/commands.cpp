#include "otto/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "otto/cycle.hpp"
#include "otto/errors.hpp"
#include "otto/optimize.hpp"
#include "otto/verify.hpp"

namespace otto::cli {

namespace {

using nlohmann::ordered_json;
using io::format_double;

struct NamedPair {
    std::string name;
    BathPair pair;
};

std::vector<NamedPair> selected_pairs(const Context& ctx) {
    if (io::has_custom_baths(ctx.cfg)) {
        return {{"custom", io::build_pair(ctx.cfg, PairKind::Custom)}};
    }
    std::vector<NamedPair> out;
    for (PairKind kind : ctx.pairs) {
        out.push_back({std::string(to_string(kind)), io::build_pair(ctx.cfg, kind)});
    }
    return out;
}

EngineModel engine_for(const Context& ctx, const BathPair& pair) {
    return EngineModel::make(pair.hot, pair.cold, ctx.cfg.omega_h, ctx.cfg.omega_c, ctx.cfg.kappa);
}

// Non-finite values have no JSON literal; they are written as strings.
ordered_json number(double v) {
    if (std::isfinite(v)) return v;
    return format_double(v);
}

ordered_json bath_json(const AtomBath& b) {
    ordered_json j{{"E", b.E}, {"G", b.G}, {"ell", b.ell}, {"label", b.label}};
    if (b.provenance) {
        j["beta_R"] = number(b.provenance->beta_R);
        j["omega"] = b.provenance->omega;
        j["coherence_g"] = b.provenance->coherence_g;
    }
    return j;
}

ordered_json pair_json(const NamedPair& p) {
    return {{"name", p.name},
            {"kind", std::string(to_string(p.pair.kind))},
            {"beta_h", number(p.pair.beta_h)},
            {"beta_c", number(p.pair.beta_c)},
            {"omega", p.pair.omega},
            {"ell", p.pair.ell},
            {"E_h", p.pair.hot.E},
            {"G_h", p.pair.hot.G},
            {"E_c", p.pair.cold.E},
            {"G_c", p.pair.cold.G},
            {"hot", bath_json(p.pair.hot)},
            {"cold", bath_json(p.pair.cold)}};
}

ordered_json record(const Context& ctx, const std::string& command, const std::vector<NamedPair>& pairs) {
    ordered_json config = ordered_json::object();
    for (const auto& [key, value] : io::echo(ctx.cfg)) config[key] = value;
    ordered_json j{{"command", command},
                   {"version", io::kVersion},
                   {"config_hash", io::config_hash(ctx.cfg)},
                   {"seed", ctx.cfg.seed},
                   {"config", config}};
    ordered_json list = ordered_json::array();
    for (const auto& p : pairs) list.push_back(pair_json(p));
    j["pairs"] = list;
    return j;
}

void write_json(const std::filesystem::path& path, const ordered_json& j) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw OttoError("cannot write '" + path.string() + "'");
    out << j.dump(2) << '\n';
}

std::filesystem::path prepare(const Context& ctx) {
    std::filesystem::create_directories(ctx.out_dir);
    return ctx.out_dir;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> t(n);
    const double a = std::log(lo);
    const double step = (std::log(hi) - a) / (n - 1);
    for (int k = 0; k < n; ++k) t[k] = std::exp(a + k * step);
    t.front() = lo;
    t.back() = hi;
    return t;
}

std::string metric_name(Metric m) {
    switch (m) {
        case Metric::Power: return "power";
        case Metric::Efficiency: return "efficiency";
        case Metric::Cost: return "cost";
    }
    return "?";
}

double metric_value(Metric m, const CycleReport& r) {
    switch (m) {
        case Metric::Power: return r.P;
        case Metric::Efficiency: return r.eta;
        case Metric::Cost: return r.V_e + r.V_c;
    }
    return 0.0;
}

std::vector<std::string> report_cells(const CycleReport& r, const StrokeSchedule& s) {
    return {format_double(r.t_cycle), format_double(s.t_h),  format_double(s.t_c),
            format_double(s.t_We),    format_double(s.t_Wc), format_double(r.nbar_c),
            format_double(r.nbar_h),  format_double(r.W),    format_double(r.Q_h),
            format_double(r.Q_c),     format_double(r.V_e),  format_double(r.V_c),
            format_double(r.eta),     format_double(r.P),    r.profitable() ? "1" : "0"};
}

const std::vector<std::string> kReportColumns{"t_cycle", "t_h", "t_c", "t_We", "t_Wc",
                                              "nbar_c",  "nbar_h", "W", "Q_h", "Q_c",
                                              "V_e",     "V_c", "eta", "P", "profitable"};

ordered_json optimum_json(const Optimum& o) {
    ordered_json cert = ordered_json::array();
    for (const auto& n : o.certificate) {
        cert.push_back({{"label", n.label}, {"at", n.at}, {"power", number(n.value)}});
    }
    return {{"t_cycle", o.t_cycle},
            {"p", o.fractions.p},
            {"q", o.fractions.q},
            {"r", o.fractions.r},
            {"power", number(o.power)},
            {"at_scan_boundary", o.at_scan_boundary},
            {"dominates_certificate", o.dominates_certificate()},
            {"certificate", cert}};
}

}  // namespace

Metric parse_metric(const std::string& text) {
    if (text == "power") return Metric::Power;
    if (text == "efficiency") return Metric::Efficiency;
    if (text == "cost") return Metric::Cost;
    throw ConfigError("unknown metric '" + text + "' (expected power, efficiency or cost)");
}

int cmd_curve(const Context& ctx, Metric metric, std::ostream& log) {
    const auto pairs = selected_pairs(ctx);
    const auto dir = prepare(ctx);
    const std::string name = "curve_" + metric_name(metric);
    io::CsvWriter csv(dir / (name + ".csv"), "curve " + metric_name(metric), ctx.cfg);
    std::vector<std::string> columns{"pair"};
    columns.insert(columns.end(), kReportColumns.begin(), kReportColumns.end());
    columns.push_back("value");
    csv.header(columns);

    const auto grid = log_grid(ctx.cfg.scan.t_min, ctx.cfg.scan.t_max, ctx.cfg.curve_grid);
    const Fractions& f = ctx.cfg.fractions;
    ordered_json rec = record(ctx, "curve", pairs);
    rec["metric"] = metric_name(metric);
    ordered_json rows = ordered_json::array();
    for (const auto& p : pairs) {
        const EngineModel engine = engine_for(ctx, p.pair);
        for (double t : grid) {
            const StrokeSchedule s = StrokeSchedule::from_fractions(t, f.p, f.q, f.r);
            const CycleReport r = run_cycle(engine.config(s), engine.costs);
            std::vector<std::string> cells{p.name};
            const auto body = report_cells(r, s);
            cells.insert(cells.end(), body.begin(), body.end());
            cells.push_back(format_double(metric_value(metric, r)));
            csv.row(cells);
            rows.push_back({{"pair", p.name}, {"t_cycle", t}, {"value", number(metric_value(metric, r))}});
        }
    }
    rec["rows"] = rows;
    write_json(dir / (name + ".json"), rec);
    log << "wrote " << pairs.size() * grid.size() << " rows to " << csv.path().string() << '\n';
    return 0;
}

int cmd_transient(const Context& ctx, std::ostream& log) {
    const auto pairs = selected_pairs(ctx);
    const auto dir = prepare(ctx);
    io::CsvWriter csv(dir / "transient.csv", "transient", ctx.cfg);
    csv.header({"pair", "cycle", "phase", "t", "nbar", "end_of_cycle"});
    const Fractions& f = ctx.cfg.fractions;
    const StrokeSchedule s = StrokeSchedule::from_fractions(ctx.cfg.t_cycle, f.p, f.q, f.r);
    ordered_json rec = record(ctx, "transient", pairs);
    ordered_json summary = ordered_json::array();
    for (const auto& p : pairs) {
        const OttoConfig cfg = engine_for(ctx, p.pair).config(s);
        const auto samples = transient_trajectory(ctx.cfg.n0, ctx.cfg.cycles, cfg, ctx.cfg.samples_per_stroke);
        double last_end = ctx.cfg.n0;
        for (const auto& x : samples) {
            const bool end = x.phase == StrokePhase::Compression;
            if (end) last_end = x.nbar;
            csv.row({p.name, std::to_string(x.cycle), std::string(to_string(x.phase)), format_double(x.t),
                     format_double(x.nbar), end ? "1" : "0"});
        }
        const double exponent = p.pair.hot.delta() * s.t_h + p.pair.cold.delta() * s.t_c;
        summary.push_back({{"pair", p.name},
                           {"nbar_sc", steady_cycle_nbar(cfg)},
                           {"final_end_of_cycle", last_end},
                           {"closed_form_final", nbar_after_cycles(ctx.cfg.n0, ctx.cfg.cycles, cfg)},
                           {"cycles_for_1e-8", std::ceil(50.0 / exponent)}});
    }
    rec["summary"] = summary;
    write_json(dir / "transient.json", rec);
    log << "wrote " << csv.path().string() << '\n';
    return 0;
}

int cmd_optimize(const Context& ctx, std::ostream& log) {
    const auto pairs = selected_pairs(ctx);
    const auto dir = prepare(ctx);
    ordered_json rec = record(ctx, "optimize", pairs);
    ordered_json results = ordered_json::array();
    io::CsvWriter curves(dir / "optimize_curve.csv", "optimize", ctx.cfg);
    curves.header({"pair", "t_cycle", "P_default", "P_optimized"});
    const auto grid = log_grid(ctx.cfg.scan.t_min, ctx.cfg.scan.t_max, ctx.cfg.curve_grid);

    for (const auto& p : pairs) {
        const EngineModel engine = engine_for(ctx, p.pair);
        SweepSpec spec{engine, ctx.cfg.fractions, ctx.cfg.scan, ctx.cfg.ascent, ctx.cfg.cross_section_points};
        try {
            const PqrResult r = max_power_pqr(spec);
            ordered_json history = ordered_json::array();
            for (double v : r.ascent.history) history.push_back(number(v));
            results.push_back({{"pair", p.name},
                               {"status", "ok"},
                               {"optimum", optimum_json(r.optimum)},
                               {"baseline", optimum_json(r.baseline)},
                               {"rounds", r.ascent.rounds},
                               {"history", history},
                               {"improvement", number(r.optimum.power / r.baseline.power - 1.0)}});
            for (const auto& section : r.cross_sections) {
                const std::string var(1, section.variable);
                io::CsvWriter csv(dir / ("optimize_cross_" + p.name + "_" + var + ".csv"), "optimize", ctx.cfg);
                csv.header({var, "max_power", "t_cycle_at_max", "p_fixed", "q_fixed", "r_fixed"});
                for (const auto& pt : section.points) {
                    csv.row({format_double(pt.value), format_double(pt.max_power), format_double(pt.t_cycle),
                             format_double(section.fixed.p), format_double(section.fixed.q),
                             format_double(section.fixed.r)});
                }
            }
            for (double t : grid) {
                curves.row({p.name, format_double(t), format_double(engine.power(t, ctx.cfg.fractions)),
                            format_double(engine.power(t, r.ascent.argmax))});
            }
            log << p.name << ": p=" << format_double(r.optimum.fractions.p)
                << " q=" << format_double(r.optimum.fractions.q) << " r=" << format_double(r.optimum.fractions.r)
                << " max_power=" << format_double(r.optimum.power) << " at t_cycle="
                << format_double(r.optimum.t_cycle) << " (default " << format_double(r.baseline.power) << ")\n";
        } catch (const NoProfitableCycle& e) {
            results.push_back({{"pair", p.name}, {"status", "no_profitable_cycle"}, {"message", e.what()}});
            log << p.name << ": no profitable cycle (" << e.what() << ")\n";
        }
    }
    rec["results"] = results;
    write_json(dir / "optimize.json", rec);
    return 0;
}

int cmd_verify(const Context& ctx, std::ostream& log) {
    const auto dir = prepare(ctx);
    const auto checks = verify::run_all(ctx.cfg);
    io::CsvWriter csv(dir / "verify.csv", "verify", ctx.cfg);
    csv.header({"property", "measured", "tolerance", "verdict", "detail"});
    ordered_json rec = record(ctx, "verify", {});
    ordered_json rows = ordered_json::array();
    for (const auto& c : checks) {
        const char* verdict = c.passed ? "PASS" : "FAIL";
        csv.row({c.name, format_double(c.measured), format_double(c.tolerance), verdict, c.detail});
        rows.push_back({{"property", c.name},
                        {"measured", number(c.measured)},
                        {"tolerance", c.tolerance},
                        {"passed", c.passed},
                        {"detail", c.detail}});
        log << verdict << "  " << c.name << "  measured=" << format_double(c.measured)
            << "  tolerance=" << format_double(c.tolerance);
        if (!c.detail.empty()) log << "  (" << c.detail << ")";
        log << '\n';
    }
    const bool ok = verify::all_passed(checks);
    rec["properties"] = rows;
    rec["all_passed"] = ok;
    write_json(dir / "verify.json", rec);
    return ok ? 0 : 1;
}

int cmd_pi_sweep(const Context& ctx, std::ostream& log) {
    if (io::has_custom_baths(ctx.cfg)) {
        throw ConfigError("pi-sweep interpolates thermal-atom pairs; remove [bath.hot]/[bath.cold]");
    }
    const auto dir = prepare(ctx);
    const BathPair base = io::build_pair(ctx.cfg, PairKind::I);
    const PiSweepResult r = pi_sweep(base, ctx.cfg.omega_h, ctx.cfg.omega_c, ctx.cfg.kappa, ctx.cfg.fractions,
                                     ctx.cfg.t_cycle, ctx.cfg.pi_points, ctx.cfg.scan);
    io::CsvWriter csv(dir / "pi_sweep.csv", "pi-sweep", ctx.cfg);
    csv.header({"pi", "max_power", "t_cycle_at_max", "work_at_reference"});
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows) {
        csv.row({format_double(row.pi), format_double(row.max_power), format_double(row.t_cycle_at_max),
                 format_double(row.work_at_reference)});
        rows.push_back({{"pi", row.pi},
                        {"max_power", number(row.max_power)},
                        {"t_cycle_at_max", row.t_cycle_at_max},
                        {"work_at_reference", number(row.work_at_reference)}});
    }
    ordered_json rec = record(ctx, "pi-sweep", {{"I", base}});
    rec["rows"] = rows;
    rec["argmax_pi_power"] = r.argmax_pi_power;
    rec["argmax_pi_work"] = r.argmax_pi_work;
    write_json(dir / "pi_sweep.json", rec);
    log << "argmax pi (power) = " << format_double(r.argmax_pi_power)
        << ", argmax pi (work) = " << format_double(r.argmax_pi_work) << '\n';
    return 0;
}

}  // namespace otto::cli
