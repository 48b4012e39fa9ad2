#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "urllc/config.hpp"
#include "urllc/errors.hpp"
#include "urllc/figures.hpp"
#include "urllc/manifest.hpp"
#include "urllc/output.hpp"
#include "urllc/simulator.hpp"
#include "urllc/verify.hpp"

namespace fs = std::filesystem;
using namespace urllc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Common {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> replications;
    unsigned threads = 0;
    std::string hop_mode;
    std::string slicing;
    std::string a_max;
};

void add_common(CLI::App* cmd, Common& c, bool with_out = true) {
    cmd->add_option("--config", c.config_path, "scenario file (key = value)");
    if (with_out) cmd->add_option("--out", c.out_dir, "output directory");
    cmd->add_option("--seed", c.seed, "master seed");
    cmd->add_option("--replications", c.replications, "replications per sweep point")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", c.threads, "worker threads (default: URLLC_SIM_THREADS or all cores)");
    cmd->add_option("--hop-mode", c.hop_mode, "ppp-relay or uniform-hops")
        ->check(CLI::IsMember({"ppp-relay", "uniform-hops"}));
    cmd->add_option("--slicing", c.slicing, "on or off")->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--a-max", c.a_max, "upper bound ratio, or a comma-separated list");
}

ScenarioConfig resolve_config(const Common& c) {
    ScenarioConfig cfg = c.config_path.empty() ? ScenarioConfig{} : load_config(c.config_path);
    if (c.seed) cfg.seed = *c.seed;
    if (c.replications) cfg.replications = *c.replications;
    if (!c.hop_mode.empty()) set_config_value(cfg, "hop_mode", c.hop_mode);
    if (!c.slicing.empty()) set_config_value(cfg, "slicing", c.slicing);
    if (!c.a_max.empty()) set_config_value(cfg, "a_max", c.a_max);
    try {
        cfg.validate();
    } catch (const ParameterError& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory '" + dir + "': " + ec.message());
}

// Writes CSV, SVG and manifest; returns the manifest path.
std::string emit(const std::string& dir, const std::string& stem, const std::string& command,
                 const std::string& target, const ScenarioConfig& cfg, const Table& table, const Chart& chart) {
    ensure_dir(dir);
    const std::string csv = stem + ".csv", svg = stem + ".svg", man = stem + ".manifest.json";
    write_text_file((fs::path(dir) / csv).string(), to_csv(table));
    write_text_file((fs::path(dir) / svg).string(), render_svg(chart));
    const RunManifest m = make_manifest(command, target, cfg, {csv, svg});
    const std::string man_path = (fs::path(dir) / man).string();
    write_text_file(man_path, manifest_to_json(m));
    std::cout << (fs::path(dir) / csv).string() << "\n"
              << (fs::path(dir) / svg).string() << "\n"
              << man_path << "\n";
    return man_path;
}

void run_figure(const std::string& id, const ScenarioConfig& cfg, const std::string& out, unsigned threads) {
    RunOptions opt;
    opt.threads = threads;
    const FigureOutput fig = build_figure(id, cfg, opt);
    emit(out, id, "figure", id, cfg, fig.table, fig.chart);
}

void run_sweep_cmd(const ScenarioConfig& cfg, const std::string& out, unsigned threads) {
    RunOptions opt;
    opt.threads = threads;
    const auto records = run_sweep(cfg, opt);
    Chart chart{"Joint function sweep", "vehicle density (veh/m)", "joint function", {}};
    for (const MetricsRecord& r : records) {
        std::string name = "rho_RSU=" + format_double(r.rho_rsu);
        if (r.slicing_enabled) name += " a_max=" + format_double(r.a_max);
        else if (cfg.slicing) name += " off";
        auto it = std::find_if(chart.series.begin(), chart.series.end(),
                               [&](const ChartSeries& s) { return s.name == name; });
        if (it == chart.series.end()) {
            chart.series.push_back({name, {}, {}});
            it = chart.series.end() - 1;
        }
        it->x.push_back(r.rho_v);
        it->y.push_back(r.joint.mean);
    }
    emit(out, "sweep", "sweep", "", cfg, sweep_table(records), chart);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"URLLC vehicular network simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kArtifactVersion);

    Common fig_opts, sweep_opts, verify_opts;
    std::string fig_id, suite, manifest_path, rerun_out;
    unsigned rerun_threads = 0;
    std::vector<std::string> tolerances;
    std::string report_path;

    auto* figure = app.add_subcommand("figure", "reproduce one figure");
    figure->add_option("id", fig_id, "fig2..fig7, fig9, fig10")->required()->check(CLI::IsMember(figure_ids()));
    add_common(figure, fig_opts);

    auto* sweep = app.add_subcommand("sweep", "run the configured sweep");
    add_common(sweep, sweep_opts);

    auto* verify = app.add_subcommand("verify", "run an oracle suite");
    verify->add_option("suite", suite, "queue, delta, channel or slicing")
        ->required()
        ->check(CLI::IsMember(verify_suites()));
    add_common(verify, verify_opts, false);
    verify->add_option("--tolerance", tolerances, "override, e.g. ks=0.02 (repeatable)");
    verify->add_option("--report", report_path, "also write the JSON report here");

    auto* rerun = app.add_subcommand("rerun", "re-run the command recorded in a manifest");
    rerun->add_option("manifest", manifest_path, "manifest JSON")->required();
    rerun->add_option("--out", rerun_out, "output directory (default: the manifest's directory)");
    rerun->add_option("--threads", rerun_threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*figure) {
            run_figure(fig_id, resolve_config(fig_opts), fig_opts.out_dir, fig_opts.threads);
        } else if (*sweep) {
            run_sweep_cmd(resolve_config(sweep_opts), sweep_opts.out_dir, sweep_opts.threads);
        } else if (*verify) {
            std::map<std::string, double> overrides;
            for (const std::string& t : tolerances) {
                const auto eq = t.find('=');
                if (eq == std::string::npos) throw ConfigError("tolerance override must be name=value");
                try {
                    overrides[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
                } catch (const std::exception&) {
                    throw ConfigError("bad tolerance value in '" + t + "'");
                }
            }
            const VerifyReport rep = run_verify(suite, resolve_config(verify_opts), overrides);
            const std::string json = rep.to_json();
            std::cout << json;
            if (!report_path.empty()) write_text_file(report_path, json);
            return rep.passed() ? kExitOk : kExitFailure;
        } else if (*rerun) {
            const RunManifest m = load_manifest(manifest_path);
            const ScenarioConfig cfg = manifest_config(m);
            const std::string out =
                rerun_out.empty() ? fs::path(manifest_path).parent_path().string() : rerun_out;
            const std::string dir = out.empty() ? "." : out;
            if (m.command == "figure") {
                if (!is_figure_id(m.target)) throw ConfigError("manifest names unknown figure '" + m.target + "'");
                run_figure(m.target, cfg, dir, rerun_threads);
            } else if (m.command == "sweep") {
                run_sweep_cmd(cfg, dir, rerun_threads);
            } else {
                throw ConfigError("manifest command '" + m.command + "' cannot be re-run");
            }
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}
