#include "urllc/figures.hpp"

#include <algorithm>
#include <map>

#include "urllc/errors.hpp"

namespace urllc {

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {"fig2", "fig3", "fig4", "fig5",
                                                 "fig6", "fig7", "fig9", "fig10"};
    return ids;
}

bool is_figure_id(const std::string& id) {
    const auto& ids = figure_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

ScenarioConfig figure_config(const std::string& id, const ScenarioConfig& cfg) {
    if (!is_figure_id(id)) throw ParameterError("unknown figure '" + id + "'");
    ScenarioConfig c = cfg;
    if (id == "fig9" || id == "fig10") {
        c.slicing = true;
        c.rho_rsu = {cfg.rho_rsu.front()};
    } else {
        c.slicing = false;
    }
    return c;
}

namespace {

std::string f(double v) { return format_double(v); }
std::string flag(const MetricsRecord& r) { return r.unstable() ? "1" : "0"; }

struct Metric {
    const char* name;
    const char* label;
    MeanCi MetricsRecord::*field;
};

// Series keyed by a label, x = rho_v, in record order.
void add_point(std::vector<ChartSeries>& series, const std::string& name, double x, double y) {
    auto it = std::find_if(series.begin(), series.end(), [&](const ChartSeries& s) { return s.name == name; });
    if (it == series.end()) {
        series.push_back({name, {}, {}});
        it = series.end() - 1;
    }
    it->x.push_back(x);
    it->y.push_back(y);
}

std::string rsu_label(double rho_rsu) { return "rho_RSU=" + format_double(rho_rsu); }

FigureOutput single_metric(const std::vector<MetricsRecord>& recs, const Metric& m, bool with_unstable,
                           const std::string& title) {
    FigureOutput out;
    out.records = recs;
    out.table.columns = {"rho_v", "rho_rsu", std::string(m.name) + "_mean", std::string(m.name) + "_ci"};
    if (with_unstable) out.table.columns.push_back("unstable");
    out.chart = {title, "vehicle density (veh/m)", m.label, {}};
    for (const MetricsRecord& r : recs) {
        const MeanCi& v = r.*m.field;
        std::vector<std::string> row = {f(r.rho_v), f(r.rho_rsu), f(v.mean), f(v.ci)};
        if (with_unstable) row.push_back(flag(r));
        out.table.rows.push_back(std::move(row));
        add_point(out.chart.series, rsu_label(r.rho_rsu), r.rho_v, v.mean);
    }
    return out;
}

}  // namespace

FigureOutput figure_from_records(const std::string& id, const std::vector<MetricsRecord>& recs) {
    if (id == "fig2")
        return single_metric(recs, {"propagation", "propagation latency (s)", &MetricsRecord::propagation_s},
                             false, "Propagation latency");
    if (id == "fig3")
        return single_metric(recs, {"handling", "handling latency (s)", &MetricsRecord::handling_s}, true,
                             "Handling latency");
    if (id == "fig4")
        return single_metric(recs, {"total", "total latency (s)", &MetricsRecord::total_s}, true,
                             "Total latency");
    if (id == "fig5")
        return single_metric(recs, {"reliability", "reliability", &MetricsRecord::reliability}, false,
                             "Reliability");
    if (id == "fig7")
        return single_metric(recs, {"joint", "joint function", &MetricsRecord::joint}, true,
                             "Reliability and latency joint function");

    FigureOutput out;
    out.records = recs;
    if (id == "fig6") {
        out.table.columns = {"rho_v", "rho_rsu", "i_p_mean", "i_p_ci", "i_t_mean", "i_t_ci", "unstable"};
        out.chart = {"Reliability and latency utilities", "vehicle density (veh/m)", "utility", {}};
        for (const MetricsRecord& r : recs) {
            out.table.rows.push_back({f(r.rho_v), f(r.rho_rsu), f(r.i_p.mean), f(r.i_p.ci), f(r.i_t.mean),
                                      f(r.i_t.ci), flag(r)});
            add_point(out.chart.series, "I_p " + rsu_label(r.rho_rsu), r.rho_v, r.i_p.mean);
            add_point(out.chart.series, "I_t " + rsu_label(r.rho_rsu), r.rho_v, r.i_t.mean);
        }
        return out;
    }
    if (id == "fig9") {
        out.table.columns = {"rho_v", "rho_rsu", "slicing", "a_max", "i_p_mean", "i_p_ci",
                             "i_t_mean", "i_t_ci", "unstable"};
        out.chart = {"Utilities with and without slicing", "vehicle density (veh/m)", "utility", {}};
        for (const MetricsRecord& r : recs) {
            const std::string a = r.slicing_enabled ? f(r.a_max) : "";
            out.table.rows.push_back({f(r.rho_v), f(r.rho_rsu), r.slicing_enabled ? "on" : "off", a,
                                      f(r.i_p.mean), f(r.i_p.ci), f(r.i_t.mean), f(r.i_t.ci), flag(r)});
            const std::string tag = r.slicing_enabled ? "on a_max=" + a : "off";
            add_point(out.chart.series, "I_p " + tag, r.rho_v, r.i_p.mean);
            add_point(out.chart.series, "I_t " + tag, r.rho_v, r.i_t.mean);
        }
        return out;
    }
    if (id == "fig10") {
        out.table.columns = {"rho_v", "rho_rsu", "series", "slicing", "a_max", "joint_mean", "joint_ci",
                             "unstable"};
        out.chart = {"Joint function by upper bound ratio", "vehicle density (veh/m)", "joint function", {}};
        // The baseline does not depend on a_max; it is repeated once per a_max
        // so every (slicing, a_max) pair is a series.
        std::map<double, std::vector<MetricsRecord>> by_point;
        std::vector<double> order;
        for (const MetricsRecord& r : recs) {
            if (!by_point.count(r.rho_v)) order.push_back(r.rho_v);
            by_point[r.rho_v].push_back(r);
        }
        std::vector<double> amax;
        for (const MetricsRecord& r : recs)
            if (r.slicing_enabled && std::find(amax.begin(), amax.end(), r.a_max) == amax.end())
                amax.push_back(r.a_max);
        for (int on = 0; on <= 1; ++on)
            for (double a : amax)
                for (double v : order) {
                    const auto& group = by_point[v];
                    auto it = std::find_if(group.begin(), group.end(), [&](const MetricsRecord& r) {
                        return on ? (r.slicing_enabled && r.a_max == a) : !r.slicing_enabled;
                    });
                    if (it == group.end()) continue;
                    const std::string name = std::string(on ? "on" : "off") + " a_max=" + f(a);
                    out.table.rows.push_back({f(v), f(it->rho_rsu), name, on ? "on" : "off", f(a),
                                              f(it->joint.mean), f(it->joint.ci), flag(*it)});
                    add_point(out.chart.series, name, v, it->joint.mean);
                }
        return out;
    }
    throw ParameterError("unknown figure '" + id + "'");
}

FigureOutput build_figure(const std::string& id, const ScenarioConfig& cfg, const RunOptions& opt) {
    return figure_from_records(id, run_sweep(figure_config(id, cfg), opt));
}

Table sweep_table(const std::vector<MetricsRecord>& records) {
    Table t;
    t.columns = {"rho_v", "rho_rsu", "slicing", "a_max",
                 "reliability_mean", "reliability_ci", "propagation_mean", "propagation_ci",
                 "handling_mean", "handling_ci", "total_mean", "total_ci",
                 "i_p_mean", "i_p_ci", "i_t_mean", "i_t_ci", "joint_mean", "joint_ci",
                 "unstable_fraction", "infeasible_fraction", "granted_mean", "replications"};
    for (const MetricsRecord& r : records) {
        t.rows.push_back({f(r.rho_v), f(r.rho_rsu), r.slicing_enabled ? "on" : "off",
                          r.slicing_enabled ? f(r.a_max) : "",
                          f(r.reliability.mean), f(r.reliability.ci), f(r.propagation_s.mean),
                          f(r.propagation_s.ci), f(r.handling_s.mean), f(r.handling_s.ci),
                          f(r.total_s.mean), f(r.total_s.ci), f(r.i_p.mean), f(r.i_p.ci),
                          f(r.i_t.mean), f(r.i_t.ci), f(r.joint.mean), f(r.joint.ci),
                          f(r.unstable_fraction), f(r.infeasible_fraction), f(r.granted_mean),
                          std::to_string(r.replications)});
    }
    return t;
}

}  // namespace urllc
