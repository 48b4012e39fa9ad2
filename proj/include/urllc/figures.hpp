#pragma once

#include <string>
#include <vector>

#include "urllc/config.hpp"
#include "urllc/output.hpp"
#include "urllc/simulator.hpp"

namespace urllc {

inline constexpr const char* kArtifactVersion = "1.0.0";

// fig2..fig7, fig9, fig10.
const std::vector<std::string>& figure_ids();
bool is_figure_id(const std::string& id);

// Config actually simulated for a figure: slicing forced off for fig2..fig7
// and on for fig9/fig10, which also use only the first rho_rsu.
ScenarioConfig figure_config(const std::string& id, const ScenarioConfig& cfg);

struct FigureOutput {
    Table table;
    Chart chart;
    std::vector<MetricsRecord> records;
};

FigureOutput figure_from_records(const std::string& id, const std::vector<MetricsRecord>& records);
FigureOutput build_figure(const std::string& id, const ScenarioConfig& cfg, const RunOptions& opt = {});

// Generic sweep: every record, every metric.
Table sweep_table(const std::vector<MetricsRecord>& records);

}  // namespace urllc
