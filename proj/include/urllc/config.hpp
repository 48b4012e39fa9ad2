#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "urllc/channel.hpp"
#include "urllc/geometry.hpp"
#include "urllc/joint_metric.hpp"
#include "urllc/slicing.hpp"

namespace urllc {

struct ScenarioConfig {
    RadioParams radio;
    HopMode hop_mode = HopMode::PppRelay;
    int n_max_hops = 5;

    std::vector<double> rho_v = {0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5};
    std::vector<double> rho_rsu = {0.01, 0.02};
    double lambda_s = 50.0;
    double mu0 = 200.0;
    int rb_rsu = 10;
    double t_slot = 50e-6;
    double t_proc = 1e-3;
    JointMetricParams joint;

    bool slicing = false;
    std::vector<double> a_max = {0.8, 0.9};
    std::array<double, kSliceKinds> slice_proportions = {8.0, 1.0, 1.0};
    std::array<double, kSliceKinds> slice_t_slot = {25e-6, 50e-6, 100e-6};
    std::array<double, kSliceKinds> slice_t_req = {10e-3, 10e-3, 10e-3};
    double r2i_s = 0.5e-3;
    LendCap lend_cap = LendCap::SurplusHeadroom;
    int links_per_rsu = 6;

    double road_density_x = 0.001;
    double road_density_y = 0.001;
    double lambda_inp = 2.5e-2;
    double cell_a = 3.61;
    double cell_b = 3.57;
    NrsuReading nrsu_reading = NrsuReading::RoadLengthTimesArea;

    std::size_t replications = 10000;
    std::uint64_t seed = 1;

    void validate() const;
    CellAreaModel cell_model() const;
    std::vector<ServiceSliceClass> slice_classes() const;
};

// Flat "key = value" text. '#' and ';' start comments; lists are comma
// separated or written start:step:stop.
ScenarioConfig parse_config(const std::string& text, ScenarioConfig base = {});
ScenarioConfig load_config(const std::string& path, ScenarioConfig base = {});

// Every key with a value that parses back to the same config.
std::vector<std::pair<std::string, std::string>> config_entries(const ScenarioConfig& cfg);
std::string render_config(const ScenarioConfig& cfg);

void set_config_value(ScenarioConfig& cfg, const std::string& key, const std::string& value,
                      int line = 0);

// %.17g, so the text parses back to the same double.
std::string format_double(double v);

}  // namespace urllc
