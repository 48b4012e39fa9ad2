#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "urllc/config.hpp"

namespace urllc {

struct RunManifest {
    std::string command;  // "figure" or "sweep"
    std::string target;   // figure id; empty for sweeps
    std::string version;
    std::uint64_t seed = 0;
    std::string timestamp;  // UTC, ISO 8601
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::string> outputs;
};

RunManifest make_manifest(const std::string& command, const std::string& target, const ScenarioConfig& cfg,
                          std::vector<std::string> outputs);

std::string manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const std::string& text);
RunManifest load_manifest(const std::string& path);

// The config a manifest was produced with.
ScenarioConfig manifest_config(const RunManifest& m);

std::string utc_timestamp();

}  // namespace urllc
