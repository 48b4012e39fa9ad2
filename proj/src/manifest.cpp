#include "urllc/manifest.hpp"

#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "urllc/errors.hpp"
#include "urllc/figures.hpp"

namespace urllc {

using nlohmann::ordered_json;

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

RunManifest make_manifest(const std::string& command, const std::string& target, const ScenarioConfig& cfg,
                          std::vector<std::string> outputs) {
    RunManifest m;
    m.command = command;
    m.target = target;
    m.version = kArtifactVersion;
    m.seed = cfg.seed;
    m.timestamp = utc_timestamp();
    m.config = config_entries(cfg);
    m.outputs = std::move(outputs);
    return m;
}

std::string manifest_to_json(const RunManifest& m) {
    ordered_json j;
    j["command"] = m.command;
    j["target"] = m.target;
    j["version"] = m.version;
    j["seed"] = m.seed;
    j["timestamp"] = m.timestamp;
    ordered_json c = ordered_json::object();
    for (const auto& [k, v] : m.config) c[k] = v;
    j["config"] = c;
    j["outputs"] = m.outputs;
    return j.dump(2) + "\n";
}

RunManifest manifest_from_json(const std::string& text) {
    RunManifest m;
    try {
        const ordered_json j = ordered_json::parse(text);
        m.command = j.at("command").get<std::string>();
        m.target = j.value("target", std::string());
        m.version = j.value("version", std::string());
        m.seed = j.at("seed").get<std::uint64_t>();
        m.timestamp = j.value("timestamp", std::string());
        for (const auto& [k, v] : j.at("config").items()) m.config.emplace_back(k, v.get<std::string>());
        if (j.contains("outputs")) m.outputs = j.at("outputs").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed manifest: ") + e.what());
    }
    return m;
}

RunManifest load_manifest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open manifest '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return manifest_from_json(buf.str());
}

ScenarioConfig manifest_config(const RunManifest& m) {
    ScenarioConfig cfg;
    for (const auto& [k, v] : m.config) set_config_value(cfg, k, v);
    try {
        cfg.validate();
    } catch (const ParameterError& e) {
        throw ConfigError(std::string("manifest config invalid: ") + e.what());
    }
    if (cfg.seed != m.seed) throw ConfigError("manifest seed does not match its config");
    return cfg;
}

}  // namespace urllc
