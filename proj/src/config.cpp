#include "urllc/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "urllc/errors.hpp"

namespace urllc {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& raw, int line) {
    const std::string v = trim(raw);
    double out = 0.0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size() || v.empty())
        throw ConfigError(key + ": expected a number, got '" + v + "'", line);
    return out;
}

long long to_integer(const std::string& key, const std::string& raw, int line) {
    const std::string v = trim(raw);
    long long out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size() || v.empty())
        throw ConfigError(key + ": expected an integer, got '" + v + "'", line);
    return out;
}

bool to_bool(const std::string& key, const std::string& raw, int line) {
    const std::string v = trim(raw);
    if (v == "on" || v == "true" || v == "1" || v == "yes") return true;
    if (v == "off" || v == "false" || v == "0" || v == "no") return false;
    throw ConfigError(key + ": expected on/off, got '" + v + "'", line);
}

std::vector<double> to_list(const std::string& key, const std::string& raw, int line) {
    const std::string v = trim(raw);
    std::vector<double> out;
    if (v.empty()) throw ConfigError(key + ": empty list", line);
    if (v.find(':') != std::string::npos) {
        std::vector<double> parts;
        std::stringstream ss(v);
        std::string item;
        while (std::getline(ss, item, ':')) parts.push_back(to_double(key, item, line));
        if (parts.size() != 3 || !(parts[1] > 0.0) || parts[2] < parts[0])
            throw ConfigError(key + ": ranges are start:step:stop with step > 0", line);
        const auto n = static_cast<long long>(std::floor((parts[2] - parts[0]) / parts[1] + 1e-9));
        for (long long i = 0; i <= n; ++i) {
            // Round to 12 decimals so 0.05:0.05:0.5 yields 0.15, not 0.15000000000000002.
            double x = parts[0] + static_cast<double>(i) * parts[1];
            out.push_back(std::round(x * 1e12) / 1e12);
        }
        return out;
    }
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_double(key, item, line));
    return out;
}

template <std::size_t N>
std::array<double, N> to_array(const std::string& key, const std::string& raw, int line) {
    auto xs = to_list(key, raw, line);
    if (xs.size() != N) throw ConfigError(key + ": expected " + std::to_string(N) + " values", line);
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = xs[i];
    return out;
}

template <typename C>
std::string join(const C& xs) {
    std::string s;
    for (double x : xs) {
        if (!s.empty()) s += ", ";
        s += format_double(x);
    }
    return s;
}

struct Key {
    const char* name;
    std::function<void(ScenarioConfig&, const std::string&, int)> set;
    std::function<std::string(const ScenarioConfig&)> get;
};

#define URLLC_DOUBLE_KEY(NAME, FIELD)                                                             \
    Key {                                                                                         \
        NAME, [](ScenarioConfig& c, const std::string& v, int l) { c.FIELD = to_double(NAME, v, l); }, \
            [](const ScenarioConfig& c) { return format_double(c.FIELD); }                        \
    }

const std::vector<Key>& keys() {
    static const std::vector<Key> table = {
        URLLC_DOUBLE_KEY("p_tx_dbm", radio.p_tx_dbm),
        URLLC_DOUBLE_KEY("theta_db", radio.theta_db),
        URLLC_DOUBLE_KEY("n0_dbm_hz", radio.n0_dbm_hz),
        URLLC_DOUBLE_KEY("bandwidth_hz", radio.bandwidth_hz),
        URLLC_DOUBLE_KEY("sigma_db", radio.sigma_db),
        {"hop_mode",
         [](ScenarioConfig& c, const std::string& v, int l) {
             try {
                 c.hop_mode = parse_hop_mode(trim(v));
             } catch (const ParameterError& e) {
                 throw ConfigError(e.what(), l);
             }
         },
         [](const ScenarioConfig& c) { return to_string(c.hop_mode); }},
        {"n_max_hops",
         [](ScenarioConfig& c, const std::string& v, int l) {
             c.n_max_hops = static_cast<int>(to_integer("n_max_hops", v, l));
         },
         [](const ScenarioConfig& c) { return std::to_string(c.n_max_hops); }},
        {"rho_v", [](ScenarioConfig& c, const std::string& v, int l) { c.rho_v = to_list("rho_v", v, l); },
         [](const ScenarioConfig& c) { return join(c.rho_v); }},
        {"rho_rsu",
         [](ScenarioConfig& c, const std::string& v, int l) { c.rho_rsu = to_list("rho_rsu", v, l); },
         [](const ScenarioConfig& c) { return join(c.rho_rsu); }},
        URLLC_DOUBLE_KEY("lambda_s", lambda_s),
        URLLC_DOUBLE_KEY("mu0", mu0),
        {"rb_rsu",
         [](ScenarioConfig& c, const std::string& v, int l) {
             c.rb_rsu = static_cast<int>(to_integer("rb_rsu", v, l));
         },
         [](const ScenarioConfig& c) { return std::to_string(c.rb_rsu); }},
        URLLC_DOUBLE_KEY("t_slot", t_slot),
        URLLC_DOUBLE_KEY("t_proc", t_proc),
        URLLC_DOUBLE_KEY("omega", joint.omega),
        URLLC_DOUBLE_KEY("a_p", joint.a_p),
        URLLC_DOUBLE_KEY("a_t", joint.a_t),
        URLLC_DOUBLE_KEY("p_req", joint.p_req),
        URLLC_DOUBLE_KEY("t_req", joint.t_req),
        {"slicing",
         [](ScenarioConfig& c, const std::string& v, int l) { c.slicing = to_bool("slicing", v, l); },
         [](const ScenarioConfig& c) { return std::string(c.slicing ? "on" : "off"); }},
        {"a_max", [](ScenarioConfig& c, const std::string& v, int l) { c.a_max = to_list("a_max", v, l); },
         [](const ScenarioConfig& c) { return join(c.a_max); }},
        {"slice_proportions",
         [](ScenarioConfig& c, const std::string& v, int l) {
             c.slice_proportions = to_array<kSliceKinds>("slice_proportions", v, l);
         },
         [](const ScenarioConfig& c) { return join(c.slice_proportions); }},
        {"slice_t_slot",
         [](ScenarioConfig& c, const std::string& v, int l) {
             c.slice_t_slot = to_array<kSliceKinds>("slice_t_slot", v, l);
         },
         [](const ScenarioConfig& c) { return join(c.slice_t_slot); }},
        {"slice_t_req",
         [](ScenarioConfig& c, const std::string& v, int l) {
             c.slice_t_req = to_array<kSliceKinds>("slice_t_req", v, l);
         },
         [](const ScenarioConfig& c) { return join(c.slice_t_req); }},
        URLLC_DOUBLE_KEY("r2i_s", r2i_s),
        {"lend_cap",
         [](ScenarioConfig& c, const std::string& v, int l) {
             try {
                 c.lend_cap = parse_lend_cap(trim(v));
             } catch (const ParameterError& e) {
                 throw ConfigError(e.what(), l);
             }
         },
         [](const ScenarioConfig& c) { return to_string(c.lend_cap); }},
        {"links_per_rsu",
         [](ScenarioConfig& c, const std::string& v, int l) {
             c.links_per_rsu = static_cast<int>(to_integer("links_per_rsu", v, l));
         },
         [](const ScenarioConfig& c) { return std::to_string(c.links_per_rsu); }},
        URLLC_DOUBLE_KEY("road_density_x", road_density_x),
        URLLC_DOUBLE_KEY("road_density_y", road_density_y),
        URLLC_DOUBLE_KEY("lambda_inp", lambda_inp),
        URLLC_DOUBLE_KEY("cell_a", cell_a),
        URLLC_DOUBLE_KEY("cell_b", cell_b),
        {"nrsu_reading",
         [](ScenarioConfig& c, const std::string& v, int l) {
             const std::string s = trim(v);
             if (s == "area-weighted") c.nrsu_reading = NrsuReading::RoadLengthTimesArea;
             else if (s == "as-printed") c.nrsu_reading = NrsuReading::AsPrinted;
             else throw ConfigError("nrsu_reading: expected area-weighted or as-printed", l);
         },
         [](const ScenarioConfig& c) {
             return std::string(c.nrsu_reading == NrsuReading::AsPrinted ? "as-printed" : "area-weighted");
         }},
        {"replications",
         [](ScenarioConfig& c, const std::string& v, int l) {
             long long n = to_integer("replications", v, l);
             if (n < 1) throw ConfigError("replications must be >= 1", l);
             c.replications = static_cast<std::size_t>(n);
         },
         [](const ScenarioConfig& c) { return std::to_string(c.replications); }},
        {"seed",
         [](ScenarioConfig& c, const std::string& v, int l) {
             const std::string s = trim(v);
             std::uint64_t out = 0;
             auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
             if (ec != std::errc() || p != s.data() + s.size() || s.empty())
                 throw ConfigError("seed: expected an unsigned integer", l);
             c.seed = out;
         },
         [](const ScenarioConfig& c) { return std::to_string(c.seed); }},
    };
    return table;
}

#undef URLLC_DOUBLE_KEY

}  // namespace

void set_config_value(ScenarioConfig& cfg, const std::string& key, const std::string& value, int line) {
    for (const Key& k : keys()) {
        if (key == k.name) {
            k.set(cfg, value, line);
            return;
        }
    }
    throw ConfigError("unknown key '" + key + "'", line);
}

ScenarioConfig parse_config(const std::string& text, ScenarioConfig base) {
    std::stringstream ss(text);
    std::string raw;
    int line = 0;
    while (std::getline(ss, raw)) {
        ++line;
        const auto cut = raw.find_first_of("#;");
        std::string s = trim(cut == std::string::npos ? raw : raw.substr(0, cut));
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError("expected 'key = value'", line);
        const std::string key = trim(s.substr(0, eq));
        if (key.empty()) throw ConfigError("missing key before '='", line);
        set_config_value(base, key, s.substr(eq + 1), line);
    }
    try {
        base.validate();
    } catch (const ParameterError& e) {
        throw ConfigError(e.what());
    }
    return base;
}

ScenarioConfig load_config(const std::string& path, ScenarioConfig base) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::move(base));
}

std::vector<std::pair<std::string, std::string>> config_entries(const ScenarioConfig& cfg) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const Key& k : keys()) out.emplace_back(k.name, k.get(cfg));
    return out;
}

std::string render_config(const ScenarioConfig& cfg) {
    std::string s;
    for (const auto& [k, v] : config_entries(cfg)) s += k + " = " + v + "\n";
    return s;
}

void ScenarioConfig::validate() const {
    radio.validate();
    joint.validate();
    if (n_max_hops < 1) throw ParameterError("n_max_hops must be >= 1");
    if (rho_v.empty() || rho_rsu.empty()) throw ParameterError("sweep axes must be non-empty");
    for (double v : rho_v)
        if (!(v > 0.0)) throw ParameterError("rho_v values must be > 0");
    for (double v : rho_rsu)
        if (!(v > 0.0)) throw ParameterError("rho_rsu values must be > 0");
    if (!(lambda_s > 0.0) || !(mu0 > 0.0)) throw ParameterError("lambda_s and mu0 must be > 0");
    if (rb_rsu < 1) throw ParameterError("rb_rsu must be >= 1");
    if (!(t_slot > 0.0) || !(t_proc >= 0.0)) throw ParameterError("t_slot > 0 and t_proc >= 0 required");
    if (a_max.empty()) throw ParameterError("a_max list must be non-empty");
    for (double a : a_max)
        if (!(a >= 0.0 && a < 1.0)) throw ParameterError("a_max values must lie in [0, 1)");
    double psum = 0.0;
    for (std::size_t i = 0; i < kSliceKinds; ++i) {
        if (!(slice_proportions[i] >= 0.0)) throw ParameterError("slice proportions must be >= 0");
        if (!(slice_t_slot[i] > 0.0) || !(slice_t_req[i] > 0.0))
            throw ParameterError("slice t_slot and t_req must be > 0");
        psum += slice_proportions[i];
    }
    if (!(psum > 0.0)) throw ParameterError("slice proportions must not all be zero");
    if (!(r2i_s >= 0.0)) throw ParameterError("r2i_s must be >= 0");
    if (links_per_rsu < 1) throw ParameterError("links_per_rsu must be >= 1");
    if (!(road_density_x >= 0.0) || !(road_density_y >= 0.0))
        throw ParameterError("road densities must be >= 0");
    cell_model().validate();
    if (replications < 1) throw ParameterError("replications must be >= 1");
}

CellAreaModel ScenarioConfig::cell_model() const {
    CellAreaModel m;
    m.a = cell_a;
    m.b = cell_b;
    m.lambda_inp = lambda_inp;
    m.rho_road = road_density_x + road_density_y;
    return m;
}

std::vector<ServiceSliceClass> ScenarioConfig::slice_classes() const {
    double psum = 0.0;
    for (double p : slice_proportions) psum += p;
    std::vector<ServiceSliceClass> out;
    for (std::size_t i = 0; i < kSliceKinds; ++i) {
        ServiceSliceClass c;
        c.kind = static_cast<SliceKind>(i);
        c.lambda_a = lambda_s * slice_proportions[i] / psum;
        c.mu_s = mu0;
        c.t_req = slice_t_req[i];
        c.t_slot = slice_t_slot[i];
        out.push_back(c);
    }
    return out;
}

}  // namespace urllc
