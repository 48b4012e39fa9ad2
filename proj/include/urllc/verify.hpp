#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "urllc/config.hpp"
#include "urllc/queueing.hpp"

namespace urllc {

struct CheckResult {
    std::string name;
    bool passed = false;
    double value = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
    std::string to_json() const;
};

const std::vector<std::string>& verify_suites();

// Tolerance overrides by name:
//   queue:   mean_rel (0.02), ks (0.01), jobs (1e5)
//   delta:   residual (1e-9)
//   channel: sigmas (3), draws (1e6)
//   slicing: instances (1000)
VerifyReport run_verify(const std::string& suite, const ScenarioConfig& cfg,
                        const std::map<std::string, double>& overrides = {});

// Service rate giving a target delta for an arrival law: solves
// lst(s) = delta for s, then mu = s / (1 - delta).
double mu_for_delta(const InterarrivalLaw& law, double delta);

// Record spacing that makes successive DES sojourns close to independent.
std::size_t des_spacing(double delta);

}  // namespace urllc
