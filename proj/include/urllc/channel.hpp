#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "urllc/rng.hpp"

namespace urllc {

struct RadioParams {
    double p_tx_dbm = 30.0;
    double theta_db = 5.0;
    double n0_dbm_hz = -174.0;
    double bandwidth_hz = 1e9;
    double sigma_db = 4.0;

    void validate() const;
    double noise_dbm() const;
};

// Ordered hop distances from the source vehicle towards its RSU.
struct Link {
    std::vector<double> hops;

    std::size_t n_hops() const { return hops.size(); }
    void validate() const;
};

enum class HopMode { PppRelay, UniformHops };

HopMode parse_hop_mode(const std::string& s);
std::string to_string(HopMode m);

// Deterministic part of the mmWave path loss, dB.
double path_loss_db(double d);

// SNR margin over the threshold before shadowing, dB.
double psi(double d, const RadioParams& rp);

// P(shadowing <= psi(d)) for zero-mean Gaussian shadowing in dB.
double p_hop(double d, const RadioParams& rp);

double link_reliability(const Link& link, const RadioParams& rp);

struct LinkSampler {
    HopMode mode = HopMode::PppRelay;
    int n_max = 5;  // uniform-hops only
};

// One source-to-RSU link on a covered segment of length coverage_l with the
// RSU at the origin.
Link sample_link(double rho_v, double coverage_l, const LinkSampler& s, Rng& rng);
Link sample_link(double rho_v, double coverage_l, const LinkSampler& s, std::uint64_t seed);

}  // namespace urllc
