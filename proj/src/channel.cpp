#include "urllc/channel.hpp"

#include <cmath>

#include "urllc/errors.hpp"

namespace urllc {

void RadioParams::validate() const {
    if (!(bandwidth_hz > 0.0)) throw ParameterError("bandwidth_hz must be > 0");
    if (!(sigma_db > 0.0)) throw ParameterError("sigma_db must be > 0");
    if (!std::isfinite(p_tx_dbm) || !std::isfinite(theta_db) || !std::isfinite(n0_dbm_hz))
        throw ParameterError("radio parameters must be finite");
}

double RadioParams::noise_dbm() const { return n0_dbm_hz + 10.0 * std::log10(bandwidth_hz); }

void Link::validate() const {
    if (hops.empty()) throw DomainError("a link needs at least one hop");
    for (double d : hops)
        if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("hop distances must be finite and > 0");
}

HopMode parse_hop_mode(const std::string& s) {
    if (s == "ppp-relay") return HopMode::PppRelay;
    if (s == "uniform-hops") return HopMode::UniformHops;
    throw ParameterError("unknown hop mode '" + s + "'");
}

std::string to_string(HopMode m) {
    return m == HopMode::PppRelay ? "ppp-relay" : "uniform-hops";
}

double path_loss_db(double d) {
    if (!(d > 0.0)) throw DomainError("distance must be > 0");
    return 69.6 + 20.9 * std::log10(d);
}

double psi(double d, const RadioParams& rp) {
    return rp.p_tx_dbm - rp.theta_db - rp.noise_dbm() - path_loss_db(d);
}

double p_hop(double d, const RadioParams& rp) {
    if (!(rp.sigma_db > 0.0)) throw ParameterError("sigma_db must be > 0");
    // erfc form keeps precision in the lower tail.
    return 0.5 * std::erfc(-psi(d, rp) / (std::sqrt(2.0) * rp.sigma_db));
}

double link_reliability(const Link& link, const RadioParams& rp) {
    link.validate();
    double p = 1.0;
    for (double d : link.hops) p *= p_hop(d, rp);
    return p;
}

Link sample_link(double rho_v, double coverage_l, const LinkSampler& s, Rng& rng) {
    if (!(rho_v > 0.0)) throw ParameterError("rho_v must be > 0");
    if (!(coverage_l > 0.0)) throw ParameterError("coverage_l must be > 0");
    Link link;
    if (s.mode == HopMode::PppRelay) {
        // Walk from the source towards the RSU through the relay vehicles;
        // PPP gaps are i.i.d. exponential.
        double x = coverage_l * uniform_open(rng);
        std::exponential_distribution<double> gap(rho_v);
        double pos = x;
        for (;;) {
            double g = gap(rng);
            if (!(g > 0.0)) continue;
            if (g >= pos) {
                link.hops.push_back(pos);
                break;
            }
            link.hops.push_back(g);
            pos -= g;
        }
    } else {
        if (s.n_max < 1) throw ParameterError("n_max must be >= 1");
        std::uniform_int_distribution<int> count(1, s.n_max);
        int n = count(rng);
        link.hops.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) link.hops.push_back(coverage_l * uniform_open(rng));
    }
    return link;
}

Link sample_link(double rho_v, double coverage_l, const LinkSampler& s, std::uint64_t seed) {
    Rng rng = make_rng(seed);
    return sample_link(rho_v, coverage_l, s, rng);
}

}  // namespace urllc
