#pragma once

#include <cstddef>

#include "urllc/channel.hpp"
#include "urllc/queueing.hpp"

namespace urllc {

// Below this per-hop success probability the expected retry time is capped.
inline constexpr double kMinHopProbability = 1e-300;

struct HopLatency {
    double seconds = 0.0;
    bool capped = false;
};

struct LatencyBreakdown {
    double propagation_s = 0.0;
    double handling_s = 0.0;
    double total_s = 0.0;
    std::size_t n_hops = 0;
    double t_slot_s = 0.0;
    double t_proc_s = 0.0;
    bool capped = false;
};

// Expected time to get one hop through: t_slot / p_hop(d).
HopLatency hop_latency(double d, const RadioParams& rp, double t_slot);

// Sum of hop latencies plus (hops - 1) relay processing delays.
HopLatency propagation_latency(const Link& link, const RadioParams& rp, double t_slot,
                               double t_proc);

// Propagation plus a precomputed handling latency.
LatencyBreakdown total_latency(const Link& link, double handling_s, const RadioParams& rp,
                               double t_slot, double t_proc);

// Propagation plus the mean sojourn of the RSU queue.
LatencyBreakdown total_latency(const Link& link, const QueueModel& qm, const RadioParams& rp,
                               double t_slot, double t_proc);

}  // namespace urllc
