#include "urllc/latency.hpp"

#include "urllc/errors.hpp"

namespace urllc {

HopLatency hop_latency(double d, const RadioParams& rp, double t_slot) {
    if (!(t_slot > 0.0)) throw ParameterError("t_slot must be > 0");
    const double p = p_hop(d, rp);
    if (p < kMinHopProbability) return {t_slot / kMinHopProbability, true};
    return {t_slot / p, false};
}

HopLatency propagation_latency(const Link& link, const RadioParams& rp, double t_slot,
                               double t_proc) {
    link.validate();
    if (!(t_proc >= 0.0)) throw ParameterError("t_proc must be >= 0");
    HopLatency out;
    for (double d : link.hops) {
        HopLatency h = hop_latency(d, rp, t_slot);
        out.seconds += h.seconds;
        out.capped = out.capped || h.capped;
    }
    out.seconds += static_cast<double>(link.hops.size() - 1) * t_proc;
    return out;
}

LatencyBreakdown total_latency(const Link& link, double handling_s, const RadioParams& rp,
                               double t_slot, double t_proc) {
    if (!(handling_s >= 0.0)) throw ParameterError("handling latency must be >= 0");
    HopLatency p = propagation_latency(link, rp, t_slot, t_proc);
    LatencyBreakdown b;
    b.propagation_s = p.seconds;
    b.handling_s = handling_s;
    b.total_s = p.seconds + handling_s;
    b.n_hops = link.hops.size();
    b.t_slot_s = t_slot;
    b.t_proc_s = t_proc;
    b.capped = p.capped;
    return b;
}

LatencyBreakdown total_latency(const Link& link, const QueueModel& qm, const RadioParams& rp,
                               double t_slot, double t_proc) {
    return total_latency(link, mean_dwell(qm), rp, t_slot, t_proc);
}

}  // namespace urllc
