#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "urllc/config.hpp"
#include "urllc/numeric.hpp"

namespace urllc {

struct MetricsRecord {
    double rho_v = 0.0;
    double rho_rsu = 0.0;
    double a_max = 0.0;  // meaningful only when slicing_enabled
    bool slicing_enabled = false;
    MeanCi reliability;
    MeanCi propagation_s;
    MeanCi handling_s;
    MeanCi total_s;
    MeanCi i_p;
    MeanCi i_t;
    MeanCi joint;
    double unstable_fraction = 0.0;    // replications with an unstable RSU queue
    double infeasible_fraction = 0.0;  // slicing: demand exceeded the pool
    double granted_mean = 0.0;         // slicing: blocks moved per cell
    std::size_t replications = 0;

    bool unstable() const { return unstable_fraction > 0.0; }
};

// Per-replication values before reduction; exposed for paired tests.
struct ReplicationSample {
    double reliability = 0.0;
    double propagation_s = 0.0;
    double handling_s = 0.0;
    double total_s = 0.0;
    double i_p = 0.0;
    double i_t = 0.0;
    double joint = 0.0;
    bool unstable = false;
    bool infeasible = false;
    int granted = 0;
};

struct RunOptions {
    unsigned threads = 0;  // 0: URLLC_SIM_THREADS, else hardware concurrency
};

unsigned resolve_threads(unsigned requested);

// Runs fn(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

MetricsRecord reduce(double rho_v, double rho_rsu, const std::vector<ReplicationSample>& reps);

// Single-link model: one source on a segment of length 1/rho_rsu, the RSU
// queue served by rb_rsu blocks.
std::vector<ReplicationSample> link_replications(const ScenarioConfig& cfg, double rho_v,
                                                 double rho_rsu, std::size_t point_index,
                                                 const RunOptions& opt = {});

// One InP cell per replication. Element 0 is the unsliced baseline, element
// 1 + i uses cfg.a_max[i]; all share the same sampled cell.
std::vector<std::vector<ReplicationSample>> cell_replications(const ScenarioConfig& cfg,
                                                              double rho_v, double rho_rsu,
                                                              std::size_t point_index,
                                                              const RunOptions& opt = {});

// Records for one sweep point: one record without slicing, or the baseline
// followed by one record per a_max with slicing.
std::vector<MetricsRecord> run_point(const ScenarioConfig& cfg, double rho_v, double rho_rsu,
                                     std::size_t point_index, const RunOptions& opt = {});

// Cartesian product, rho_rsu outer and rho_v inner; the point index is the
// position in that order.
std::vector<MetricsRecord> run_sweep(const ScenarioConfig& cfg, const RunOptions& opt = {});

}  // namespace urllc
