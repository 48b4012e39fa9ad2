#include "urllc/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <memory>
#include <mutex>
#include <thread>

#include "urllc/channel.hpp"
#include "urllc/errors.hpp"
#include "urllc/geometry.hpp"
#include "urllc/joint_metric.hpp"
#include "urllc/latency.hpp"
#include "urllc/queueing.hpp"
#include "urllc/rng.hpp"
#include "urllc/slicing.hpp"

namespace urllc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("URLLC_SIM_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(n);
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

MetricsRecord reduce(double rho_v, double rho_rsu, const std::vector<ReplicationSample>& reps) {
    if (reps.empty()) throw ParameterError("no replications to reduce");
    MetricsRecord r;
    r.rho_v = rho_v;
    r.rho_rsu = rho_rsu;
    r.replications = reps.size();
    auto collect = [&](double ReplicationSample::*field) {
        std::vector<double> xs;
        xs.reserve(reps.size());
        for (const auto& s : reps) xs.push_back(s.*field);
        return mean_ci(xs);
    };
    r.reliability = collect(&ReplicationSample::reliability);
    r.propagation_s = collect(&ReplicationSample::propagation_s);
    r.handling_s = collect(&ReplicationSample::handling_s);
    r.total_s = collect(&ReplicationSample::total_s);
    r.i_p = collect(&ReplicationSample::i_p);
    r.i_t = collect(&ReplicationSample::i_t);
    r.joint = collect(&ReplicationSample::joint);
    std::size_t unstable = 0, infeasible = 0;
    double granted = 0.0;
    for (const auto& s : reps) {
        unstable += s.unstable ? 1 : 0;
        infeasible += s.infeasible ? 1 : 0;
        granted += s.granted;
    }
    const double n = static_cast<double>(reps.size());
    r.unstable_fraction = static_cast<double>(unstable) / n;
    r.infeasible_fraction = static_cast<double>(infeasible) / n;
    r.granted_mean = granted / n;
    return r;
}

std::vector<ReplicationSample> link_replications(const ScenarioConfig& cfg, double rho_v,
                                                 double rho_rsu, std::size_t point_index,
                                                 const RunOptions& opt) {
    cfg.validate();
    const double coverage = 1.0 / rho_rsu;
    const double handling = mean_dwell_or_inf(
        std::make_shared<ArrivalLaw>(rho_v, coverage, cfg.lambda_s), cfg.rb_rsu * cfg.mu0);
    const LinkSampler sampler{cfg.hop_mode, cfg.n_max_hops};

    std::vector<ReplicationSample> reps(cfg.replications);
    parallel_for(reps.size(), opt.threads, [&](std::size_t i) {
        Rng rng = make_rng(stream_seed(cfg.seed, point_index, i));
        const Link link = sample_link(rho_v, coverage, sampler, rng);
        const LatencyBreakdown lb = total_latency(link, handling, cfg.radio, cfg.t_slot, cfg.t_proc);
        ReplicationSample& s = reps[i];
        s.reliability = link_reliability(link, cfg.radio);
        s.propagation_s = lb.propagation_s;
        s.handling_s = lb.handling_s;
        s.total_s = lb.total_s;
        s.i_p = reliability_utility(s.reliability, cfg.joint);
        s.i_t = latency_utility(s.total_s, cfg.joint);
        s.joint = joint_function(s.i_t, s.i_p, cfg.joint.omega);
        s.unstable = !std::isfinite(handling);
    });
    return reps;
}

namespace {

struct CellRsu {
    double coverage = 0.0;
    double reliability = 0.0;
    std::vector<double> propagation;  // per slice class
    std::function<double(int)> handling;
};

struct CellSample {
    std::vector<CellRsu> rsus;
};

int sample_rsu_count(const ScenarioConfig& cfg, double rho_rsu, Rng& rng) {
    const CellAreaModel model = cfg.cell_model();
    const double area = sample_cell_area(model, rng);
    const double mean_n = expected_nrsu(model, rho_rsu, cfg.nrsu_reading) * area / model.mean_area();
    std::poisson_distribution<int> count(mean_n);
    // A cell with no RSU carries no traffic; condition on at least one.
    for (int tries = 0; tries < 1000; ++tries) {
        int n = count(rng);
        if (n >= 1) return n;
    }
    return 1;
}

CellSample sample_cell(const ScenarioConfig& cfg, double rho_v, double rho_rsu, Rng& rng) {
    const int n = sample_rsu_count(cfg, rho_rsu, rng);
    const LinkSampler sampler{cfg.hop_mode, cfg.n_max_hops};
    // Coverage of one RSU: the 1-D Poisson-Voronoi cell, Gamma(2) with mean 1/rho_rsu.
    std::gamma_distribution<double> coverage(2.0, 0.5 / rho_rsu);
    CellSample cell;
    cell.rsus.resize(static_cast<std::size_t>(n));
    for (CellRsu& r : cell.rsus) {
        do {
            r.coverage = coverage(rng);
        } while (!(r.coverage > 0.0));
        r.propagation.assign(kSliceKinds, 0.0);
        for (int j = 0; j < cfg.links_per_rsu; ++j) {
            const Link link = sample_link(rho_v, r.coverage, sampler, rng);
            r.reliability += link_reliability(link, cfg.radio);
            for (std::size_t s = 0; s < kSliceKinds; ++s)
                r.propagation[s] +=
                    propagation_latency(link, cfg.radio, cfg.slice_t_slot[s], cfg.t_proc).seconds;
        }
        const double m = cfg.links_per_rsu;
        r.reliability /= m;
        for (double& p : r.propagation) p /= m;
        r.handling = queue_handling_curve(
            std::make_shared<ArrivalLaw>(rho_v, r.coverage, cfg.lambda_s), cfg.mu0);
    }
    return cell;
}

// Cell-level metrics; RSUs weighted by their share of the cell's traffic,
// which is proportional to coverage.
ReplicationSample score_cell(const ScenarioConfig& cfg, const CellSample& cell,
                             const std::vector<double>& handling) {
    double wsum = 0.0;
    for (const CellRsu& r : cell.rsus) wsum += r.coverage;
    double psum = 0.0;
    for (double p : cfg.slice_proportions) psum += p;

    ReplicationSample s;
    for (std::size_t k = 0; k < cell.rsus.size(); ++k) {
        const double w = cell.rsus[k].coverage / wsum;
        s.reliability += w * cell.rsus[k].reliability;
        s.handling_s += w * handling[k];
        if (!std::isfinite(handling[k])) s.unstable = true;
    }
    for (std::size_t c = 0; c < kSliceKinds; ++c) {
        double prop = 0.0;
        for (std::size_t k = 0; k < cell.rsus.size(); ++k)
            prop += cell.rsus[k].coverage / wsum * cell.rsus[k].propagation[c];
        const double share = cfg.slice_proportions[c] / psum;
        JointMetricParams jp = cfg.joint;
        jp.t_req = cfg.slice_t_req[c];
        s.propagation_s += share * prop;
        if (share > 0.0) s.i_t += share * latency_utility(prop + s.handling_s, jp);
    }
    s.total_s = s.propagation_s + s.handling_s;
    s.i_p = reliability_utility(s.reliability, cfg.joint);
    s.joint = joint_function(s.i_t, s.i_p, cfg.joint.omega);
    return s;
}

}  // namespace

std::vector<std::vector<ReplicationSample>> cell_replications(const ScenarioConfig& cfg,
                                                              double rho_v, double rho_rsu,
                                                              std::size_t point_index,
                                                              const RunOptions& opt) {
    cfg.validate();
    std::vector<std::vector<ReplicationSample>> out(1 + cfg.a_max.size(),
                                                    std::vector<ReplicationSample>(cfg.replications));
    std::vector<double> t_req(cfg.slice_t_req.begin(), cfg.slice_t_req.end());

    parallel_for(cfg.replications, opt.threads, [&](std::size_t i) {
        Rng rng = make_rng(stream_seed(cfg.seed, point_index, i));
        const CellSample cell = sample_cell(cfg, rho_v, rho_rsu, rng);
        const std::size_t n = cell.rsus.size();

        std::vector<double> base(n);
        std::vector<RsuDemand> demands(n);
        for (std::size_t k = 0; k < n; ++k) {
            base[k] = cell.rsus[k].handling(cfg.rb_rsu);
            demands[k].rb_total = cfg.rb_rsu;
            demands[k].propagation_s = cell.rsus[k].propagation;
            demands[k].handling = cell.rsus[k].handling;
        }
        out[0][i] = score_cell(cfg, cell, base);

        for (std::size_t j = 0; j < cfg.a_max.size(); ++j) {
            SlicingParams sp;
            sp.t_req = t_req;
            sp.a_max = cfg.a_max[j];
            sp.r2i_s = cfg.r2i_s;
            sp.lend_cap = cfg.lend_cap;
            const SlicingResult res = run_slicing_algorithm(demands, sp);
            ReplicationSample s = score_cell(cfg, cell, res.handling_after);
            s.infeasible = res.infeasible;
            s.granted = res.granted;
            out[1 + j][i] = s;
        }
    });
    return out;
}

std::vector<MetricsRecord> run_point(const ScenarioConfig& cfg, double rho_v, double rho_rsu,
                                     std::size_t point_index, const RunOptions& opt) {
    if (!cfg.slicing) return {reduce(rho_v, rho_rsu, link_replications(cfg, rho_v, rho_rsu, point_index, opt))};
    const auto series = cell_replications(cfg, rho_v, rho_rsu, point_index, opt);
    std::vector<MetricsRecord> out;
    out.push_back(reduce(rho_v, rho_rsu, series[0]));
    for (std::size_t j = 0; j < cfg.a_max.size(); ++j) {
        MetricsRecord r = reduce(rho_v, rho_rsu, series[1 + j]);
        r.slicing_enabled = true;
        r.a_max = cfg.a_max[j];
        out.push_back(r);
    }
    return out;
}

std::vector<MetricsRecord> run_sweep(const ScenarioConfig& cfg, const RunOptions& opt) {
    cfg.validate();
    std::vector<MetricsRecord> out;
    std::size_t point = 0;
    for (double rsu : cfg.rho_rsu)
        for (double v : cfg.rho_v) {
            auto recs = run_point(cfg, v, rsu, point++, opt);
            out.insert(out.end(), recs.begin(), recs.end());
        }
    return out;
}

}  // namespace urllc
