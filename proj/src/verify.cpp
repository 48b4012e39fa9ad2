#include "urllc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>

#include <json.hpp>

#include "urllc/channel.hpp"
#include "urllc/errors.hpp"
#include "urllc/numeric.hpp"
#include "urllc/queueing.hpp"
#include "urllc/rng.hpp"
#include "urllc/slicing.hpp"

namespace urllc {

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["passed"] = passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        // JSON has no infinity; non-finite values are written as strings.
        if (std::isfinite(c.value)) e["value"] = c.value;
        else e["value"] = std::to_string(c.value);
        e["tolerance"] = c.tolerance;
        if (!c.detail.empty()) e["detail"] = c.detail;
        j["checks"].push_back(e);
    }
    return j.dump(2) + "\n";
}

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> s = {"queue", "delta", "channel", "slicing"};
    return s;
}

double mu_for_delta(const InterarrivalLaw& law, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("delta must lie in (0, 1)");
    // lst is decreasing in s; bracket the root on a log scale.
    double lo = 0.0, hi = 1.0 / law.scale();
    while (law.lst(hi) > delta) {
        lo = hi;
        hi *= 2.0;
    }
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (law.lst(mid) > delta ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi) / (1.0 - delta);
}

std::size_t des_spacing(double delta) {
    const double gap = 1.0 - std::sqrt(delta);
    return static_cast<std::size_t>(std::ceil(2.0 / (gap * gap)));
}

namespace {

double opt(const std::map<std::string, double>& o, const std::string& k, double def) {
    auto it = o.find(k);
    return it == o.end() ? def : it->second;
}

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void queue_suite(const ScenarioConfig& cfg, const std::map<std::string, double>& o, VerifyReport& rep) {
    const double mean_tol = opt(o, "mean_rel", 0.02);
    const double ks_tol = opt(o, "ks", 0.01);
    const auto jobs = static_cast<std::size_t>(opt(o, "jobs", 1e5));
    auto law = std::make_shared<ArrivalLaw>(0.2, 100.0, cfg.lambda_s);
    std::uint64_t seed = cfg.seed;
    for (double target : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double mu = mu_for_delta(*law, target);
        const QueueModel qm = make_queue(law, mu, 1);
        DesOptions d;
        d.spacing = des_spacing(target);
        d.warmup = 20 * d.spacing;
        auto sample = des_gim1(*law, mu, 1, jobs, mix64(++seed), d);
        double mean = 0.0;
        for (double x : sample) mean += x;
        mean /= static_cast<double>(sample.size());
        const double model = mean_dwell(qm);
        const double rel = std::abs(mean - model) / model;
        rep.checks.push_back({"delta=" + num(target) + " mean sojourn", rel <= mean_tol, rel, mean_tol,
                              "des " + num(mean) + " model " + num(model)});
        const double ks = ks_distance(sample, [&](double t) { return dwell_time_cdf(t, qm); });
        rep.checks.push_back({"delta=" + num(target) + " KS", ks <= ks_tol, ks, ks_tol, ""});
    }
    // M/M/2 against Erlang C.
    auto ex = std::make_shared<ExponentialLaw>(1.0);
    const QueueModel mm2 = make_queue(ex, 1.5, 2);
    const double pw = waiting_probability(mm2);
    rep.checks.push_back({"M/M/2 Erlang C", std::abs(pw - 1.0 / 6.0) < 1e-9, std::abs(pw - 1.0 / 6.0), 1e-9,
                          ""});
}

void delta_suite(const ScenarioConfig& cfg, const std::map<std::string, double>& o, VerifyReport& rep) {
    const double tol = opt(o, "residual", 1e-9);
    double worst = 0.0;
    std::string where;
    for (int i = 0; i < 10; ++i) {
        const double rho = 0.05 * (i + 1);
        const ArrivalLaw law(rho, 100.0, cfg.lambda_s);
        for (int j = 0; j < 10; ++j) {
            const double load = 0.05 + 0.1 * j;
            const double mu = 1.0 / (law.mean() * load);
            const double delta = solve_delta(law, mu, 1);
            const double r = std::abs(law.lst_by_quadrature(mu * (1.0 - delta)) - delta);
            if (!(r <= worst)) {
                worst = r;
                where = "rho=" + num(rho) + " load=" + num(load);
            }
        }
    }
    rep.checks.push_back({"explicit-integral residual, 100-point grid", worst < tol, worst, tol, where});
    double mm1 = 0.0;
    for (double lambda : {0.5, 1.0, 3.0})
        for (double load : {0.1, 0.5, 0.9, 0.99}) {
            const ExponentialLaw law(lambda);
            mm1 = std::max(mm1, std::abs(solve_delta(law, lambda / load, 1) - load));
        }
    rep.checks.push_back({"M/M/1 delta = lambda/mu", mm1 < tol, mm1, tol, ""});
}

void channel_suite(const ScenarioConfig& cfg, const std::map<std::string, double>& o, VerifyReport& rep) {
    const double sigmas = opt(o, "sigmas", 3.0);
    const auto draws = static_cast<std::size_t>(opt(o, "draws", 1e6));
    Rng rng = make_rng(mix64(cfg.seed ^ 0xc4a7));
    std::normal_distribution<double> shadow(0.0, cfg.radio.sigma_db);
    for (double d : {2.0, 10.0, 25.0, 50.0, 75.0, 100.0, 125.0, 150.0, 175.0, 200.0}) {
        const double margin = psi(d, cfg.radio);
        std::size_t ok = 0;
        for (std::size_t i = 0; i < draws; ++i)
            if (shadow(rng) <= margin) ++ok;
        const double phat = static_cast<double>(ok) / static_cast<double>(draws);
        const double p = p_hop(d, cfg.radio);
        const double se = std::max(std::sqrt(p * (1.0 - p) / static_cast<double>(draws)),
                                   1.0 / static_cast<double>(draws));
        const double z = std::abs(phat - p) / se;
        rep.checks.push_back({"d=" + num(d) + " p_hop vs shadowing MC", z <= sigmas, z, sigmas,
                              "mc " + num(phat) + " model " + num(p)});
    }
}

// M/M/1-shaped handling curve with block-proportional service.
std::function<double(int)> mm1_curve(double lambda, double mu0) {
    return [lambda, mu0](int b) {
        const double r = b * mu0 - lambda;
        return r > 0.0 ? 1.0 / r : std::numeric_limits<double>::infinity();
    };
}

void slicing_suite(const ScenarioConfig& cfg, const std::map<std::string, double>& o, VerifyReport& rep) {
    const auto instances = static_cast<int>(opt(o, "instances", 1000));
    Rng rng = make_rng(mix64(cfg.seed ^ 0x511c));
    std::uniform_int_distribution<int> n_rsu(2, 8), blocks(1, 12);
    std::uniform_real_distribution<double> load(0.1, 1.4), prop(0.0, 9e-3), amax(0.0, 0.95);
    const double mu0 = 200.0;
    int conservation = 0, overlap = 0, improvement = 0, matrix = 0, flag = 0, ok_runs = 0;
    for (int it = 0; it < instances; ++it) {
        const int n = n_rsu(rng);
        std::vector<RsuDemand> rs(static_cast<std::size_t>(n));
        int total = 0;
        for (auto& r : rs) {
            r.rb_total = blocks(rng);
            total += r.rb_total;
            r.propagation_s = {prop(rng), prop(rng), prop(rng)};
            r.handling = mm1_curve(load(rng) * r.rb_total * mu0, mu0);
        }
        SlicingParams sp;
        sp.t_req = {10e-3, 10e-3, 10e-3};
        sp.a_max = amax(rng);
        sp.r2i_s = cfg.r2i_s;
        sp.lend_cap = cfg.lend_cap;
        SlicingResult res;
        try {
            res = run_slicing_algorithm(rs, sp);
        } catch (const AllocationError&) {
            ++matrix;
            continue;
        }
        ++ok_runs;
        int after = 0, lent = 0, borrowed = 0, demand = 0;
        for (int k = 0; k < n; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            after += rs[kk].rb_total - res.lent[kk] + res.borrowed[kk];
            lent += res.lent[kk];
            borrowed += res.borrowed[kk];
            demand += res.states[kk].rb_req;
            if (res.states[kk].rb_rem > 0 && res.states[kk].rb_req > 0) ++overlap;
            if (res.borrowed[kk] > 0 && res.borrowed[kk] == res.states[kk].rb_req &&
                !(res.handling_after[kk] <= res.handling_before[kk]))
                ++improvement;
        }
        if (after != total || lent != borrowed || lent != res.granted) ++conservation;
        if (res.infeasible != (demand > res.pool)) ++flag;
    }
    auto add = [&](const std::string& name, int failures) {
        rep.checks.push_back({name, failures == 0, static_cast<double>(failures), 0.0,
                              std::to_string(ok_runs) + " instances"});
    };
    add("block conservation", conservation);
    add("no donor-requester overlap", overlap);
    add("served RSUs improve", improvement);
    add("sharing matrix valid", matrix);
    add("infeasibility flag", flag);
}

}  // namespace

VerifyReport run_verify(const std::string& suite, const ScenarioConfig& cfg,
                        const std::map<std::string, double>& overrides) {
    VerifyReport rep;
    rep.suite = suite;
    if (suite == "queue") queue_suite(cfg, overrides, rep);
    else if (suite == "delta") delta_suite(cfg, overrides, rep);
    else if (suite == "channel") channel_suite(cfg, overrides, rep);
    else if (suite == "slicing") slicing_suite(cfg, overrides, rep);
    else throw ParameterError("unknown verify suite '" + suite + "'");
    return rep;
}

}  // namespace urllc
