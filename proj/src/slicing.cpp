#include "urllc/slicing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "urllc/errors.hpp"
#include "urllc/rng.hpp"

namespace urllc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::string to_string(SliceKind k) {
    switch (k) {
        case SliceKind::SRSS: return "SRSS";
        case SliceKind::EDSS: return "EDSS";
        case SliceKind::EASS: return "EASS";
    }
    return "?";
}

LendCap parse_lend_cap(const std::string& s) {
    if (s == "surplus-headroom") return LendCap::SurplusHeadroom;
    if (s == "retention") return LendCap::Retention;
    throw ParameterError("unknown lend cap '" + s + "'");
}

std::string to_string(LendCap c) {
    return c == LendCap::SurplusHeadroom ? "surplus-headroom" : "retention";
}

// ------------------------------------------------------------ sharing matrix

SharingMatrix::SharingMatrix(std::size_t n, double a_max) : n_(n), a_max_(a_max), a_(n * n, 0.0) {
    if (!(a_max >= 0.0 && a_max < 1.0)) throw ParameterError("a_max must lie in [0, 1)");
    for (std::size_t k = 0; k < n; ++k) a_[k * n + k] = 1.0;
}

double SharingMatrix::row_sum(std::size_t k) const {
    double s = 0.0;
    for (std::size_t g = 0; g < n_; ++g) s += (*this)(k, g);
    return s;
}

double SharingMatrix::column_sum(std::size_t g) const {
    double s = 0.0;
    for (std::size_t k = 0; k < n_; ++k) s += (*this)(k, g);
    return s;
}

void SharingMatrix::validate(double tol) const {
    for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t g = 0; g < n_; ++g) {
            double v = (*this)(k, g);
            if (!(v >= -tol && v <= 1.0 + tol))
                throw AllocationError("sharing-matrix entry out of [0, 1]");
        }
    for (std::size_t g = 0; g < n_; ++g)
        if (column_sum(g) > 1.0 + tol) throw AllocationError("RSU blocks over-allocated");
}

double composite_handling_latency(std::size_t k, const SharingMatrix& a, double ts_local,
                                  double ts_inp) {
    if (k >= a.size()) throw AllocationError("RSU index out of range");
    const double total = a.row_sum(k);
    if (!(total > 0.0)) throw AllocationError("sharing-matrix row has zero sum");
    const double local = a(k, k);
    const double remote = total - local;
    // Avoid 0 * inf when one side carries no weight.
    double out = 0.0;
    if (local > 0.0) out += local / total * ts_local;
    if (remote > 0.0) out += remote / total * ts_inp;
    return out;
}

// -------------------------------------------------------------- slice mix

std::vector<TaggedArrival> slice_mix_sampler(double total_rate,
                                             const std::array<double, kSliceKinds>& proportions,
                                             std::size_t n, std::uint64_t seed) {
    if (!(total_rate > 0.0)) throw ParameterError("total_rate must be > 0");
    double sum = 0.0;
    for (double p : proportions) {
        if (!(p >= 0.0)) throw ParameterError("slice proportions must be >= 0");
        sum += p;
    }
    if (!(sum > 0.0)) throw ParameterError("slice proportions must not all be zero");
    Rng rng = make_rng(seed);
    std::exponential_distribution<double> gap(total_rate);
    std::discrete_distribution<int> tag(proportions.begin(), proportions.end());
    std::vector<TaggedArrival> out(n);
    double t = 0.0;
    for (auto& a : out) {
        t += gap(rng);
        a.time = t;
        a.kind = static_cast<SliceKind>(tag(rng));
    }
    return out;
}

// ----------------------------------------------------------------- grants

std::vector<int> grant_policy(int pool, const std::vector<int>& deficits,
                              const std::vector<double>& violations) {
    if (pool < 0) throw ParameterError("pool must be >= 0");
    if (violations.size() != deficits.size()) throw ParameterError("one violation per RSU");
    std::vector<int> grants(deficits.size(), 0);
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < deficits.size(); ++k)
        if (deficits[k] > 0) order.push_back(k);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return violations[x] > violations[y];
    });
    for (std::size_t k : order) {
        if (pool == 0) break;
        grants[k] = std::min(pool, deficits[k]);
        pool -= grants[k];
    }
    return grants;
}

std::vector<int> grant_policy(int pool, const std::vector<int>& deficits) {
    return grant_policy(pool, deficits, std::vector<double>(deficits.size(), 0.0));
}

int lendable_blocks(int rb_total, int rb_needed, double a_max, LendCap cap) {
    const int surplus = rb_total - rb_needed;
    if (surplus <= 0) return 0;
    if (cap == LendCap::SurplusHeadroom) {
        const int headroom = static_cast<int>(std::floor((1.0 - a_max) * surplus + 1e-9));
        return surplus - headroom;
    }
    const int keep = static_cast<int>(std::ceil((1.0 - a_max) * rb_total - 1e-9));
    return std::max(0, std::min(surplus, rb_total - keep));
}

// ---------------------------------------------------------- reallocation

SlicingResult run_slicing_algorithm(const std::vector<RsuDemand>& rsus, const SlicingParams& params) {
    const std::size_t n = rsus.size();
    const std::size_t n_classes = params.t_req.size();
    if (n_classes == 0) throw ParameterError("at least one slice class is required");
    if (!(params.r2i_s >= 0.0)) throw ParameterError("r2i_s must be >= 0");

    int cell_blocks = 0;
    for (const RsuDemand& r : rsus) {
        if (r.rb_total < 1) throw ParameterError("every RSU needs at least one block");
        if (r.propagation_s.size() != n_classes) throw ParameterError("one propagation value per class");
        if (!r.handling) throw ParameterError("RSU handling curve missing");
        cell_blocks += r.rb_total;
    }
    const int limit = params.search_limit > 0 ? params.search_limit : cell_blocks;

    SlicingResult res;
    res.a = SharingMatrix(n, params.a_max);
    res.states.resize(n);
    res.lent.assign(n, 0);
    res.borrowed.assign(n, 0);
    res.handling_before.resize(n);
    res.handling_after.resize(n);
    res.violation.resize(n);

    // Latency of RSU k with b blocks, of which `extra` come from other RSUs.
    // Borrowed blocks enter row k of A as fractions of the lenders' block
    // counts, which are not known yet; the mean over the other RSUs stands in.
    auto meets = [&](std::size_t k, int b, int extra) {
        double h = rsus[k].handling(b);
        if (!std::isfinite(h)) return false;
        if (extra > 0) {
            const double others =
                n > 1 ? static_cast<double>(cell_blocks - rsus[k].rb_total) / static_cast<double>(n - 1)
                      : rsus[k].rb_total;
            const double remote = extra / others;
            h += remote / (1.0 + remote) * params.r2i_s;
        }
        for (std::size_t s = 0; s < n_classes; ++s)
            if (rsus[k].propagation_s[s] + h > params.t_req[s]) return false;
        return true;
    };

    // Phase 1: surplus and deficit per RSU.
    std::vector<int> deficits(n, 0), avail(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        const int rb = rsus[k].rb_total;
        RsuState& st = res.states[k];
        st.rb_total = rb;
        const double h0 = rsus[k].handling(rb);
        res.handling_before[k] = h0;
        double viol = -kInf;
        for (std::size_t s = 0; s < n_classes; ++s)
            viol = std::max(viol, rsus[k].propagation_s[s] + h0 - params.t_req[s]);
        res.violation[k] = std::isfinite(h0) ? viol : kInf;

        if (meets(k, rb, 0)) {
            int b = rb;
            while (b > 1 && meets(k, b - 1, 0)) --b;
            st.rb_local_used = b;
            st.rb_rem = lendable_blocks(rb, b, params.a_max, params.lend_cap);
            avail[k] = st.rb_rem;
            res.pool += st.rb_rem;
        } else {
            double slack = kInf;
            for (std::size_t s = 0; s < n_classes; ++s)
                slack = std::min(slack, params.t_req[s] - rsus[k].propagation_s[s]);
            int b = slack > 0.0 ? rb + 1 : limit + 1;
            while (b <= limit && !meets(k, b, b - rb)) ++b;
            if (b <= limit) {
                st.rb_req = b - rb;
            } else if (!std::isfinite(h0)) {
                // Requirement out of reach: ask for enough blocks to make the
                // queue stable, with one block of margin.
                int stab = rb + 1;
                while (stab <= limit && !std::isfinite(rsus[k].handling(stab))) ++stab;
                st.rb_req = std::min(stab, limit) + 1 - rb;
            }
            st.rb_local_used = rb + st.rb_req;
            deficits[k] = st.rb_req;
        }
    }
    const int demand = std::accumulate(deficits.begin(), deficits.end(), 0);
    res.infeasible = demand > res.pool;

    // Phase 2: schedule pool blocks, one at a time from the donor with the
    // most lendable blocks left.
    const std::vector<int> grants = grant_policy(res.pool, deficits, res.violation);
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < n; ++k)
        if (grants[k] > 0) order.push_back(k);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return res.violation[x] > res.violation[y];
    });
    for (std::size_t k : order) {
        for (int i = 0; i < grants[k]; ++i) {
            std::size_t g = n;
            for (std::size_t d = 0; d < n; ++d)
                if (avail[d] > 0 && (g == n || avail[d] > avail[g])) g = d;
            if (g == n) throw AllocationError("pool exhausted while granting");
            --avail[g];
            ++res.lent[g];
            ++res.borrowed[k];
            const double unit = 1.0 / rsus[g].rb_total;
            res.a(k, g) += unit;
            res.a(g, g) -= unit;
            ++res.granted;
        }
    }
    res.a.validate(1e-9);

    // Phase 3: handling latency from the final matrix.
    res.latency.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const int blocks = rsus[k].rb_total - res.lent[k] + res.borrowed[k];
        const double local = rsus[k].handling(blocks);
        const double ts = composite_handling_latency(k, res.a, local, local + params.r2i_s);
        res.handling_after[k] = ts;
        res.latency[k].resize(n_classes);
        for (std::size_t s = 0; s < n_classes; ++s) {
            LatencyBreakdown& lb = res.latency[k][s];
            lb.propagation_s = rsus[k].propagation_s[s];
            lb.handling_s = ts;
            lb.total_s = lb.propagation_s + ts;
        }
    }
    return res;
}

std::function<double(int)> queue_handling_curve(std::shared_ptr<const InterarrivalLaw> law,
                                                double mu0) {
    if (!law) throw ParameterError("handling curve needs an arrival law");
    if (!(mu0 > 0.0)) throw ParameterError("mu0 must be > 0");
    auto cache = std::make_shared<std::vector<double>>();
    return [law = std::move(law), mu0, cache](int b) {
        if (b < 1) return kInf;
        auto idx = static_cast<std::size_t>(b);
        if (cache->size() <= idx) cache->resize(idx + 1, -1.0);
        double& v = (*cache)[idx];
        if (v < 0.0) v = mean_dwell_or_inf(law, b * mu0);
        return v;
    };
}

}  // namespace urllc
