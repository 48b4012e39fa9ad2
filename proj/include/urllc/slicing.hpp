#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "urllc/latency.hpp"
#include "urllc/queueing.hpp"

namespace urllc {

enum class SliceKind { SRSS = 0, EDSS = 1, EASS = 2 };
inline constexpr std::size_t kSliceKinds = 3;

std::string to_string(SliceKind k);

struct ServiceSliceClass {
    SliceKind kind = SliceKind::SRSS;
    double lambda_a = 0.0;  // messages/s per vehicle in this class
    double mu_s = 0.0;      // per-block handling rate
    double t_req = 10e-3;
    double t_slot = 50e-6;
};

// a(k, g), k != g: fraction of RSU g's blocks scheduled for RSU k.
// a(k, k): fraction of RSU k's blocks serving its own slices.
class SharingMatrix {
public:
    SharingMatrix() = default;
    SharingMatrix(std::size_t n, double a_max);

    std::size_t size() const { return n_; }
    double a_max() const { return a_max_; }
    double operator()(std::size_t k, std::size_t g) const { return a_[k * n_ + g]; }
    double& operator()(std::size_t k, std::size_t g) { return a_[k * n_ + g]; }
    double row_sum(std::size_t k) const;
    double column_sum(std::size_t g) const;

    // Entries in [0, 1], column sums at most 1.
    void validate(double tol = 1e-12) const;

private:
    std::size_t n_ = 0;
    double a_max_ = 0.0;
    std::vector<double> a_;
};

// Handling latency of RSU k mixing local and InP-scheduled blocks in
// proportion to row k of the sharing matrix.
double composite_handling_latency(std::size_t k, const SharingMatrix& a, double ts_local,
                                  double ts_inp);

struct TaggedArrival {
    double time = 0.0;
    SliceKind kind = SliceKind::SRSS;
};

// Poisson(total_rate) arrivals, each tagged by an independent draw from the
// class proportions.
std::vector<TaggedArrival> slice_mix_sampler(double total_rate,
                                             const std::array<double, kSliceKinds>& proportions,
                                             std::size_t n, std::uint64_t seed);

struct RsuState {
    int rb_total = 0;
    int rb_local_used = 0;  // blocks the RSU needs to meet its requirement
    int rb_rem = 0;         // blocks offered to the pool
    int rb_req = 0;         // blocks requested from the pool
};

// What the reallocation needs to know about one RSU.
struct RsuDemand {
    int rb_total = 10;
    std::vector<double> propagation_s;    // mean propagation per slice class
    std::function<double(int)> handling;  // mean sojourn with b blocks, +inf if unstable
};

enum class LendCap {
    SurplusHeadroom,  // donor keeps floor((1 - a_max) * surplus) spare blocks
    Retention         // donor keeps at least ceil((1 - a_max) * RB) blocks
};

LendCap parse_lend_cap(const std::string& s);
std::string to_string(LendCap c);

struct SlicingParams {
    std::vector<double> t_req;  // per slice class, seconds
    double a_max = 0.8;
    double r2i_s = 0.5e-3;
    LendCap lend_cap = LendCap::SurplusHeadroom;
    int search_limit = 0;  // largest block count examined; 0 = all blocks in the cell
};

struct SlicingResult {
    SharingMatrix a;
    std::vector<RsuState> states;
    std::vector<int> lent;
    std::vector<int> borrowed;
    std::vector<double> handling_before;
    std::vector<double> handling_after;
    // latency[k][s]: RSU k, slice class s, after reallocation.
    std::vector<std::vector<LatencyBreakdown>> latency;
    std::vector<double> violation;  // max over classes of T - T_req before reallocation
    int pool = 0;
    int granted = 0;
    bool infeasible = false;
};

// Largest violation first, ties by lower index, partial grants allowed.
std::vector<int> grant_policy(int pool, const std::vector<int>& deficits,
                              const std::vector<double>& violations);
std::vector<int> grant_policy(int pool, const std::vector<int>& deficits);

// Blocks a donor with the given surplus may lend.
int lendable_blocks(int rb_total, int rb_needed, double a_max, LendCap cap);

SlicingResult run_slicing_algorithm(const std::vector<RsuDemand>& rsus, const SlicingParams& params);

// Memoised mean sojourn of an RSU queue as a function of its block count.
std::function<double(int)> queue_handling_curve(std::shared_ptr<const InterarrivalLaw> law,
                                                double mu0);

}  // namespace urllc
