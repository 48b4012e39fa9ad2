#pragma once

#include <cstdint>
#include <random>

namespace urllc {

using Rng = std::mt19937_64;

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based stream key: a pure function of (master, point, replication),
// so replications can run in any order on any thread.
constexpr std::uint64_t stream_seed(std::uint64_t master, std::uint64_t point,
                                    std::uint64_t replication) {
    return mix64(mix64(mix64(master) ^ point) ^ (replication * 0xd1342543de82ef95ULL));
}

inline Rng make_rng(std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    return Rng(seq);
}

// Uniform on the open interval (0, 1).
inline double uniform_open(Rng& rng) {
    double u;
    do {
        u = std::generate_canonical<double, 53>(rng);
    } while (u <= 0.0);
    return u;
}

}  // namespace urllc
