#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "urllc/channel.hpp"
#include "urllc/errors.hpp"

using namespace urllc;

TEST_CASE("path loss reference points") {
    CHECK(path_loss_db(1.0) == doctest::Approx(69.6).epsilon(1e-12));
    CHECK(path_loss_db(10.0) == doctest::Approx(90.5).epsilon(1e-12));
    CHECK(path_loss_db(100.0) == doctest::Approx(111.4).epsilon(1e-12));
    CHECK_THROWS_AS(path_loss_db(0.0), DomainError);
    CHECK_THROWS_AS(path_loss_db(-3.0), DomainError);
    for (double d = 1.0; d < 500.0; d *= 1.3) CHECK(path_loss_db(d * 1.01) > path_loss_db(d));
}

TEST_CASE("psi margin") {
    const RadioParams rp;
    // 30 - 5 - (-174 + 90) - 69.6 = 39.4 dB at 1 m.
    CHECK(psi(1.0, rp) == doctest::Approx(39.4).epsilon(1e-12));
    CHECK(psi(50.0, rp) == doctest::Approx(3.891526909377208).epsilon(1e-12));
    CHECK(psi(50.0, rp) == doctest::Approx(39.4 - 20.9 * std::log10(50.0)).epsilon(1e-12));
    CHECK(rp.noise_dbm() == doctest::Approx(-84.0));

    RadioParams flat;
    flat.p_tx_dbm = 0.0;
    flat.theta_db = 0.0;
    flat.n0_dbm_hz = 0.0;
    flat.bandwidth_hz = 1.0;
    for (double d : {1.0, 7.0, 130.0}) CHECK(psi(d, flat) == doctest::Approx(-path_loss_db(d)));
}

TEST_CASE("p_hop") {
    RadioParams rp;
    // d where psi = 0
    const double d0 = std::pow(10.0, 39.4 / 20.9);
    CHECK(p_hop(d0, rp) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(std::abs(p_hop(1e-6, rp) - 1.0) < 1e-12);
    CHECK(p_hop(1e6, rp) > 0.0);
    CHECK(p_hop(1e6, rp) < 1e-12);
    for (double d = 20.0; d < 400.0; d *= 1.2) CHECK(p_hop(d * 1.05, rp) < p_hop(d, rp));

    rp.sigma_db = 0.0;
    CHECK_THROWS_AS(p_hop(10.0, rp), ParameterError);
    rp.sigma_db = -1.0;
    CHECK_THROWS_AS(rp.validate(), ParameterError);
}

TEST_CASE("p_hop matches a shadowing Monte Carlo") {
    const RadioParams rp;
    std::mt19937_64 gen(2024);
    std::normal_distribution<double> xi(0.0, rp.sigma_db);
    const int n = 1000000;
    for (double d : {30.0, 50.0, 80.0}) {
        const double m = 39.4 - 20.9 * std::log10(d);
        int hit = 0;
        for (int i = 0; i < n; ++i) hit += xi(gen) <= m;
        const double phat = static_cast<double>(hit) / n;
        const double p = p_hop(d, rp);
        const double se = std::sqrt(p * (1 - p) / n);
        CHECK(std::abs(phat - p) <= 3.0 * se + 1e-12);
    }
}

TEST_CASE("link reliability") {
    const RadioParams rp;
    CHECK(link_reliability(Link{{40.0}}, rp) == doctest::Approx(p_hop(40.0, rp)));

    // Two hops with p = 0.9 and 0.8 multiply to 0.72.
    auto dist_for = [&](double p) {
        double lo = 1e-3, hi = 1e4;
        for (int i = 0; i < 200; ++i) {
            const double mid = std::sqrt(lo * hi);
            (p_hop(mid, rp) > p ? lo : hi) = mid;
        }
        return std::sqrt(lo * hi);
    };
    CHECK(link_reliability(Link{{dist_for(0.9), dist_for(0.8)}}, rp) == doctest::Approx(0.72).epsilon(1e-9));

    Link a{{12.0, 55.0, 31.0, 70.0}};
    const double base = link_reliability(a, rp);
    std::sort(a.hops.begin(), a.hops.end());
    do {
        CHECK(link_reliability(a, rp) == doctest::Approx(base).epsilon(1e-14));
    } while (std::next_permutation(a.hops.begin(), a.hops.end()));

    Link b{{20.0, 30.0}};
    const double r2 = link_reliability(b, rp);
    b.hops[1] = 45.0;
    CHECK(link_reliability(b, rp) <= r2);
    b.hops.push_back(5.0);
    CHECK(link_reliability(b, rp) <= link_reliability(Link{{20.0, 45.0}}, rp));

    CHECK_THROWS_AS(link_reliability(Link{}, rp), DomainError);
    CHECK_THROWS_AS(link_reliability(Link{{10.0, 0.0}}, rp), DomainError);
}

TEST_CASE("hop mode parsing") {
    CHECK(parse_hop_mode("ppp-relay") == HopMode::PppRelay);
    CHECK(parse_hop_mode("uniform-hops") == HopMode::UniformHops);
    CHECK(to_string(HopMode::UniformHops) == "uniform-hops");
    CHECK_THROWS_AS(parse_hop_mode("random"), ParameterError);
}

TEST_CASE("sample_link") {
    LinkSampler ppp;
    SUBCASE("sparse vehicles give one direct hop") {
        const double L = 100.0;
        double sum = 0.0;
        int one = 0;
        const int n = 20000;
        Rng rng = make_rng(5);
        for (int i = 0; i < n; ++i) {
            const Link l = sample_link(1e-9, L, ppp, rng);
            one += l.n_hops() == 1;
            sum += l.hops.front();
        }
        CHECK(one == n);
        // U(0, L): mean L/2, se L/sqrt(12 n)
        CHECK(std::abs(sum / n - L / 2) < 3 * L / std::sqrt(12.0 * n));
    }
    SUBCASE("relay hop length approaches 1/rho") {
        // Interior spacings of a PPP are Exp(rho); with a long segment the
        // truncated first/last hops barely matter.
        const double rho = 0.2;
        double sum = 0.0;
        std::size_t hops = 0;
        Rng rng = make_rng(6);
        for (int i = 0; i < 2000; ++i) {
            const Link l = sample_link(rho, 2000.0, ppp, rng);
            for (double h : l.hops) sum += h;
            hops += l.n_hops();
        }
        CHECK(sum / static_cast<double>(hops) == doctest::Approx(1.0 / rho).epsilon(0.03));
    }
    SUBCASE("uniform hops") {
        LinkSampler u{HopMode::UniformHops, 1};
        Rng rng = make_rng(7);
        for (int i = 0; i < 500; ++i) {
            const Link l = sample_link(0.3, 80.0, u, rng);
            CHECK(l.n_hops() == 1);
            CHECK(l.hops[0] > 0.0);
            CHECK(l.hops[0] < 80.0);
        }
        u.n_max = 4;
        std::array<int, 5> counts{};
        for (int i = 0; i < 8000; ++i) {
            const auto n = sample_link(0.3, 80.0, u, rng).n_hops();
            REQUIRE(n >= 1);
            REQUIRE(n <= 4);
            ++counts[n];
        }
        for (int k = 1; k <= 4; ++k) CHECK(std::abs(counts[k] - 2000) < 3 * std::sqrt(8000 * 0.25 * 0.75));
    }
    SUBCASE("deterministic per seed") {
        const Link a = sample_link(0.3, 100.0, ppp, std::uint64_t{99});
        const Link b = sample_link(0.3, 100.0, ppp, std::uint64_t{99});
        CHECK(a.hops == b.hops);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(sample_link(0.0, 100.0, ppp, std::uint64_t{1}), ParameterError);
        CHECK_THROWS_AS(sample_link(0.1, -1.0, ppp, std::uint64_t{1}), ParameterError);
        LinkSampler bad{HopMode::UniformHops, 0};
        CHECK_THROWS_AS(sample_link(0.1, 10.0, bad, std::uint64_t{1}), ParameterError);
    }
}

TEST_CASE("mean reliability rises with vehicle density") {
    const RadioParams rp;
    LinkSampler s;
    double prev = 0.0;
    for (double rho : {0.05, 0.1, 0.2, 0.4}) {
        Rng rng = make_rng(77);
        double sum = 0.0;
        const int n = 10000;
        for (int i = 0; i < n; ++i) sum += link_reliability(sample_link(rho, 100.0, s, rng), rp);
        const double mean = sum / n;
        CHECK(mean >= prev);
        prev = mean;
    }
}
