#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <sstream>

#include "taumix/divisor.hpp"

using namespace taumix;

namespace {

// independent oracle: tau_1 = 1, tau_k(n) = sum_{d | n} tau_{k-1}(d)
u64 tau_oracle(int k, u64 n) {
    if (k == 1) return 1;
    u64 acc = 0;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        acc += tau_oracle(k - 1, d);
        if (d != n / d) acc += tau_oracle(k - 1, n / d);
    }
    return acc;
}

}  // namespace

TEST_CASE("point values match the divisor recursion") {
    REQUIRE(tau_k_point(2, 12) == 6);
    REQUIRE(tau_k_point(3, 12) == 18);
    REQUIRE(tau_k_point(2, 1) == 1);
    for (int k : {2, 3, 4, 5})
        for (u64 n = 1; n <= 200; ++n)
            REQUIRE(u64(tau_k_point(k, n)) == tau_oracle(k, n));
}

TEST_CASE("tau_k is multiplicative on coprime arguments") {
    for (auto [m, n] : {std::pair<u64, u64>{8, 9}, {25, 12}, {49, 45}, {121, 8}})
        for (int k : {2, 3, 4})
            REQUIRE(tau_k_point(k, m * n) == tau_k_point(k, m) * tau_k_point(k, n));
}

TEST_CASE("sieve window agrees with point evaluation") {
    auto t = sieve_tau_k(2, 1, 100);
    std::vector<u64> first{1, 2, 2, 3, 2, 4};
    for (u64 n = 1; n <= 6; ++n) REQUIRE(t.at(n) == first[n - 1]);
    REQUIRE(t.sum1 == 482);
    u128 s6 = 0;
    for (u64 n = 1; n <= 6; ++n) s6 += t.at(n);
    REQUIRE(s6 == 14);
    auto t3 = sieve_tau_k(3, 1, 10);
    REQUIRE(t3.sum1 == 53);

    auto w = sieve_tau_k(4, 500000, 500100);
    for (u64 n = w.lo; n <= w.hi; ++n) REQUIRE(u128(w.at(n)) == tau_k_point(4, n));
}

TEST_CASE("partial and square moments stream correctly") {
    REQUIRE(partial_sum_tau(2, 100) == 482);
    auto t = sieve_tau_k(3, 1, 3000);
    REQUIRE(partial_sum_tau(3, 3000) == t.sum1);
    REQUIRE(square_moment_tau(3, 3000) == t.sum2);
}

TEST_CASE("segment streaming visits every n once, in order") {
    std::vector<u64> seen;
    SieveConfig cfg;
    cfg.segment_size = 64;
    for_each_tau_segment(2, 10, 500, cfg, [&](u64 lo, const std::vector<u64>& vals) {
        REQUIRE(lo == (seen.empty() ? 10 : 10 + seen.size()));
        for (u64 v : vals) seen.push_back(v);
    });
    REQUIRE(seen.size() == 491);
    auto t = sieve_tau_k(2, 10, 500);
    for (u64 n = 10; n <= 500; ++n) REQUIRE(seen[std::size_t(n - 10)] == t.at(n));
}

TEST_CASE("binary dump round trip") {
    auto t = sieve_tau_k(3, 7, 700);
    std::stringstream buf;
    write_table(t, buf);
    auto u = read_table(buf);
    REQUIRE(u.k == t.k);
    REQUIRE(u.lo == t.lo);
    REQUIRE(u.hi == t.hi);
    REQUIRE(u.values == t.values);
    REQUIRE(u.sum1 == t.sum1);
    REQUIRE(u.sum2 == t.sum2);
}

TEST_CASE("budget limit throws before allocation") {
    SieveConfig cfg;
    cfg.budget_mb = 1;
    REQUIRE_THROWS_AS(sieve_tau_k(2, 1, 100000000, cfg), resource_limit_error);
}

TEST_CASE("bad windows are rejected") {
    REQUIRE_THROWS_AS(sieve_tau_k(2, 10, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(sieve_tau_k(0, 1, 10), std::invalid_argument);
    REQUIRE_THROWS_AS(tau_k_point(2, 0), std::invalid_argument);
}
