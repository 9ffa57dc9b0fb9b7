#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "taumix/divisor.hpp"
#include "taumix/expsums.hpp"
#include "taumix/oscillatory.hpp"

using namespace taumix;
using Catch::Matchers::WithinAbs;

TEST_CASE("Gauss sum Parseval: sum of |G|^2 counts power coincidences") {
    for (int r : {2, 3})
        for (i64 q = 2; q <= 30; ++q) {
            auto g = gauss_sum_all_a(r, q);
            double lhs = 0.0;
            for (i64 a = 1; a <= q; ++a) lhs += std::norm(g[std::size_t(a)]);
            std::vector<u64> h(std::size_t(q), 0);
            for (u64 x = 0; x < u64(q); ++x) ++h[std::size_t(detail::pow_mod(x, r, u64(q)))];
            double rhs = 0.0;
            for (u64 c : h) rhs += double(c) * double(c);
            rhs *= double(q);
            CAPTURE(r, q);
            REQUIRE_THAT(lhs, WithinAbs(rhs, 1e-6 * rhs));
        }
}

TEST_CASE("rational-point divisor sum equals its residue-binned transform") {
    int k = 3, ell = 1;
    double X = 40.0;
    i64 q = 7, a = 3;
    auto table = sieve_tau_k(k, 1, 80);
    std::vector<double> bins(std::size_t(q), 0.0);
    for (u64 n = 1; n <= 80; ++n) bins[std::size_t(n % u64(q))] += double(table.at(n));
    std::complex<double> rhs = 0.0;
    for (i64 c = 0; c < q; ++c)
        rhs += bins[std::size_t(c)] * std::polar(1.0, -two_pi * double(a) * double(c) / double(q));
    auto exact = f_sum_rat(k, ell, a, q, X, table);
    REQUIRE_THAT(std::abs(exact - rhs), WithinAbs(0.0, 1e-9 * std::abs(rhs)));
    auto drift = f_sum(k, ell, double(a) / double(q), X, table);
    REQUIRE_THAT(std::abs(exact - drift), WithinAbs(0.0, 1e-7 * std::abs(exact)));
}

TEST_CASE("divisor sum at frequency zero matches the partial sum") {
    auto table = sieve_tau_k(4, 1, 1500);
    auto v = f_sum(4, 2, 0.0, 500.0, table);
    REQUIRE_THAT(v.real(), WithinAbs(double(u64(partial_sum_tau(4, 1500))), 1e-9));
    REQUIRE_THAT(v.imag(), WithinAbs(0.0, 1e-12));
}

TEST_CASE("Farey dissection structure") {
    auto part = dissect(4096.0, 0.25);
    u64 farey = 0;
    for (i64 q = 1; q <= 8; ++q)
        for (i64 a = 1; a <= q; ++a)
            if (std::gcd(a, q) == 1) ++farey;
    REQUIRE(part.arcs.size() == farey);
    REQUIRE(part.disjoint);
    double prev = -1.0;
    for (const auto& arc : part.arcs) {
        REQUIRE(std::gcd(arc.a, arc.q) == 1);
        REQUIRE(arc.q <= 8);
        REQUIRE(arc.center > prev);
        REQUIRE_THAT(arc.halfwidth * double(arc.q) * part.Q, WithinAbs(1.0, 1e-12));
        prev = arc.center;
    }
    REQUIRE_THAT(part.major_measure + part.minor_measure, WithinAbs(1.0, 1e-15));
}

TEST_CASE("power-phase Parseval below the aliasing threshold") {
    int r = 2;
    u64 N = 5, M = 2 * N * N + 1;
    double acc = 0.0;
    for (u64 t = 0; t < M; ++t)
        acc += std::norm(t_sum(r, double(t) / double(M), double(N * N)).value);
    REQUIRE_THAT(acc / double(M), WithinAbs(double(N), 1e-8));
}

TEST_CASE("log-moment profile is the oscillatory integral over j!") {
    double err = 0.0;
    auto lhs = i_profile(3, 2, 0.7, 13.0, &err);
    auto rhs = osc_log_integral(3, 1.0, 39.0, 0.7);
    REQUIRE_THAT(std::abs(lhs * 6.0 - rhs), WithinAbs(0.0, 1e-12 * std::abs(rhs)));
    REQUIRE(err >= 0.0);
}

TEST_CASE("table serialization is lossless on arbitrary windows") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 3; ++trial) {
        int k = (trial % 2 == 0) ? 2 : 5;
        u64 lo = 1 + rng() % 1000000;
        u64 hi = lo + rng() % 300;
        auto table = sieve_tau_k(k, lo, hi);
        std::stringstream buf;
        write_table(table, buf);
        auto back = read_table(buf);
        REQUIRE(back.k == table.k);
        REQUIRE(back.lo == table.lo);
        REQUIRE(back.hi == table.hi);
        REQUIRE(back.values == table.values);
    }
}
