#include <catch2/catch_amalgamated.hpp>

#include "taumix/singular.hpp"

using namespace taumix;
using Catch::Matchers::WithinAbs;

namespace {

ExtractConfig quick_cfg() {
    ExtractConfig cfg;
    cfg.X_grid.clear();
    for (int t = 0; t < 12; ++t) cfg.X_grid.push_back(1e4 * std::pow(100.0, t / 11.0));
    cfg.ell = 2;
    return cfg;
}

}  // namespace

TEST_CASE("convergence precondition") {
    REQUIRE_NOTHROW(require_convergent(2, 2, 2));
    REQUIRE_THROWS_AS(require_convergent(3, 3, 2), std::invalid_argument);  // 2/3 + 1/3 = 1
    REQUIRE_THROWS_AS(require_convergent(4, 2, 1), std::invalid_argument);  // 1/4 + 1/2 < 1
}

TEST_CASE("volume evaluator: constant integrand is exact") {
    auto res = singular_integral_cube(2, 2, 2, 0, 100000, 42);
    REQUIRE_THAT(res.value, WithinAbs(1.0, 1e-12));
    REQUIRE_THAT(res.stderr_est, WithinAbs(0.0, 1e-12));
}

TEST_CASE("volume evaluator is deterministic in the seed") {
    auto a = singular_integral_cube(2, 2, 2, 1, 200000, 7);
    auto b = singular_integral_cube(2, 2, 2, 1, 200000, 7);
    auto c = singular_integral_cube(2, 2, 2, 1, 200000, 8);
    REQUIRE(a.value == b.value);
    REQUIRE(a.value != c.value);
}

TEST_CASE("spectral evaluator: zero log power integrates the box to 1") {
    for (auto [r, s, ell] : {std::tuple<int, int, int>{2, 2, 2}, {2, 3, 3}, {3, 2, 2}}) {
        CAPTURE(r, s, ell);
        auto res = singular_integral_fourier(r, s, ell, 0);
        REQUIRE_THAT(res.value, WithinAbs(1.0, 1e-3));
        REQUIRE(std::abs(res.value - 1.0) < 2.0 * (res.tail_estimate + res.quad_error) + 1e-6);
    }
}

TEST_CASE("spectral evaluator matches the frozen volume reference") {
    // mpmath triple quadrature of log(x^2+y^2+z^2) over the unit cube
    auto res = singular_integral_fourier(2, 2, 2, 1);
    REQUIRE_THAT(res.value, WithinAbs(-0.187704523394, 3e-5));
}

TEST_CASE("the two evaluators agree within compound uncertainty") {
    for (auto [r, s, ell, i] : {std::tuple<int, int, int, int>{2, 2, 2, 1}, {3, 2, 3, 2}}) {
        CAPTURE(r, s, ell, i);
        auto f = singular_integral_fourier(r, s, ell, i);
        auto c = singular_integral_cube(r, s, ell, i, 4000000, 20260814);
        double sigma = 3.0 * c.stderr_est + f.tail_estimate + f.quad_error;
        REQUIRE_THAT(f.value, WithinAbs(c.value, sigma));
    }
}

TEST_CASE("fixed truncation reports its cutoff and a partial trail") {
    auto res = singular_integral_fourier(2, 2, 2, 0, 32.0);
    REQUIRE(res.cutoff >= 32.0);
    REQUIRE(res.partial.size() >= 5);
    // partial sums form a Cauchy sequence toward the reported value
    double last_gap = std::abs(res.partial.front() - res.value);
    double mid_gap = std::abs(res.partial[res.partial.size() / 2] - res.value);
    REQUIRE(mid_gap <= last_gap + 1e-12);
}

TEST_CASE("series truncated at q = 1 is the leading coefficient alone") {
    auto prov = CoeffProvider(2, 4, quick_cfg());
    for (int j : {0, 1}) {
        auto res = singular_series(2, 2, 2, 2, j, prov, 1);
        double fact = j == 0 ? 1.0 : 1.0;
        REQUIRE_THAT(res.value, WithinAbs(prov.at(1).values[std::size_t(j)].real() / fact,
                                          1e-12));
    }
}

TEST_CASE("series imaginary leakage stays negligible") {
    auto prov = CoeffProvider(2, 20, quick_cfg());
    auto res = singular_series(2, 2, 2, 2, 1, prov, 20);
    REQUIRE(res.imag_leakage < 1e-6);
    REQUIRE(res.partial.size() == 20);
}

TEST_CASE("series tail estimate shrinks with the cutoff") {
    auto prov = CoeffProvider(2, 40, quick_cfg());
    auto s20 = singular_series(2, 2, 2, 2, 1, prov, 20);
    auto s40 = singular_series(2, 2, 2, 2, 1, prov, 40);
    REQUIRE(s40.tail_estimate < s20.tail_estimate);
    REQUIRE_THAT(s40.value, WithinAbs(s20.value, s20.tail_estimate + 1e-9));
}

TEST_CASE("main term model composes binomials correctly") {
    MainTermModel m;
    m.k = 2;
    m.S = {2.0, 3.0};
    m.J = {5.0, 7.0};
    m.exponent = 1.5;
    // M(X) = [S0 J0 + S1 (J0 log X + J1)] X^1.5
    double X = 100.0;
    double L = std::log(X);
    double expect = (2.0 * 5.0 + 3.0 * (5.0 * L + 7.0)) * std::pow(X, 1.5);
    REQUIRE_THAT(main_term(m, X), WithinAbs(expect, 1e-9 * expect));
    REQUIRE_THROWS_AS(main_term(m, 1.0), std::invalid_argument);
    m.J.pop_back();
    REQUIRE_THROWS_AS(main_term(m, X), std::invalid_argument);
}

TEST_CASE("series rejects out-of-range inputs") {
    auto prov = CoeffProvider(2, 4, quick_cfg());
    REQUIRE_THROWS_AS(singular_series(2, 2, 2, 2, 2, prov, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(singular_series(2, 2, 2, 2, 0, prov, 9), std::invalid_argument);
    REQUIRE_THROWS_AS(singular_series(2, 3, 3, 2, 0, prov, 4), std::invalid_argument);
}
