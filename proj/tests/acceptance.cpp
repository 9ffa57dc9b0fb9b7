#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "taumix/counting.hpp"
#include "taumix/verify.hpp"

using namespace taumix;

namespace {

struct criterion_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw criterion_failure(what);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string criterion_delta() {
    for (int k = 4; k <= 9; ++k)
        expect(delta_report(k, 2, 2, 2).delta == Rat(10 - k, 12 * k + 24),
               "delta(" + std::to_string(k) + ",2,2,2) != (10-k)/(12k+24)");
    for (i64 ell : {3, 4})
        expect(delta_report(4, 2, 2, ell).delta == Rat(ell - 1, 12),
               "delta(4,2,2," + std::to_string(ell) + ") != (l-1)/(2(k+2))");
    for (i64 ell : {5, 6, 7, 8, 9, 12, 16, 33, 100, 1000})
        expect(delta_report(4, 2, 2, ell).delta == Rat(3 * (ell - 1), 6 * (ell + 1)),
               "delta(4,2,2," + std::to_string(ell) + ") != 3(l-1)/(6(l+1))");
    return "exact rational match: k=4..9 at l=2; l=3,4 and l=5..1000 branches at k=4";
}

std::string criterion_hua() {
    expect(hua_moment_exact(2, 2, 2) == 6, "hua_moment_exact(2,2,2) != 6");
    double worst = 0.0;
    for (int r : {2, 3})
        for (int j : {1, 2, 3})
            for (u64 N = 2; N <= 12; N += 2) {
                u64 degree = checked_u64(u128(u64(1) << (j - 1)) * ipow_checked(N, r));
                double quad = hua_moment_quadrature(r, j, N, 2 * degree + 1);
                double exact = double(hua_moment_exact(r, j, N));
                double rel = std::abs(quad - exact) / exact;
                worst = std::max(worst, rel);
                expect(rel <= 1e-6, "moment mismatch at r=" + std::to_string(r) + " j=" +
                                        std::to_string(j) + " N=" + std::to_string(N) +
                                        " rel=" + fmt(rel));
            }
    return "exact count 6 at (2,2,2); max quadrature gap " + fmt(worst) + " (tol 1e-6)";
}

std::string criterion_parseval() {
    double worst = 0.0;
    for (int k : {2, 4}) {
        auto table = sieve_tau_k(k, 1, 150);
        for (double X : {25.0, 50.0}) {
            u64 M = u64(4.0 * 3.0 * X);
            auto res = parseval_check(k, 2, X, M, table);
            worst = std::max(worst, res.rel_gap);
        }
    }
    expect(worst <= 1e-8, "relative gap " + fmt(worst) + " exceeds 1e-8");
    return "max relative gap " + fmt(worst) + " over k in {2,4}, X in {25,50} (tol 1e-8)";
}

std::string criterion_gauss() {
    double worst_sqrt = 0.0;
    for (i64 q = 1; q <= 999; q += 2) {
        double gap = std::abs(std::abs(gauss_sum(2, 1, 0, q)) - std::sqrt(double(q)));
        worst_sqrt = std::max(worst_sqrt, gap);
    }
    expect(worst_sqrt <= 1e-9, "sqrt law gap " + fmt(worst_sqrt) + " exceeds 1e-9");
    double worst_ratio = 0.0;
    for (int r : {2, 3, 4})
        for (i64 q = 1; q <= 2000; ++q) {
            auto all = gauss_sum_all_a(r, q);
            double scale = std::pow(double(q), 1.0 / double(r) - 1.0);
            for (i64 a = 1; a <= q; ++a) {
                if (std::gcd(a, q) != 1) continue;
                worst_ratio = std::max(worst_ratio, std::abs(all[std::size_t(a)]) * scale);
            }
        }
    expect(worst_ratio <= 10.0, "|G| q^{1/r-1} = " + fmt(worst_ratio) + " exceeds 10");
    return "sqrt law gap " + fmt(worst_sqrt) + " (tol 1e-9); max |G| q^{1/r-1} = " +
           fmt(worst_ratio) + " (bound 10)";
}

std::string criterion_singular_integral() {
    int ran = 0, skipped = 0;
    double worst_unit = 0.0, worst_sigma = 0.0;
    for (int i : {0, 1, 2})
        for (int r : {2, 3})
            for (int s : {2, 3})
                for (int ell : {2, 3, 4}) {
                    if (Rat(ell, r) + Rat(1, s) <= Rat(1)) {
                        ++skipped;
                        continue;
                    }
                    auto f = singular_integral_fourier(r, s, ell, i);
                    u64 seed = 977001u + 1000u * u64(i) + 100u * u64(r) + 10u * u64(s) + u64(ell);
                    auto c = singular_integral_cube(r, s, ell, i, 3000000, seed);
                    std::string tag = "(r,s,l,i)=(" + std::to_string(r) + "," + std::to_string(s) +
                                      "," + std::to_string(ell) + "," + std::to_string(i) + ")";
                    if (i == 0) {
                        worst_unit = std::max({worst_unit, std::abs(f.value - 1.0),
                                               std::abs(c.value - 1.0)});
                        expect(std::abs(f.value - 1.0) <= 1e-3,
                               "fourier J_0 != 1 at " + tag + ": " + fmt(f.value));
                        expect(std::abs(c.value - 1.0) <= 1e-3,
                               "cube J_0 != 1 at " + tag + ": " + fmt(c.value));
                    }
                    double sigma = c.stderr_est + f.tail_estimate + f.quad_error + 1e-9;
                    double gap = std::abs(f.value - c.value);
                    worst_sigma = std::max(worst_sigma, gap / sigma);
                    expect(gap <= 3.0 * sigma, "evaluator gap " + fmt(gap) + " > 3 sigma (" +
                                                   fmt(sigma) + ") at " + tag);
                    ++ran;
                }
    return std::to_string(ran) + " combos: worst |J_0 - 1| = " + fmt(worst_unit) +
           " (tol 1e-3), worst gap " + fmt(worst_sigma) + " sigma (limit 3); skipped " +
           std::to_string(skipped) + " x (r,s,l)=(3,3,2), l/r + 1/s = 1 diverges";
}

std::string criterion_coefficients() {
    ExtractConfig cfg;
    cfg.ell = 2;
    cfg.X_grid.clear();
    for (int t = 0; t < 12; ++t)
        cfg.X_grid.push_back(1e5 * std::pow(300.0, double(t) / 11.0));
    std::string note;
    double bound_c = 0.0;
    for (int k : {2, 4}) {
        CoeffProvider prov(k, 50, cfg);
        double lead = std::abs(prov.at(1).values[std::size_t(k - 1)]);
        expect(0.95 <= lead && lead <= 1.05,
               "A_" + std::to_string(k - 1) + "(1) = " + fmt(lead) + " outside [0.95, 1.05]");
        note += "k=" + std::to_string(k) + ": A_" + std::to_string(k - 1) + "(1)=" + fmt(lead);
        if (k == 2) {
            // per-component a-independence is checked at the reference order
            // k=2; for k=4 the subleading components are not identifiable from
            // desk-scale tables (their fitted means shift by more than their
            // size under any reasonable grid), so only the leading-coefficient
            // and bound checks run there
            double worst_spread = 0.0;
            for (i64 q = 1; q <= 20; ++q)
                worst_spread = std::max(worst_spread, prov.at(q).a_spread);
            expect(worst_spread <= 0.05,
                   "a-dependence spread " + fmt(worst_spread) + " exceeds 5%");
            note += ", spread " + fmt(worst_spread) + " (tol 0.05, q <= 20)";
        }
        note += "; ";
        for (auto [q, b] : prov.bound_scan())
            if (q <= 50) bound_c = std::max(bound_c, b);
    }
    expect(std::isfinite(bound_c) && bound_c < 1e3, "|A_j(q)| q unbounded: " + fmt(bound_c));
    return note + "sup |A_j(q)| q = " + fmt(bound_c) + " over q <= 50, both k";
}

std::string criterion_end_to_end() {
    VerifyConfig cfg;
    cfg.grid = {1e4, 1e5, 1e6};
    auto rep = verify_model(4, 2, 2, 2, cfg);
    std::string ratios;
    for (const auto& row : rep.grid)
        ratios += " " + fmt(std::abs(row.ratio - 1.0)) + " (X=" + fmt(row.X) + ")";
    expect(rep.gap_monotone, "|S/M - 1| not strictly decreasing:" + ratios);
    double last = std::abs(rep.grid.back().ratio - 1.0);
    expect(last <= 0.5, "|S/M - 1| = " + fmt(last) + " at X=1e6 exceeds 0.5");
    return "|S/M - 1| =" + ratios + ", fitted decay exponent " + fmt(rep.fitted_decay);
}

std::string criterion_exact_suite() {
    for (int k = 2; k <= 6; ++k) {
        auto table = sieve_tau_k(k, 1, 100000);
        u64 mismatches = 0;
        for (u64 n = 1; n <= 100000; ++n)
            if (table.at(n) != tau_k_point(k, n)) ++mismatches;
        expect(mismatches == 0,
               std::to_string(mismatches) + " sieve/point mismatches for k=" + std::to_string(k));
    }
    for (auto [r, s, ell, X] : {std::tuple<int, int, int, double>{2, 3, 2, 25000.0},
                                {3, 2, 1, 33000.0},
                                {2, 2, 3, 24000.0}}) {
        auto bh = rep_histogram(r, s, ell, X);
        u128 mass = bh.n_s;
        for (int t = 0; t < ell; ++t) mass *= bh.n_r;
        expect(bh.total == mass, "histogram mass mismatch");
    }
    auto table = sieve_tau_k(2, 1, 100000);
    {
        auto bh = rep_histogram(2, 3, 2, 25000.0);
        std::map<u64, u64> brute;
        for (u64 a = 1; a <= bh.n_r; ++a)
            for (u64 b = 1; b <= bh.n_r; ++b)
                for (u64 c = 1; c <= bh.n_s; ++c) ++brute[a * a + b * b + c * c * c];
        u128 tw = 0;
        for (auto [m, cnt] : brute) {
            expect(bh.counts[std::size_t(m)] == cnt, "convolution != enumeration at m=" + std::to_string(m));
            tw += u128(cnt) * table.at(m);
        }
        expect(tau_weighted_count(2, bh, table) == tw, "weighted count != brute force");
    }
    {
        auto bh = rep_histogram(3, 2, 1, 33000.0);
        std::map<u64, u64> brute;
        for (u64 a = 1; a <= bh.n_r; ++a)
            for (u64 c = 1; c <= bh.n_s; ++c) ++brute[a * a * a + c * c];
        for (auto [m, cnt] : brute)
            expect(bh.counts[std::size_t(m)] == cnt, "convolution != enumeration at m=" + std::to_string(m));
    }
    return "sieve == point on n <= 1e5 for k <= 6; mass and enumeration identities at (l+1)X <= 1e5";
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* title;
        std::string (*body)();
    };
    const Entry entries[] = {
        {1, "delta table reproduction", criterion_delta},
        {2, "Hua moment quadrature", criterion_hua},
        {3, "Parseval identity", criterion_parseval},
        {4, "Gauss sum laws", criterion_gauss},
        {5, "singular integral evaluators", criterion_singular_integral},
        {6, "coefficient extraction", criterion_coefficients},
        {7, "end-to-end asymptotic", criterion_end_to_end},
        {8, "exact arithmetic suite", criterion_exact_suite},
    };
    int failed = 0;
    for (const auto& e : entries) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string note;
        try {
            note = e.body();
        } catch (const std::exception& ex) {
            ok = false;
            note = ex.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %d. %s: %s (%.1f s)\n", ok ? "PASS" : "FAIL", e.id, e.title, note.c_str(),
                    secs);
        std::fflush(stdout);
        if (!ok) ++failed;
    }
    if (failed) {
        std::printf("%d of 8 criteria failed\n", failed);
        return 1;
    }
    std::printf("all 8 criteria passed\n");
    return 0;
}
