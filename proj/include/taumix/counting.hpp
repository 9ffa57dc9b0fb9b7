#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "taumix/divisor.hpp"
#include "taumix/errors.hpp"
#include "taumix/expsums.hpp"

namespace taumix {

// counts[m] = #{(n_1..n_ell, n_{ell+1}) in [1,Nr]^ell x [1,Ns] : sum n_i^r + n_{ell+1}^s = m}
struct BoxHistogram {
    int r = 0, s = 0, ell = 0;
    u64 n_r = 0, n_s = 0;
    std::vector<u64> counts;
    u128 total = 0;
};

namespace detail {

// In-place shift-add convolution with the point masses {n^rpow : 1 <= n <= N}.
inline void fold_powers(std::vector<u64>& h, u64& top, int rpow, u64 N) {
    u64 step_max = ipow_checked(N, rpow);
    u64 new_top = checked_u64(u128(top) + step_max);
    std::vector<u64> out(new_top + 1, 0);
    for (u64 n = 1; n <= N; ++n) {
        u64 p = ipow_checked(n, rpow);
        for (u64 i = 0; i <= top; ++i)
            if (h[i]) out[i + p] += h[i];
    }
    h.swap(out);
    top = new_top;
}

inline u64 fold_cost(u64 size, u64 N) { return size * N; }

}  // namespace detail

inline BoxHistogram rep_histogram(int r, int s, int ell, double X) {
    if (r < 2 || s < 2 || ell < 1 || X < 1.0) throw std::invalid_argument("rep_histogram: need r,s >= 2, ell >= 1, X >= 1");
    BoxHistogram bh;
    bh.r = r;
    bh.s = s;
    bh.ell = ell;
    u64 Xi = u64(X);
    bh.n_r = nth_root(Xi, r);
    bh.n_s = nth_root(Xi, s);
    if (bh.n_r == 0 || bh.n_s == 0) throw std::invalid_argument("rep_histogram: X below 2^r");

    u64 size_est = 1, cost = 0;
    for (int t = 0; t < ell; ++t) {
        cost += detail::fold_cost(size_est, bh.n_r);
        size_est = checked_u64(u128(size_est) + ipow_checked(bh.n_r, r));
    }
    cost += detail::fold_cost(size_est, bh.n_s);
    if (cost > (u64(1) << 34)) throw resource_limit_error("rep_histogram: convolution too large");

    std::vector<u64> h{1};
    u64 top = 0;
    for (int t = 0; t < ell; ++t) detail::fold_powers(h, top, r, bh.n_r);
    detail::fold_powers(h, top, s, bh.n_s);
    bh.counts = std::move(h);
    bh.total = 0;
    for (u64 c : bh.counts) bh.total += c;
    return bh;
}

// sum over the box of tau_k evaluated at the mixed power form
inline u128 tau_weighted_count(int k, const BoxHistogram& bh, const DivisorTable& table) {
    if (table.k != k || table.lo != 1 || table.hi + 1 < bh.counts.size())
        throw std::invalid_argument("tau_weighted_count: table does not cover histogram range");
    u128 acc = 0;
    for (u64 m = 1; m < bh.counts.size(); ++m)
        if (bh.counts[m]) acc += u128(bh.counts[m]) * table.values[m - 1];
    return acc;
}

// folds-fold additive convolution of {n^r : 1 <= n <= N}
inline std::vector<u64> power_fold_histogram(int r, u64 N, int folds) {
    if (r < 2 || N < 1 || folds < 1) throw std::invalid_argument("power_fold_histogram: bad arguments");
    u64 size_est = 1, cost = 0;
    for (int t = 0; t < folds; ++t) {
        cost += detail::fold_cost(size_est, N);
        size_est = checked_u64(u128(size_est) + ipow_checked(N, r));
    }
    if (cost > (u64(1) << 34)) throw resource_limit_error("power_fold_histogram: convolution too large");
    std::vector<u64> h{1};
    u64 top = 0;
    for (int t = 0; t < folds; ++t) detail::fold_powers(h, top, r, N);
    return h;
}

// int_0^1 |T_r(alpha, N^r)|^{2^j} dalpha, exactly: the 2^j-th moment counts
// solutions of n_1^r+..+n_f^r = m_1^r+..+m_f^r with f = 2^{j-1}.
inline u128 hua_moment_exact(int r, int j, u64 N) {
    if (j < 1 || j > 6) throw std::invalid_argument("hua_moment_exact: need 1 <= j <= 6");
    int folds = 1 << (j - 1);
    auto h = power_fold_histogram(r, N, folds);
    u128 acc = 0;
    for (u64 c : h) acc += u128(c) * c;
    return acc;
}

// Riemann sum of |T_r|^{2^j} over M equispaced points with exact mod-M phases.
// Exact (up to rounding) once M exceeds the trigonometric degree 2^{j-1} N^r.
inline double hua_moment_quadrature(int r, int j, u64 N, u64 M) {
    if (j < 1 || j > 6) throw std::invalid_argument("hua_moment_quadrature: need 1 <= j <= 6");
    u64 degree = checked_u64(u128(u64(1) << (j - 1)) * ipow_checked(N, r));
    if (M <= degree) throw std::invalid_argument("hua_moment_quadrature: M <= trig degree, sum would alias");
    std::vector<u64> residues(N);
    for (u64 n = 1; n <= N; ++n) residues[n - 1] = detail::pow_mod(n % M, r, M);
    double inv_m = 1.0 / double(M);
    double acc = 0, comp = 0;
    for (u64 t = 0; t < M; ++t) {
        std::complex<double> z = 0;
        for (u64 rm : residues) z += e_of(double((u128(t) * rm) % M) * inv_m);
        double term = std::pow(std::norm(z), double(u64(1) << (j - 1)));
        double y = term - comp, w = acc + y;
        comp = (w - acc) - y;
        acc = w;
    }
    return acc * inv_m;
}

struct ParsevalResult {
    double lhs = 0;      ///< (1/M) sum_t |F(t/M)|^2
    double rhs = 0;      ///< sum of tau_k(n)^2
    double rel_gap = 0;
    u64 M = 0;
    u64 length = 0;      ///< cutoff (ell+1) X
};

inline ParsevalResult parseval_check(int k, int ell, double X, u64 M, const DivisorTable& table) {
    u64 L = u64((ell + 1) * X);
    if (L < 1) throw std::invalid_argument("parseval_check: empty range");
    if (M < L) throw std::invalid_argument("parseval_check: M below cutoff, sum would alias");
    if (table.k != k || table.lo != 1 || table.hi < L)
        throw std::invalid_argument("parseval_check: table does not cover range");
    ParsevalResult res;
    res.M = M;
    res.length = L;
    u128 sq = 0;
    for (u64 n = 1; n <= L; ++n) sq += u128(table.values[n - 1]) * table.values[n - 1];
    res.rhs = static_cast<double>(sq);
    double inv_m = 1.0 / double(M);
    double acc = 0, comp = 0;
    for (u64 t = 0; t < M; ++t) {
        std::complex<double> z = 0;
        for (u64 n = 1; n <= L; ++n)
            z += double(table.values[n - 1]) * e_of(-double((u128(t) * n) % M) * inv_m);
        double y = std::norm(z) - comp, w = acc + y;
        comp = (w - acc) - y;
        acc = w;
    }
    res.lhs = acc * inv_m;
    res.rel_gap = std::abs(res.lhs - res.rhs) / res.rhs;
    return res;
}

}  // namespace taumix
