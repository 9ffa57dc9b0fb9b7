#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "taumix/divisor.hpp"
#include "taumix/oscillatory.hpp"
#include "taumix/wideint.hpp"

namespace taumix {

namespace detail {

// e(t/q) for t = 0..q-1.
inline std::vector<std::complex<double>> root_table(i64 q) {
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(q));
    for (i64 t = 0; t < q; ++t) {
        double ang = two_pi * double(t) / double(q);
        roots[std::size_t(t)] = {std::cos(ang), std::sin(ang)};
    }
    return roots;
}

inline u64 pow_mod(u64 x, int r, u64 q) {
    u64 acc = 1 % q;
    x %= q;
    for (int i = 0; i < r; ++i) acc = u64(u128(acc) * x % q);
    return acc;
}

inline i64 mod_reduce(i64 a, i64 q) {
    i64 t = a % q;
    return t < 0 ? t + q : t;
}

// histogram of x^r mod q over x = 0..q-1, as sparse (value, count) pairs
inline std::vector<std::pair<u64, u64>> power_histogram(int r, i64 q) {
    std::vector<u64> cnt(std::size_t(q), 0);
    for (i64 x = 0; x < q; ++x) ++cnt[std::size_t(pow_mod(u64(x), r, u64(q)))];
    std::vector<std::pair<u64, u64>> out;
    for (i64 t = 0; t < q; ++t)
        if (cnt[std::size_t(t)]) out.emplace_back(u64(t), cnt[std::size_t(t)]);
    return out;
}

// frac(x) in [0, 1) with an fma-recovered low part, exact for |a*m| where
// m fits 53 bits.
inline double frac_prod(double a, double m) {
    double p = a * m;
    double e = std::fma(a, m, -p);
    double f = (p - std::floor(p)) + e;
    f -= std::floor(f);
    return f;
}

}  // namespace detail

// G_r(a, b; q) = sum_{x mod q} e((a x^r + b x)/q). Exact phases.
inline std::complex<double> gauss_sum(int r, i64 a, i64 b, i64 q) {
    if (q < 1 || r < 1) throw std::invalid_argument("gauss_sum: need q >= 1, r >= 1");
    auto roots = detail::root_table(q);
    i64 am = detail::mod_reduce(a, q), bm = detail::mod_reduce(b, q);
    std::complex<double> acc = 0.0;
    for (i64 x = 0; x < q; ++x) {
        u64 t = (u128(am) * detail::pow_mod(u64(x), r, u64(q)) + u128(bm) * u64(x)) % u64(q);
        acc += roots[std::size_t(t)];
    }
    return acc;
}

// |G_r(a, 0; q)| for every a in 1..q-1 with gcd(a, q) = 1, plus a=q slot for
// the trivial sum q itself; uses the sparse power histogram so a full sweep
// over a costs q * (#distinct powers).
inline std::vector<std::complex<double>> gauss_sum_all_a(int r, i64 q) {
    auto roots = detail::root_table(q);
    auto hist = detail::power_histogram(r, q);
    std::vector<std::complex<double>> out(std::size_t(q) + 1, 0.0);
    for (auto [t, c] : hist) {
        double w = double(c);
        std::size_t step = std::size_t(t % u64(q)), idx = 0;
        for (i64 a = 1; 2 * a <= q; ++a) {
            idx += step;
            if (idx >= std::size_t(q)) idx -= std::size_t(q);
            out[std::size_t(a)] += w * roots[idx];
        }
    }
    for (i64 a = 1; 2 * a < q; ++a) out[std::size_t(q - a)] = std::conj(out[std::size_t(a)]);
    out[std::size_t(q)] = double(q);
    if (q == 1) out[1] = 1.0;
    return out;
}

struct TSumResult {
    std::complex<double> value{0.0, 0.0};
    bool precision_warning = false;
};

// sum_{1 <= n <= X^{1/r}} e(alpha n^r) for real alpha. Phases accumulate via
// per-step increments alpha * (n^r - (n-1)^r), each reduced mod 1 with an
// fma-recovered correction, Kahan-compensated.
inline TSumResult t_sum(int r, double alpha, double X) {
    if (r < 1 || X < 0.0) throw std::invalid_argument("t_sum: need r >= 1, X >= 0");
    TSumResult res;
    u64 nmax = nth_root(u64(std::floor(X)), r);
    double phase = 0.0, comp = 0.0;
    u128 prev = 0;
    for (u64 n = 1; n <= nmax; ++n) {
        u128 cur = ipow_checked(n, r);
        u128 delta = cur - prev;
        prev = cur;
        if (delta > (u128(1) << 53)) res.precision_warning = true;
        double inc = detail::frac_prod(alpha, static_cast<double>(delta));
        double y = inc - comp;
        double t = phase + y;
        comp = (t - phase) - y;
        phase = t;
        phase -= std::floor(phase);
        double ang = two_pi * phase;
        res.value += std::complex<double>(std::cos(ang), std::sin(ang));
    }
    if (nmax > (u64(1) << 26)) res.precision_warning = true;
    return res;
}

// sum_{1 <= n <= X^{1/r}} e((a/q + beta) n^r): rational part exact mod q,
// real offset in floating point.
inline std::complex<double> t_sum_arc(int r, i64 a, i64 q, double beta, double X) {
    if (q < 1 || r < 1 || X < 0.0) throw std::invalid_argument("t_sum_arc: need q >= 1, r >= 1, X >= 0");
    auto roots = detail::root_table(q);
    i64 am = detail::mod_reduce(a, q);
    u64 nmax = nth_root(u64(std::floor(X)), r);
    std::complex<double> acc = 0.0;
    for (u64 n = 1; n <= nmax; ++n) {
        u128 m = ipow_checked(n, r);
        u64 t = u64((u128(am) * (m % u64(q))) % u64(q));
        double f = detail::frac_prod(beta, static_cast<double>(m));
        acc += roots[std::size_t(t)] * e_of(f);
    }
    return acc;
}

// F(alpha, X) = sum_{n <= (ell+1) X} tau_k(n) e(-alpha n), from a sieve
// table covering [1, (ell+1)X].
inline std::complex<double> f_sum(int k, int ell, double alpha, double X, const DivisorTable& table) {
    if (ell < 0 || X < 1.0) throw std::invalid_argument("f_sum: need ell >= 0, X >= 1");
    u64 Y = u64(std::floor(double(ell + 1) * X));
    if (table.k != k || table.lo != 1 || table.hi < Y)
        throw std::invalid_argument("f_sum: table must hold tau_k on [1, (ell+1)X]");
    double phase = 0.0, comp = 0.0;
    double step = -(alpha - std::floor(alpha));
    std::complex<double> acc = 0.0;
    for (u64 n = 1; n <= Y; ++n) {
        double y = step - comp;
        double t = phase + y;
        comp = (t - phase) - y;
        phase = t;
        phase -= std::floor(phase);
        double ang = two_pi * phase;
        acc += double(table.values[std::size_t(n - 1)]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

// F(a/q, X) with exact phases.
inline std::complex<double> f_sum_rat(int k, int ell, i64 a, i64 q, double X, const DivisorTable& table) {
    if (q < 1 || ell < 0 || X < 1.0) throw std::invalid_argument("f_sum_rat: need q >= 1, ell >= 0, X >= 1");
    u64 Y = u64(std::floor(double(ell + 1) * X));
    if (table.k != k || table.lo != 1 || table.hi < Y)
        throw std::invalid_argument("f_sum_rat: table must hold tau_k on [1, (ell+1)X]");
    auto roots = detail::root_table(q);
    i64 am = detail::mod_reduce(-a, q);
    std::complex<double> acc = 0.0;
    std::size_t idx = 0;
    for (u64 n = 1; n <= Y; ++n) {
        idx += std::size_t(am);
        if (idx >= std::size_t(q)) idx -= std::size_t(q);
        acc += double(table.values[std::size_t(n - 1)]) * roots[idx];
    }
    return acc;
}

// Psi_r(beta, X) = ∫_0^{X^{1/r}} e(beta u^r) du.
inline std::complex<double> psi(int r, double beta, double X, double* err = nullptr) {
    if (r < 1 || X <= 0.0) throw std::invalid_argument("psi: need r >= 1, X > 0");
    double root = std::pow(X, 1.0 / double(r));
    std::complex<double> w = unit_power_phase_integral(r, beta * X, err);
    if (err) *err *= root;
    return root * w;
}

// I_j(beta, X) = (1/j!) ∫_1^{(ell+1)X} e(-beta u) log^j(u) du.
inline std::complex<double> i_profile(int j, int ell, double beta, double X, double* err = nullptr) {
    if (j < 0 || ell < 0 || X < 1.0) throw std::invalid_argument("i_profile: need j >= 0, ell >= 0, X >= 1");
    double upper = double(ell + 1) * X;
    double fact = 1.0;
    for (int m = 2; m <= j; ++m) fact *= m;
    std::complex<double> v = osc_log_integral(j, 1.0, upper, beta, err);
    if (err) *err /= fact;
    return v / fact;
}

struct RationalArc {
    i64 a = 0, q = 1;
    double center = 0.0;
    double halfwidth = 0.0;
};

struct ArcPartition {
    double X = 0.0, theta = 0.0, P = 0.0, Q = 0.0;
    std::vector<RationalArc> arcs;       ///< sorted by center a/q
    double major_measure = 0.0;
    double minor_measure = 0.0;
    bool disjoint = false;
};

// Farey dissection of (1/Q, 1 + 1/Q]: arcs |alpha - a/q| <= 1/(qQ) for
// q <= P = X^theta, (a, q) = 1, 1 <= a <= q.
inline ArcPartition dissect(double X, double theta) {
    if (X < 2.0 || theta <= 0.0 || theta >= 1.0) throw std::invalid_argument("dissect: need X >= 2, 0 < theta < 1");
    ArcPartition part;
    part.X = X;
    part.theta = theta;
    part.P = std::pow(X, theta);
    part.Q = std::pow(X, 1.0 - theta);
    i64 qmax = i64(std::floor(part.P + 1e-9));
    for (i64 q = 1; q <= qmax; ++q)
        for (i64 a = 1; a <= q; ++a)
            if (std::gcd(a, q) == 1)
                part.arcs.push_back({a, q, double(a) / double(q), 1.0 / (double(q) * part.Q)});
    std::sort(part.arcs.begin(), part.arcs.end(),
              [](const RationalArc& u, const RationalArc& v) { return u.center < v.center; });
    double total = 0.0;
    for (const auto& arc : part.arcs) total += 2.0 * arc.halfwidth;
    part.major_measure = total;
    part.minor_measure = 1.0 - total;
    part.disjoint = true;
    for (std::size_t i = 0; i + 1 < part.arcs.size(); ++i) {
        double gap = part.arcs[i + 1].center - part.arcs[i].center;
        if (gap < part.arcs[i].halfwidth + part.arcs[i + 1].halfwidth - 1e-12) part.disjoint = false;
    }
    if (!part.arcs.empty()) {
        // wraparound: the arc at 1/1 against the first arc shifted by one period
        const auto& last = part.arcs.back();
        const auto& first = part.arcs.front();
        double gap = (first.center + 1.0) - last.center;
        if (gap < first.halfwidth + last.halfwidth - 1e-12) part.disjoint = false;
    }
    return part;
}

// | T_r(a/q + beta, X) - (G_r(a,0;q)/q) Psi_r(beta, X) |
inline double major_arc_residual(int r, i64 a, i64 q, double beta, double X) {
    std::complex<double> t = t_sum_arc(r, a, q, beta, X);
    std::complex<double> model = gauss_sum(r, a, 0, q) / double(q) * psi(r, beta, X);
    return std::abs(t - model);
}

struct WeylScanRow {
    double alpha = 0.0;
    double abs_t = 0.0;
    double envelope = 0.0;
    double ratio = 0.0;
};

// Samples minor-arc points and reports |T_r| against the Weyl envelope
// X^{1/r} (1/P + X^{-1/r} + Q/X)^{1/2^{r-1}}.
inline std::vector<WeylScanRow> weyl_scan(int r, double X, double theta, int samples, u64 seed) {
    if (samples < 1) throw std::invalid_argument("weyl_scan: need samples >= 1");
    ArcPartition part = dissect(X, theta);
    if (part.minor_measure < 0.05)
        throw std::invalid_argument("weyl_scan: major arcs cover nearly everything at this theta");
    double expo = 1.0 / double(u64(1) << (r - 1));
    double env = std::pow(X, 1.0 / r) *
                 std::pow(1.0 / part.P + std::pow(X, -1.0 / r) + part.Q / X, expo);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(1.0 / part.Q, 1.0 + 1.0 / part.Q);
    std::vector<WeylScanRow> rows;
    while (int(rows.size()) < samples) {
        double alpha = unif(rng);
        bool major = false;
        for (const auto& arc : part.arcs)
            if (std::abs(alpha - arc.center) <= arc.halfwidth) { major = true; break; }
        if (major) continue;
        double t = std::abs(t_sum(r, alpha, X).value);
        rows.push_back({alpha, t, env, t / env});
    }
    return rows;
}

}  // namespace taumix
