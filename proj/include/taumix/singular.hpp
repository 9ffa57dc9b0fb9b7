#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "taumix/coeffs.hpp"
#include "taumix/errors.hpp"
#include "taumix/expsums.hpp"
#include "taumix/rational.hpp"

namespace taumix {

struct TruncationResult {
    double value = 0.0;
    double tail_estimate = 0.0;   ///< heuristic bound on the omitted mass
    double imag_leakage = 0.0;    ///< worst relative imaginary part of the a-sums
    double quad_error = 0.0;      ///< accumulated quadrature error estimate
    double stderr_est = 0.0;      ///< combined uncertainty (quadrature/statistical + tail)
    double cutoff = 0.0;          ///< q_max or beta_max or sample count actually used
    std::vector<double> partial;  ///< running partial sums (per q, per block, or per batch)
};

inline void require_convergent(int r, int s, int ell) {
    if (r < 2 || s < 2 || ell < 1) throw std::invalid_argument("need r >= 2, s >= 2, ell >= 1");
    if (Rat(ell, r) + Rat(1, s) <= Rat(1))
        throw std::invalid_argument("series/integral diverges: ell/r + 1/s must exceed 1");
}

// S_{k,r,s,ell,j} truncated at q_max:
//   (1/j!) sum_q q^{-(ell+1)} sum_{(a,q)=1} G_r(a,0;q)^ell G_s(a,0;q) A_j(q)
inline TruncationResult singular_series(int k, int r, int s, int ell, int j,
                                        const CoeffProvider& coeffs, i64 q_max) {
    require_convergent(r, s, ell);
    if (j < 0 || j >= k) throw std::invalid_argument("singular series: need 0 <= j <= k-1");
    if (q_max < 1 || q_max > coeffs.q_max())
        throw std::invalid_argument("singular series: q_max outside provider range");
    TruncationResult out;
    out.cutoff = double(q_max);
    double fact = 1.0;
    for (int m = 2; m <= j; ++m) fact *= m;
    double cg_r = 0.0, cg_s = 0.0;
    for (i64 q = 1; q <= q_max; ++q) {
        auto gr = gauss_sum_all_a(r, q);
        auto gs = gauss_sum_all_a(s, q);
        std::complex<double> asum = 0.0;
        for (i64 a = 1; a <= q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            std::size_t ia = std::size_t(a == q ? q : a);
            cg_r = std::max(cg_r, std::abs(gr[ia]) * std::pow(double(q), 1.0 / r - 1.0));
            cg_s = std::max(cg_s, std::abs(gs[ia]) * std::pow(double(q), 1.0 / s - 1.0));
            std::complex<double> p = 1.0;
            for (int t = 0; t < ell; ++t) p *= gr[ia];
            asum += p * gs[ia];
        }
        if (std::abs(asum) > 1e-12 * std::pow(double(q), ell + 1))
            out.imag_leakage = std::max(out.imag_leakage,
                                        std::abs(asum.imag()) / std::abs(asum));
        std::complex<double> Aj = coeffs.at(q).values[std::size_t(j)];
        double term = (Aj * asum).real() / (std::pow(double(q), ell + 1) * fact);
        out.value += term;
        out.partial.push_back(out.value);
    }
    double ca = 0.0;
    for (auto [q, m] : coeffs.bound_scan())
        if (q <= q_max) ca = std::max(ca, m);
    double kappa = double(ell) / r + 1.0 / s;
    double coef = ca * std::pow(cg_r, ell) * cg_s / fact;
    double zeta_tail = 0.0;
    i64 Q1 = std::max<i64>(q_max + 1, 2);
    for (i64 q = Q1; q < Q1 + 20000; ++q) zeta_tail += std::pow(double(q), -kappa);
    zeta_tail += std::pow(double(Q1 + 20000), 1.0 - kappa) / (kappa - 1.0);
    out.tail_estimate = coef * zeta_tail;
    out.stderr_est = out.tail_estimate;
    return out;
}

// J_{r,s,ell,i} = ∫_R V_i(beta) W_r(beta)^ell W_s(beta) dbeta with
// V_i(beta) = ∫_0^{ell+1} e(-beta u) log^i(u) du and W the unit power phase
// integral; conjugate symmetry folds it to twice the real half-line integral.
inline TruncationResult singular_integral_fourier(int r, int s, int ell, int i,
                                                  double beta_max = 0.0) {
    require_convergent(r, s, ell);
    if (i < 0) throw std::invalid_argument("singular integral: need i >= 0");
    auto phi = [r, s, ell, i](double beta) {
        std::complex<double> v = osc_log_integral(i, 0.0, double(ell + 1), beta);
        std::complex<double> wr = unit_power_phase_integral(r, beta);
        std::complex<double> ws = unit_power_phase_integral(s, beta);
        std::complex<double> p = v;
        for (int t = 0; t < ell; ++t) p *= wr;
        return (p * ws).real();
    };
    TruncationResult out;
    double kappa = double(ell) / r + 1.0 / s;
    double rho = std::pow(2.0, -kappa);
    bool autostop = beta_max <= 0.0;
    double lo = 0.0, hi = 1.0;
    double prev_abs = 0.0, last_abs = 0.0;
    bool settled = false;
    for (int blk = 0; blk < 16 && !settled; ++blk) {
        auto res = gk_adaptive(phi, lo, hi, 1e-9 * (hi - lo), 50);
        double delta = 2.0 * res.value.real();
        out.value += delta;
        out.quad_error += 2.0 * res.error;
        out.partial.push_back(out.value);
        prev_abs = last_abs;
        last_abs = std::abs(delta);
        // dyadic blocks of a beta^{-(kappa+1)}-enveloped integrand shrink by
        // 2^{-kappa}; extrapolate the geometric tail from the block values,
        // guarding against an accidentally small last block, and keep the
        // point-sample fit as a second lower bound
        double envelope = std::max(last_abs, rho * prev_abs);
        double tail_blocks = 2.0 * envelope * rho / (1.0 - rho);
        double c_emp = std::abs(phi(hi)) * std::pow(hi, kappa + 1.0);
        c_emp = std::max(c_emp, std::abs(phi(hi * 0.93)) * std::pow(hi * 0.93, kappa + 1.0));
        out.tail_estimate = std::max(tail_blocks, 2.0 * c_emp * std::pow(hi, -kappa) / kappa);
        out.cutoff = hi;
        if (autostop)
            settled = hi >= 64.0 && out.tail_estimate < 1e-4 * std::max(std::abs(out.value), 1e-3);
        else
            settled = hi >= beta_max;
        lo = hi;
        hi *= 2.0;
    }
    if (autostop && !settled)
        throw nonconvergence_error("singular integral tail did not shrink", out.tail_estimate);
    out.stderr_est = out.quad_error + out.tail_estimate;
    return out;
}

// Same object as a volume integral: ∫_{[0,1]^{ell+1}} log^i(t_1^r + ... +
// t_ell^r + t_{ell+1}^s) dt, estimated by seeded Monte Carlo in fixed batches
// so the result is deterministic for a given seed.
inline TruncationResult singular_integral_cube(int r, int s, int ell, int i,
                                               u64 samples, u64 seed) {
    require_convergent(r, s, ell);
    if (i < 0 || samples < 1000) throw std::invalid_argument("cube integral: need i >= 0, samples >= 1000");
    constexpr int batches = 64;
    u64 per_batch = (samples + batches - 1) / batches;
    long double sum = 0.0L, sumsq = 0.0L;
    u64 n_total = 0;
    TruncationResult out;
    auto powi = [](double x, int e) {
        double acc = 1.0;
        for (int t = 0; t < e; ++t) acc *= x;
        return acc;
    };
    for (int b = 0; b < batches; ++b) {
        std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * u64(b + 1)));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        long double bs = 0.0L;
        for (u64 n = 0; n < per_batch; ++n) {
            double T = 0.0;
            for (int c = 0; c < ell; ++c) T += powi(unif(rng), r);
            T += powi(unif(rng), s);
            double v = i == 0 ? 1.0 : powi(std::log(T), i);
            bs += v;
            sumsq += (long double)v * v;
        }
        sum += bs;
        n_total += per_batch;
        out.partial.push_back(double(sum / (long double)n_total));
    }
    double mean = double(sum / (long double)n_total);
    double var = double(sumsq / (long double)n_total) - mean * mean;
    out.value = mean;
    out.cutoff = double(n_total);
    out.stderr_est = std::sqrt(std::max(var, 0.0) / double(n_total));
    return out;
}

struct MainTermModel {
    int k = 0, r = 0, s = 0, ell = 0;
    std::vector<double> S;  ///< singular series values, j = 0..k-1
    std::vector<double> J;  ///< singular integrals, i = 0..k-1
    double exponent = 0.0;  ///< ell/r + 1/s
};

// M(X) = sum_j S_j sum_{i<=j} C(j,i) J_i X^{ell/r+1/s} (log X)^{j-i}
inline double main_term(const MainTermModel& model, double X) {
    if (X < 2.0) throw std::invalid_argument("main term: need X >= 2");
    if (model.S.size() != model.J.size() || model.S.empty())
        throw std::invalid_argument("main term: model must carry matching S and J lists");
    double L = std::log(X);
    double acc = 0.0;
    std::size_t kk = model.S.size();
    std::vector<std::vector<double>> binom(kk, std::vector<double>(kk, 0.0));
    for (std::size_t j = 0; j < kk; ++j) {
        binom[j][0] = 1.0;
        for (std::size_t i = 1; i <= j; ++i)
            binom[j][i] = binom[j - 1][i - 1] + (i <= j - 1 ? binom[j - 1][i] : 0.0);
    }
    for (std::size_t j = 0; j < kk; ++j) {
        double inner = 0.0;
        for (std::size_t i = 0; i <= j; ++i)
            inner += binom[j][i] * model.J[i] * std::pow(L, double(j - i));
        acc += model.S[j] * inner;
    }
    return acc * std::pow(X, model.exponent);
}

inline MainTermModel build_main_term_model(int k, int r, int s, int ell,
                                           const CoeffProvider& coeffs, i64 q_max) {
    MainTermModel model;
    model.k = k;
    model.r = r;
    model.s = s;
    model.ell = ell;
    model.exponent = (Rat(ell, r) + Rat(1, s)).to_double();
    for (int j = 0; j < k; ++j)
        model.S.push_back(singular_series(k, r, s, ell, j, coeffs, q_max).value);
    for (int i = 0; i < k; ++i)
        model.J.push_back(singular_integral_fourier(r, s, ell, i).value);
    return model;
}

}  // namespace taumix
