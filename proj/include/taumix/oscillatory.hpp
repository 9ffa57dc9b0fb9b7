#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "taumix/quadrature.hpp"

namespace taumix {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// e(x) = exp(2*pi*i*x), with argument reduction mod 1 before scaling.
inline std::complex<double> e_of(double x) {
    double f = x - std::floor(x);
    double t = two_pi * f;
    return {std::cos(t), std::sin(t)};
}

namespace detail {

// Switch from direct panels to endpoint series once the remaining range
// holds more than ~osc_switch/2pi oscillations.
inline constexpr double osc_switch = 30.0;
inline constexpr int series_max_terms = 34;

// antiderivative of log^i u that vanishes at u = 0:
// u * sum_{m<=i} (-1)^{i-m} (i!/m!) log^m u.
inline double logpow_antiderivative(int i, double u) {
    if (u <= 0.0) return 0.0;
    double L = std::log(u);
    double coef = 1.0;  // i!/m! running from m = i down
    double acc = 0.0, Lp = 1.0;
    std::vector<double> powers(std::size_t(i) + 1);
    for (int m = 0; m <= i; ++m) { powers[std::size_t(m)] = Lp; Lp *= L; }
    double sign = 1.0;
    for (int m = i; m >= 0; --m) {
        acc += sign * coef * powers[std::size_t(m)];
        coef *= m;  // (i!/m!) -> (i!/(m-1)!)
        sign = -sign;
    }
    return u * acc;
}

// Coefficient table for derivatives of log^i u:
// d^m/du^m log^i u = u^{-m} * sum_p c[m][p] log^p u.
inline std::vector<std::vector<double>> logpow_derivative_coeffs(int i, int mmax) {
    std::vector<std::vector<double>> c(std::size_t(mmax) + 1,
                                       std::vector<double>(std::size_t(i) + 2, 0.0));
    c[0][std::size_t(i)] = 1.0;
    for (int m = 0; m < mmax; ++m)
        for (int p = 0; p <= i; ++p)
            c[std::size_t(m) + 1][std::size_t(p)] =
                (p + 1) * c[std::size_t(m)][std::size_t(p) + 1] - m * c[std::size_t(m)][std::size_t(p)];
    return c;
}

inline std::complex<double> eval_logpow_derivative(const std::vector<double>& row, int i, double u) {
    double L = std::log(u), Lp = 1.0, acc = 0.0;
    for (int p = 0; p <= i; ++p) { acc += row[std::size_t(p)] * Lp; Lp *= L; }
    return {acc, 0.0};
}

}  // namespace detail

// ∫_a^b e(-beta u) log^i(u) du for 0 <= a < b. Integrable log singularity at
// u = 0 is allowed. err (if given) receives the internal error estimate.
inline std::complex<double> osc_log_integral(int i, double a, double b, double beta,
                                             double* err = nullptr) {
    if (err) *err = 0.0;
    if (i < 0 || a < 0.0 || b <= a) throw std::invalid_argument("osc_log_integral: need i >= 0, 0 <= a < b");
    if (beta == 0.0) {
        double v = detail::logpow_antiderivative(i, b) - detail::logpow_antiderivative(i, a);
        return {v, 0.0};
    }
    if (i == 0) {
        // exact: (e(-beta b) - e(-beta a)) / (-2 pi i beta)
        std::complex<double> den(0.0, -two_pi * beta);
        return (e_of(-beta * b) - e_of(-beta * a)) / den;
    }
    double abeta = std::abs(beta);
    double ustar = detail::osc_switch / (two_pi * abeta);
    double split = std::min(b, std::max(a, ustar));
    std::complex<double> total = 0.0;
    double total_err = 0.0;

    auto f = [i, beta](double u) { return e_of(-beta * u) * std::pow(std::log(u), i); };

    // direct part [a, split]
    if (split > a) {
        double tol_piece = 1e-13 * std::max(1.0, split - a);
        if (a == 0.0) {
            // one integration by parts against the vanishing antiderivative
            // A_i removes the endpoint singularity:
            //   ∫_0^s e(-bu) log^i u du = e(-bs) A_i(s) + 2 pi i b ∫_0^s e(-bu) A_i(u) du
            std::complex<double> lam(0.0, two_pi * beta);
            std::complex<double> edge = e_of(-beta * split) * detail::logpow_antiderivative(i, split);
            double tol_g = 1e-14 * std::max(split, std::abs(edge)) / std::max(1.0, std::abs(lam));
            auto g = [i, beta](double u) {
                return e_of(-beta * u) * detail::logpow_antiderivative(i, u);
            };
            auto r = gk_adaptive(g, 0.0, split, tol_g, 52);
            total += edge + lam * r.value;
            total_err += std::abs(lam) * r.error;
        } else {
            auto r = gk_adaptive(f, a, split, tol_piece, 52);
            total += r.value;
            total_err += r.error;
        }
    }

    // series part [split, b] by repeated integration by parts
    if (split < b) {
        auto coeffs = detail::logpow_derivative_coeffs(i, detail::series_max_terms);
        std::complex<double> lam(0.0, -two_pi * beta);
        std::complex<double> Eb = e_of(-beta * b), Ea = e_of(-beta * split);
        std::complex<double> lam_pow = lam;
        std::complex<double> acc = 0.0;
        double sign = 1.0, last = 0.0;
        double inv_b = 1.0, inv_a = 1.0;
        for (int m = 0; m < detail::series_max_terms; ++m) {
            std::complex<double> gb = detail::eval_logpow_derivative(coeffs[std::size_t(m)], i, b) * inv_b;
            std::complex<double> ga = detail::eval_logpow_derivative(coeffs[std::size_t(m)], i, split) * inv_a;
            std::complex<double> term = sign * (gb * Eb - ga * Ea) / lam_pow;
            acc += term;
            last = std::abs(term);
            if (m >= 2 && last < 1e-17 * std::max(1.0, std::abs(acc))) { last = 0.0; break; }
            sign = -sign;
            lam_pow *= lam;
            inv_b /= b;
            inv_a /= split;
        }
        total += acc;
        total_err += 2.0 * last;
    }
    if (err) *err = total_err;
    return total;
}

// ∫_0^1 e(gamma u^r) du.
inline std::complex<double> unit_power_phase_integral(int r, double gamma, double* err = nullptr) {
    if (err) *err = 0.0;
    if (r < 1) throw std::invalid_argument("unit_power_phase_integral: r >= 1");
    if (gamma == 0.0) return {1.0, 0.0};
    if (gamma < 0.0) return std::conj(unit_power_phase_integral(r, -gamma, err));
    if (gamma <= 12.0) {
        auto res = gk_adaptive([r, gamma](double u) { return e_of(gamma * std::pow(u, r)); },
                               0.0, 1.0, 1e-13, 50);
        if (err) *err = res.error;
        return res.value;
    }
    // head: ∫_0^∞ = Gamma(1+1/r) (2 pi gamma)^{-1/r} e^{i pi/(2r)}
    double a = 1.0 / r;
    double mod = std::tgamma(1.0 + a) * std::pow(two_pi * gamma, -a);
    double ang = 0.5 * std::numbers::pi * a;
    std::complex<double> head = mod * std::complex<double>(std::cos(ang), std::sin(ang));
    // tail: (1/r) ∫_1^∞ t^{a-1} e(gamma t) dt as an endpoint series
    std::complex<double> mu(0.0, two_pi * gamma);
    std::complex<double> mu_pow = mu;
    double h = 1.0;  // running product (1-a)(2-a)...(m-a)
    std::complex<double> S = 0.0;
    double last = 0.0;
    for (int m = 0; m < detail::series_max_terms; ++m) {
        std::complex<double> term = h / mu_pow;
        S += term;
        last = std::abs(term);
        if (last < 1e-18) break;
        h *= (1.0 + m - a);
        mu_pow *= mu;
    }
    std::complex<double> tail = a * e_of(gamma) * S;
    if (err) *err = 2.0 * last * a + 1e-16;
    return head + tail;
}

}  // namespace taumix
