#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "taumix/divisor.hpp"
#include "taumix/errors.hpp"
#include "taumix/expsums.hpp"
#include "taumix/oscillatory.hpp"

namespace taumix {

struct ExtractConfig {
    std::vector<double> X_grid;  ///< empty: 12 log-spaced points in [1e5, 1e7]
    int ell = 2;                 ///< data window is [1, (ell+1) X]
    SieveConfig sieve;
    double cond_limit = 1e12;
    double insignificance = 1e-3;  ///< |A_j| < insignificance/q flags the estimate
};

struct CoeffEstimate {
    int k = 0;
    i64 q = 1;
    std::vector<std::complex<double>> values;  ///< A_j averaged over residues
    std::vector<char> insignificant;           ///< per j
    double residual = 0.0;                     ///< rms of ||Ax-b||/||b|| over residues
    double a_spread = 0.0;                     ///< max relative disagreement across residues
    std::vector<i64> residues;                 ///< the coprime a values fitted
    std::vector<std::vector<std::complex<double>>> per_residue;  ///< [residue index][j]
    std::vector<double> X_grid;
};

namespace detail {

// least squares by Householder QR, A is m x n row-major, m >= n.
// Returns x; fills residual norm and a diag(R) condition ratio.
inline std::vector<double> qr_solve(std::vector<double> A, std::size_t m, std::size_t n,
                                    std::vector<double> b, double* resid, double* cond) {
    std::vector<double> rdiag(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double nrm = 0.0;
        for (std::size_t i = j; i < m; ++i) nrm = std::hypot(nrm, A[i * n + j]);
        if (nrm != 0.0) {
            if (A[j * n + j] < 0) nrm = -nrm;
            for (std::size_t i = j; i < m; ++i) A[i * n + j] /= nrm;
            A[j * n + j] += 1.0;
            for (std::size_t c = j + 1; c < n; ++c) {
                double s = 0.0;
                for (std::size_t i = j; i < m; ++i) s += A[i * n + j] * A[i * n + c];
                s = -s / A[j * n + j];
                for (std::size_t i = j; i < m; ++i) A[i * n + c] += s * A[i * n + j];
            }
            double s = 0.0;
            for (std::size_t i = j; i < m; ++i) s += A[i * n + j] * b[i];
            s = -s / A[j * n + j];
            for (std::size_t i = j; i < m; ++i) b[i] += s * A[i * n + j];
        }
        rdiag[j] = -nrm;
    }
    double rnorm = 0.0;
    for (std::size_t i = n; i < m; ++i) rnorm += b[i] * b[i];
    if (resid) *resid = std::sqrt(rnorm);
    if (cond) {
        double mx = 0.0, mn = std::numeric_limits<double>::infinity();
        for (double d : rdiag) { mx = std::max(mx, std::abs(d)); mn = std::min(mn, std::abs(d)); }
        *cond = mn == 0.0 ? std::numeric_limits<double>::infinity() : mx / mn;
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t j = n; j-- > 0; ) {
        double s = b[j];
        for (std::size_t c = j + 1; c < n; ++c) s -= A[j * n + c] * x[c];
        x[j] = rdiag[j] == 0.0 ? 0.0 : s / rdiag[j];
    }
    return x;
}

inline std::vector<double> default_coeff_grid() {
    std::vector<double> g;
    for (int t = 0; t < 12; ++t) g.push_back(1e5 * std::pow(100.0, t / 11.0));
    return g;
}

// I_j(0; X) = (1/j!) ∫_1^{(ell+1)X} log^j u du
inline double log_moment(int j, int ell, double X) {
    double fact = 1.0;
    for (int m = 2; m <= j; ++m) fact *= m;
    return (logpow_antiderivative(j, double(ell + 1) * X) - logpow_antiderivative(j, 1.0)) / fact;
}

}  // namespace detail

// Extracts the coefficients A_j(q), j = 0..k-1, for every q <= q_max from a
// single streaming sieve pass: per-residue partial sums of tau_k at each grid
// checkpoint give F(a/q, X_t) exactly, and a least-squares fit against the
// log-moment columns recovers the coefficients.
class CoeffProvider {
  public:
    CoeffProvider(int k, i64 q_max, ExtractConfig cfg = {}) : k_(k), q_max_(q_max), cfg_(cfg) {
        if (k < 1 || q_max < 1) throw std::invalid_argument("coeff extraction: need k >= 1, q_max >= 1");
        if (cfg_.X_grid.empty()) cfg_.X_grid = detail::default_coeff_grid();
        std::sort(cfg_.X_grid.begin(), cfg_.X_grid.end());
        if (cfg_.X_grid.front() < 10.0) throw std::invalid_argument("coeff extraction: grid X must be >= 10");
        if (int(cfg_.X_grid.size()) < k + 1)
            throw std::invalid_argument("coeff extraction: grid must have more points than coefficients");
        for (i64 b = q_max / 2 + 1; b <= q_max; ++b) bases_.push_back(b);
        stream_residue_sums();
        fit_all();
    }

    const CoeffEstimate& at(i64 q) const {
        if (q < 1 || q > q_max_) throw std::out_of_range("coeff provider: q outside extracted range");
        return table_[std::size_t(q - 1)];
    }
    i64 q_max() const { return q_max_; }
    int k() const { return k_; }
    const std::vector<double>& grid() const { return cfg_.X_grid; }

    // (q, max_j |A_j(q)| * q) for the tail-constant scan
    std::vector<std::pair<i64, double>> bound_scan() const {
        std::vector<std::pair<i64, double>> rows;
        for (const auto& est : table_) {
            double m = 0.0;
            for (const auto& v : est.values) m = std::max(m, std::abs(v));
            rows.emplace_back(est.q, m * double(est.q));
        }
        return rows;
    }

  private:
    int k_;
    i64 q_max_;
    ExtractConfig cfg_;
    std::vector<i64> bases_;
    // delta_[t][base index][c] = sum of tau_k(n) over Y_{t-1} < n <= Y_t, n ≡ c (base)
    std::vector<std::vector<std::vector<u128>>> delta_;
    std::vector<u64> checkpoints_;
    std::vector<CoeffEstimate> table_;

    void stream_residue_sums() {
        checkpoints_.clear();
        for (double X : cfg_.X_grid) checkpoints_.push_back(u64(std::floor(double(cfg_.ell + 1) * X)));
        delta_.assign(checkpoints_.size(), {});
        for (auto& bin : delta_) {
            bin.resize(bases_.size());
            for (std::size_t bi = 0; bi < bases_.size(); ++bi) bin[bi].assign(std::size_t(bases_[bi]), 0);
        }
        u64 top = checkpoints_.back();
        for_each_tau_segment(k_, 1, top, cfg_.sieve, [&](u64 lo, const std::vector<u64>& vals) {
            u64 hi = lo + vals.size() - 1;
            u64 cur = lo;
            while (cur <= hi) {
                std::size_t t = std::size_t(std::lower_bound(checkpoints_.begin(), checkpoints_.end(), cur) -
                                            checkpoints_.begin());
                u64 stop = std::min(hi, checkpoints_[t]);
                for (std::size_t bi = 0; bi < bases_.size(); ++bi) {
                    u64 b = u64(bases_[bi]);
                    auto* acc = delta_[t][bi].data();
                    u64 c = cur % b;
                    for (u64 n = cur; n <= stop; ++n) {
                        acc[c] += vals[std::size_t(n - lo)];
                        if (++c == b) c = 0;
                    }
                }
                cur = stop + 1;
            }
        });
    }

    void fit_all() {
        std::size_t T = cfg_.X_grid.size(), nc = std::size_t(k_);
        // shared design matrix: column j is I_j(0; X_t), scaled to unit norm
        std::vector<double> colnorm(nc, 0.0), A(T * nc);
        for (std::size_t t = 0; t < T; ++t)
            for (std::size_t j = 0; j < nc; ++j) {
                double v = detail::log_moment(int(j), cfg_.ell, cfg_.X_grid[t]);
                A[t * nc + j] = v;
                colnorm[j] += v * v;
            }
        for (std::size_t j = 0; j < nc; ++j) colnorm[j] = std::sqrt(colnorm[j]);
        for (std::size_t t = 0; t < T; ++t)
            for (std::size_t j = 0; j < nc; ++j) A[t * nc + j] /= colnorm[j];

        table_.resize(std::size_t(q_max_));
        for (i64 q = 1; q <= q_max_; ++q) {
            CoeffEstimate est;
            est.k = k_;
            est.q = q;
            est.X_grid = cfg_.X_grid;
            // cumulative residue sums for this q, folded down from its base
            std::size_t bi = base_index(q);
            u64 b = u64(bases_[bi]);
            std::vector<std::vector<double>> S(checkpoints_.size(), std::vector<double>(std::size_t(q), 0.0));
            std::vector<u128> run(std::size_t(q), 0);
            for (std::size_t t = 0; t < checkpoints_.size(); ++t) {
                for (u64 C = 0; C < b; ++C) run[std::size_t(C % u64(q))] += delta_[t][bi][std::size_t(C)];
                for (std::size_t c = 0; c < std::size_t(q); ++c) S[t][c] = static_cast<double>(run[c]);
            }
            auto roots = detail::root_table(q);
            double res_acc = 0.0;
            std::size_t nres = 0;
            for (i64 a = 1; a <= q; ++a) {
                if (std::gcd(a, q) != 1) continue;
                std::vector<double> re(T), im(T);
                for (std::size_t t = 0; t < T; ++t) {
                    std::complex<double> f = 0.0;
                    for (std::size_t c = 0; c < std::size_t(q); ++c) {
                        std::size_t idx = std::size_t((u128(u64(detail::mod_reduce(-a, q))) * c) % u64(q));
                        f += S[t][c] * roots[idx];
                    }
                    re[t] = f.real();
                    im[t] = f.imag();
                }
                double r1 = 0.0, r2 = 0.0, cond = 0.0;
                auto xr = detail::qr_solve(A, T, nc, re, &r1, &cond);
                if (cond > cfg_.cond_limit)
                    throw ill_conditioned_error("coefficient design matrix nearly rank-deficient", cond);
                auto xi = detail::qr_solve(A, T, nc, im, &r2, nullptr);
                double bnorm = 0.0;
                for (std::size_t t = 0; t < T; ++t) bnorm += re[t] * re[t] + im[t] * im[t];
                bnorm = std::sqrt(bnorm);
                double rel = bnorm == 0.0 ? 0.0 : std::hypot(r1, r2) / bnorm;
                res_acc += rel * rel;
                ++nres;
                std::vector<std::complex<double>> coeff(nc);
                for (std::size_t j = 0; j < nc; ++j)
                    coeff[j] = std::complex<double>(xr[j], xi[j]) / colnorm[j];
                est.residues.push_back(a);
                est.per_residue.push_back(std::move(coeff));
            }
            est.residual = nres ? std::sqrt(res_acc / double(nres)) : 0.0;
            est.values.assign(nc, 0.0);
            for (const auto& pr : est.per_residue)
                for (std::size_t j = 0; j < nc; ++j) est.values[j] += pr[j];
            for (auto& v : est.values) v /= double(nres);
            est.insignificant.assign(nc, 0);
            double spread = 0.0;
            for (std::size_t j = 0; j < nc; ++j) {
                double mag = std::abs(est.values[j]);
                if (mag < cfg_.insignificance / double(q)) { est.insignificant[j] = 1; continue; }
                double diam = 0.0;
                for (const auto& u : est.per_residue)
                    for (const auto& w : est.per_residue) diam = std::max(diam, std::abs(u[j] - w[j]));
                spread = std::max(spread, diam / mag);
            }
            est.a_spread = spread;
            table_[std::size_t(q - 1)] = std::move(est);
        }
    }

    std::size_t base_index(i64 q) const {
        i64 m = q_max_ / q;
        i64 b = m * q;
        auto it = std::lower_bound(bases_.begin(), bases_.end(), b);
        return std::size_t(it - bases_.begin());
    }
};

// Convenience single-(q, a) extraction sharing the provider machinery.
inline CoeffEstimate extract_coeffs(int k, i64 q, ExtractConfig cfg = {}) {
    CoeffProvider provider(k, q, cfg);
    return provider.at(q);
}

}  // namespace taumix
