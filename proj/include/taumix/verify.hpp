#pragma once

#include <cmath>
#include <vector>

#include "taumix/coeffs.hpp"
#include "taumix/counting.hpp"
#include "taumix/delta.hpp"
#include "taumix/singular.hpp"

namespace taumix {

struct GridRow {
    double X = 0;
    double lhs = 0;    ///< exact box sum of tau_k over the power form
    double main = 0;   ///< predicted main term
    double ratio = 0;  ///< lhs / main
};

struct HuaCheck {
    int r = 0, j = 0;
    u64 N = 0;
    double exact = 0;
    double quadrature = 0;
    double rel_gap = 0;
};

struct VerifyConfig {
    std::vector<double> grid;  ///< X values; default 1e4 .. 1e6, half-decade steps
    i64 q_max = 100;
    ExtractConfig extract;
    SieveConfig sieve;
};

struct VerifyReport {
    int k = 0, r = 0, s = 0, ell = 0;
    DeltaReport delta;
    MainTermModel model;
    std::vector<GridRow> grid;
    double fitted_decay = 0;  ///< LS slope of log|ratio-1| against log X
    bool gap_monotone = false;
    double parseval_gap = 0;
    std::vector<HuaCheck> hua;
};

namespace detail {

inline double fit_decay_slope(const std::vector<GridRow>& rows) {
    std::size_t n = rows.size();
    if (n < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& row : rows) {
        double x = std::log(row.X);
        double y = std::log(std::max(std::abs(row.ratio - 1.0), 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double dn = double(n);
    return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

}  // namespace detail

inline VerifyReport verify_model(int k, int r, int s, int ell, VerifyConfig cfg = {}) {
    VerifyReport rep;
    rep.k = k;
    rep.r = r;
    rep.s = s;
    rep.ell = ell;
    rep.delta = delta_report(k, r, s, ell);
    require_convergent(r, s, ell);
    if (cfg.grid.empty())
        for (double e = 4.0; e < 6.25; e += 0.5) cfg.grid.push_back(std::pow(10.0, e));

    CoeffProvider coeffs(k, cfg.q_max, cfg.extract);
    rep.model = build_main_term_model(k, r, s, ell, coeffs, cfg.q_max);

    double x_top = 0;
    for (double X : cfg.grid) x_top = std::max(x_top, X);
    u64 table_top = u64((ell + 1) * x_top) + 1;
    DivisorTable table = sieve_tau_k(k, 1, table_top, cfg.sieve);

    for (double X : cfg.grid) {
        GridRow row;
        row.X = X;
        BoxHistogram bh = rep_histogram(r, s, ell, X);
        row.lhs = static_cast<double>(tau_weighted_count(k, bh, table));
        row.main = main_term(rep.model, X);
        if (row.main == 0.0) throw std::domain_error("verify: predicted main term vanished");
        row.ratio = row.lhs / row.main;
        rep.grid.push_back(row);
    }
    rep.fitted_decay = detail::fit_decay_slope(rep.grid);
    rep.gap_monotone = rep.grid.size() >= 2;
    for (std::size_t t = 1; t < rep.grid.size(); ++t)
        if (std::abs(rep.grid[t].ratio - 1.0) >= std::abs(rep.grid[t - 1].ratio - 1.0))
            rep.gap_monotone = false;

    {
        double Xp = 50.0;
        u64 M = u64(4 * (ell + 1) * Xp);
        rep.parseval_gap = parseval_check(k, ell, Xp, M, table).rel_gap;
    }
    for (int hr : {2, 3}) {
        HuaCheck hc;
        hc.r = hr;
        hc.j = 2;
        hc.N = 8;
        hc.exact = static_cast<double>(hua_moment_exact(hr, hc.j, hc.N));
        u64 degree = (u64(1) << (hc.j - 1)) * ipow_checked(hc.N, hr);
        hc.quadrature = hua_moment_quadrature(hr, hc.j, hc.N, 2 * degree + 1);
        hc.rel_gap = std::abs(hc.quadrature - hc.exact) / hc.exact;
        rep.hua.push_back(hc);
    }
    return rep;
}

}  // namespace taumix
