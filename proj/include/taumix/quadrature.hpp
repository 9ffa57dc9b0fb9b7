#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace taumix {

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    std::size_t evals = 0;
};

namespace detail {

// 15-point Kronrod extension of 7-point Gauss (nonnegative abscissae).
inline constexpr double gk_x[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0};
inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename F>
inline void gk15(F&& f, double a, double b, std::complex<double>& kron, double& err) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    std::complex<double> fc = f(c);
    std::complex<double> gauss = gk_wg[3] * fc, k = gk_wk[7] * fc;
    for (int i = 0; i < 7; ++i) {
        std::complex<double> s = f(c - h * gk_x[i]) + f(c + h * gk_x[i]);
        k += gk_wk[i] * s;
        if (i % 2 == 1) gauss += gk_wg[i / 2] * s;
    }
    kron = k * h;
    err = std::abs(k - gauss) * std::abs(h);
}

}  // namespace detail

// Adaptive bisection with a per-interval absolute error budget. Never throws:
// the result carries the achieved error estimate and callers decide whether
// it is acceptable.
template <typename F>
QuadResult gk_adaptive(F&& f, double a, double b, double abs_tol,
                       int max_depth = 50, std::size_t max_evals = 4000000) {
    struct Item { double a, b, tol; int depth; };
    QuadResult out;
    if (a == b) return out;
    std::vector<Item> stack{{a, b, abs_tol, 0}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        std::complex<double> v;
        double e;
        detail::gk15(f, it.a, it.b, v, e);
        out.evals += 15;
        // the floor keeps an unreachable tolerance from forcing endless refinement
        double floor_tol = 1e-15 * std::abs(v);
        if (e <= std::max(it.tol, floor_tol) || it.depth >= max_depth || out.evals >= max_evals) {
            out.value += v;
            out.error += e;
            continue;
        }
        double m = 0.5 * (it.a + it.b);
        stack.push_back({it.a, m, 0.5 * it.tol, it.depth + 1});
        stack.push_back({m, it.b, 0.5 * it.tol, it.depth + 1});
    }
    return out;
}

}  // namespace taumix
