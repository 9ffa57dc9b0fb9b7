#pragma once

#include <string>
#include <vector>

#include "taumix/rational.hpp"

namespace taumix {

enum class PowerRegime { SmallSmall, SmallLarge, LargeSmall, LargeLarge };
enum class EllClass { Small, Large };

inline const char* regime_name(PowerRegime g) {
    switch (g) {
        case PowerRegime::SmallSmall: return "r<=7,s<=7";
        case PowerRegime::SmallLarge: return "r<=7,s>=8";
        case PowerRegime::LargeSmall: return "r>=8,s<=7";
        default: return "r>=8,s>=8";
    }
}

inline const char* ell_class_name(EllClass c) {
    return c == EllClass::Small ? "small-ell" : "large-ell";
}

struct ThetaCandidate {
    std::string label;
    Rat value;
};

struct DeltaReport {
    int k = 0, r = 0, s = 0, ell = 0;
    PowerRegime regime{};
    EllClass ell_class{};
    bool low_ratio_pair = false;  ///< (r,ell) = (2,2) or (3,4): ell/r < 3/2
    Rat theta_candidate;
    Rat theta_cap;   ///< 1/(k+r)
    Rat theta_used;
    Rat slope;       ///< minor-arc saving per unit theta
    Rat delta;
    std::string active_constraint;  ///< "slope*theta", "1/r", or "1/s"
};

namespace detail {

inline i128 p2i(int e) { return i128(1) << e; }

inline void check_delta_domain(int k, int r, int s, i64 ell) {
    if (r < 2 || r > 30 || s < 2 || s > 30) throw std::invalid_argument("exponent analysis: need 2 <= r, s <= 30");
    if (k < 4 || k > 1000000) throw std::invalid_argument("exponent analysis: need 4 <= k <= 1e6");
    if (ell < (i64(1) << (r - 1)) || ell > (i64(1) << 40))
        throw std::invalid_argument("exponent analysis: need ell >= 2^{r-1}");
}

// shared numerator of the small-ell candidates; positive iff k is admissible
inline i128 small_ell_numerator(int k, int r, int s, i64 ell) {
    return i128(k + 2) * (p2i(r) + i128(ell) * (s - 1)) - p2i(r) * i128(k - 1) * s;
}

}  // namespace detail

// Every closed-form theta in the case analysis, labeled a..i. Values may be
// nonpositive when k is inadmissible; callers decide what to do with them.
inline std::vector<ThetaCandidate> theta_candidates(int k, int r, int s, i64 ell) {
    detail::check_delta_domain(k, r, s, ell);
    using detail::p2i;
    i128 N = detail::small_ell_numerator(k, r, s, ell);
    i128 rr = i128(r) * (r - 1), ss = i128(s) * (s - 1);
    i128 shift = i128(ell) - p2i(r - 1) + 2 * rr;
    std::vector<ThetaCandidate> v;
    v.push_back({"a", Rat::make(N * p2i(s), i128(2) * s * (k + 2) * (i128(ell) * p2i(s) + p2i(r)))});
    v.push_back({"b", Rat::make((s - 1) * N, i128(k + 2) * (2 * ss * ell + p2i(r - 1)))});
    v.push_back({"c", Rat::make(rr * N * p2i(s),
                                i128(s) * (k + 2) * (p2i(r + 1) * rr + p2i(r - 1) * p2i(s) * shift))});
    v.push_back({"d", Rat::make(2 * rr * (s - 1) * N,
                                p2i(r) * i128(k + 2) * (rr + ss * shift))});
    v.push_back({"e", Rat::make(3 * p2i(r - 1) * p2i(s), i128(k + 2) * (i128(ell) * p2i(s) + p2i(r)))});
    v.push_back({"f", Rat::make(3 * p2i(r) * ss, i128(k + 2) * (2 * ss * ell + p2i(r - 1)))});
    v.push_back({"g", Rat::make(3 * p2i(s) * rr, i128(k + 2) * (2 * rr + p2i(s - 1) * shift))});
    v.push_back({"h", Rat::make(6 * rr * ss, i128(k + 2) * (rr + ss * shift))});
    v.push_back({"i", Rat(1, k + r)});
    return v;
}

inline DeltaReport delta_report(int k, int r, int s, i64 ell) {
    detail::check_delta_domain(k, r, s, ell);
    using detail::p2i;
    DeltaReport rep;
    rep.k = k;
    rep.r = r;
    rep.s = s;
    rep.ell = int(ell);
    bool r_small = r <= 7, s_small = s <= 7;
    rep.regime = r_small ? (s_small ? PowerRegime::SmallSmall : PowerRegime::SmallLarge)
                         : (s_small ? PowerRegime::LargeSmall : PowerRegime::LargeLarge);
    bool large_class = ell >= (i64(1) << r) || (ell == (i64(1) << r) - 1 && r == s);
    rep.ell_class = large_class ? EllClass::Large : EllClass::Small;
    rep.low_ratio_pair = !large_class && ((r == 2 && ell == 2) || (r == 3 && ell == 4));
    if (!large_class && detail::small_ell_numerator(k, r, s, ell) <= 0) {
        // k < 3 s 2^r / ((s-1)(2^r - ell)) - 2 is required in the small-ell class
        Rat bound = Rat::make(i128(3) * s * p2i(r), i128(s - 1) * (p2i(r) - ell)) - Rat(2);
        throw std::domain_error("exponent analysis: k = " + std::to_string(k) +
                                " is inadmissible here (requires k < " + bound.str() + ")");
    }

    auto cands = theta_candidates(k, r, s, ell);
    auto cand = [&](const char* label) {
        for (const auto& c : cands)
            if (c.label == label) return c.value;
        throw std::logic_error("theta candidate lookup");
    };
    Rat half_pow_s = rat_pow2(1 - s);          // 1/2^{s-1}
    Rat half_pow_r = rat_pow2(1 - r);          // 1/2^{r-1}
    Rat inv_2ss = Rat::make(1, i128(2) * s * (s - 1));
    Rat inv_2rr = Rat::make(1, i128(2) * r * (r - 1));
    Rat ell_r = Rat(i64(ell)) * half_pow_r;    // ell / 2^{r-1}
    Rat ell_shift = Rat(i64(ell - (i64(1) << (r - 1))));

    switch (rep.regime) {
        case PowerRegime::SmallSmall:
            rep.theta_candidate = large_class ? cand("e") : cand("a");
            rep.slope = rep.low_ratio_pair ? half_pow_s : ell_r + half_pow_s - Rat(1);
            break;
        case PowerRegime::SmallLarge:
            rep.theta_candidate = large_class ? cand("f") : cand("b");
            rep.slope = rep.low_ratio_pair ? inv_2ss : ell_r + inv_2ss - Rat(1);
            break;
        case PowerRegime::LargeSmall:
            rep.theta_candidate = large_class ? cand("g") : cand("c");
            rep.slope = ell_shift * inv_2rr + half_pow_s;
            break;
        case PowerRegime::LargeLarge:
            rep.theta_candidate = large_class ? cand("h") : cand("d");
            rep.slope = ell_shift * inv_2rr + inv_2ss;
            break;
    }
    rep.theta_cap = cand("i");
    rep.theta_used = rat_min(rep.theta_candidate, rep.theta_cap);
    Rat core = rep.slope * rep.theta_used;
    if (rep.low_ratio_pair) {
        rep.delta = core;
        rep.active_constraint = "slope*theta";
    } else {
        Rat inv_r(1, r), inv_s(1, s);
        rep.delta = rat_min(core, rat_min(inv_r, inv_s));
        rep.active_constraint = rep.delta == core ? "slope*theta" : (rep.delta == inv_r ? "1/r" : "1/s");
    }
    return rep;
}

}  // namespace taumix
