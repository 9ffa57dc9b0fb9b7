#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace taumix {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

inline std::string to_string(i128 v) {
    if (v < 0) return "-" + to_string(u128(-v));
    return to_string(u128(v));
}

// Exact conversion where possible; values above 2^64 saturate the caller's
// expectations, so keep a checked narrowing helper.
inline u64 checked_u64(u128 v) {
    if (v > u128(~u64(0))) throw std::overflow_error("value exceeds 64 bits");
    return u64(v);
}

inline u128 checked_mul(u128 a, u128 b) {
    if (a != 0 && b > ~u128(0) / a) throw std::overflow_error("128-bit multiply overflow");
    return a * b;
}

// x^r with overflow detection.
inline u128 ipow_checked(u64 x, int r) {
    u128 acc = 1;
    for (int i = 0; i < r; ++i) acc = checked_mul(acc, x);
    return acc;
}

// Largest n with n^r <= x (exact integer arithmetic).
inline u64 nth_root(u64 x, int r) {
    if (r <= 0) throw std::invalid_argument("nth_root: r must be positive");
    if (r == 1 || x <= 1) return x;
    u64 n = u64(std::pow(double(x), 1.0 / r));
    while (n > 0 && ipow_checked(n, r) > x) --n;
    while (ipow_checked(n + 1, r) <= x) ++n;
    return n;
}

}  // namespace taumix
