#pragma once

#include <algorithm>
#include <cstring>
#include <functional>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "taumix/errors.hpp"
#include "taumix/parallel.hpp"
#include "taumix/wideint.hpp"

namespace taumix {

struct SieveConfig {
    std::size_t segment_size = std::size_t(1) << 20;
    std::size_t budget_mb = 2048;   ///< cap on any single materialized table
    int threads = 0;                ///< 0 = hardware concurrency
};

namespace detail {

// tau_k(p^e) = C(e+k-1, k-1), exact; the u64 table covers every exponent
// that can occur below 2^63, entries that would overflow are flagged.
struct PrimePowerTable {
    std::vector<u64> value;
    std::vector<char> overflow;
    explicit PrimePowerTable(int k) : value(64, 0), overflow(64, 0) {
        value[0] = 1;
        for (int e = 1; e < 64; ++e) {
            if (overflow[e - 1]) { overflow[e] = 1; continue; }
            u128 v = u128(value[e - 1]) * u128(e + k - 1) / u128(e);
            if (v > u128(~u64(0))) overflow[e] = 1;
            else value[e] = u64(v);
        }
    }
    u64 at(int e) const {
        if (overflow[e]) throw std::overflow_error("tau_k prime-power factor exceeds 64 bits");
        return value[e];
    }
};

inline std::vector<u64> primes_up_to(u64 n) {
    std::vector<char> comp(n + 1, 0);
    std::vector<u64> ps;
    for (u64 i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        ps.push_back(i);
        for (u64 j = i * i; j <= n; j += i) comp[j] = 1;
    }
    return ps;
}

// Fills out[i] = tau_k(lo + i) for the whole window using the prime list
// (which must reach sqrt(hi)).
inline void sieve_window(int k, u64 lo, u64 hi, const std::vector<u64>& primes,
                         const PrimePowerTable& pp, u64* out) {
    std::size_t n = std::size_t(hi - lo + 1);
    std::vector<u64> rem(n);
    for (std::size_t i = 0; i < n; ++i) { rem[i] = lo + i; out[i] = 1; }
    for (u64 p : primes) {
        if (p * p > hi) break;
        for (u64 m = (lo + p - 1) / p * p; m <= hi; m += p) {
            std::size_t i = std::size_t(m - lo);
            int e = 0;
            while (rem[i] % p == 0) { rem[i] /= p; ++e; }
            u128 v = u128(out[i]) * pp.at(e);
            if (v > u128(~u64(0))) throw std::overflow_error("tau_k value exceeds 64 bits");
            out[i] = u64(v);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (rem[i] > 1) {
            u128 v = u128(out[i]) * u128(k);
            if (v > u128(~u64(0))) throw std::overflow_error("tau_k value exceeds 64 bits");
            out[i] = u64(v);
        }
    }
}

}  // namespace detail

// Exact tau_k(n) by trial division; intended for spot checks and small n.
inline u128 tau_k_point(int k, u64 n) {
    if (k < 1) throw std::invalid_argument("tau_k: k must be >= 1");
    if (n < 1) throw std::invalid_argument("tau_k: n must be >= 1");
    detail::PrimePowerTable pp(k);
    u128 acc = 1;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        acc = checked_mul(acc, pp.at(e));
    }
    if (n > 1) acc = checked_mul(acc, u128(k));
    return acc;
}

struct DivisorTable {
    int k = 0;
    u64 lo = 0, hi = 0;
    std::vector<u64> values;  ///< values[n - lo] = tau_k(n)
    u128 sum1 = 0;            ///< sum of values
    u128 sum2 = 0;            ///< sum of squared values

    u64 at(u64 n) const {
        if (n < lo || n > hi) throw std::out_of_range("divisor table index out of range");
        return values[std::size_t(n - lo)];
    }
};

inline DivisorTable sieve_tau_k(int k, u64 lo, u64 hi, const SieveConfig& cfg = {}) {
    if (k < 1 || lo < 1 || hi < lo) throw std::invalid_argument("sieve_tau_k: need k >= 1, 1 <= lo <= hi");
    u64 count = hi - lo + 1;
    if (u128(count) * 8 > u128(cfg.budget_mb) << 20)
        throw resource_limit_error("divisor table of " + std::to_string(count) +
                                   " entries exceeds budget of " + std::to_string(cfg.budget_mb) + " MB");
    DivisorTable t;
    t.k = k;
    t.lo = lo;
    t.hi = hi;
    t.values.resize(std::size_t(count));
    auto primes = detail::primes_up_to(nth_root(hi, 2) + 1);
    detail::PrimePowerTable pp(k);

    std::size_t nseg = std::size_t((count + cfg.segment_size - 1) / cfg.segment_size);
    parallel_chunks(nseg, cfg.threads, [&](std::size_t, std::size_t segb, std::size_t sege) {
        for (std::size_t s = segb; s < sege; ++s) {
            u64 slo = lo + u64(s) * cfg.segment_size;
            u64 shi = std::min(hi, slo + cfg.segment_size - 1);
            detail::sieve_window(k, slo, shi, primes, pp, t.values.data() + (slo - lo));
        }
    });
    for (u64 v : t.values) {
        t.sum1 += v;
        t.sum2 += u128(v) * v;
    }
    return t;
}

// Streams tau_k over [lo, hi] in ascending segments without materializing the
// whole table: fn(seg_lo, values) is called once per segment, in order.
inline void for_each_tau_segment(int k, u64 lo, u64 hi, const SieveConfig& cfg,
                                 const std::function<void(u64, const std::vector<u64>&)>& fn) {
    if (k < 1 || lo < 1 || hi < lo) throw std::invalid_argument("tau segments: need k >= 1, 1 <= lo <= hi");
    auto primes = detail::primes_up_to(nth_root(hi, 2) + 1);
    detail::PrimePowerTable pp(k);
    std::vector<u64> buf;
    for (u64 slo = lo; slo <= hi; ) {
        u64 shi = std::min(hi, slo + cfg.segment_size - 1);
        buf.assign(std::size_t(shi - slo + 1), 0);
        detail::sieve_window(k, slo, shi, primes, pp, buf.data());
        fn(slo, buf);
        if (shi == hi) break;
        slo = shi + 1;
    }
}

inline u128 partial_sum_tau(int k, u64 X, const SieveConfig& cfg = {}) {
    u128 acc = 0;
    for_each_tau_segment(k, 1, X, cfg, [&](u64, const std::vector<u64>& v) {
        for (u64 x : v) acc += x;
    });
    return acc;
}

inline u128 square_moment_tau(int k, u64 X, const SieveConfig& cfg = {}) {
    u128 acc = 0;
    for_each_tau_segment(k, 1, X, cfg, [&](u64, const std::vector<u64>& v) {
        for (u64 x : v) acc += u128(x) * x;
    });
    return acc;
}

namespace detail {

inline void put_u64_le(std::ostream& os, u64 v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = (unsigned char)(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 8);
}

inline u64 get_u64_le(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    if (!is) throw std::runtime_error("divisor table stream truncated");
    u64 v = 0;
    for (int i = 0; i < 8; ++i) v |= u64(b[i]) << (8 * i);
    return v;
}

}  // namespace detail

// Binary dump: little-endian u64 header (k, lo, hi) then one u64 per entry.
inline void write_table(const DivisorTable& t, std::ostream& os) {
    detail::put_u64_le(os, u64(t.k));
    detail::put_u64_le(os, t.lo);
    detail::put_u64_le(os, t.hi);
    for (u64 v : t.values) detail::put_u64_le(os, v);
    if (!os) throw std::runtime_error("divisor table write failed");
}

inline DivisorTable read_table(std::istream& is) {
    DivisorTable t;
    t.k = int(detail::get_u64_le(is));
    t.lo = detail::get_u64_le(is);
    t.hi = detail::get_u64_le(is);
    if (t.k < 1 || t.lo < 1 || t.hi < t.lo) throw std::runtime_error("divisor table header invalid");
    t.values.resize(std::size_t(t.hi - t.lo + 1));
    for (auto& v : t.values) {
        v = detail::get_u64_le(is);
        t.sum1 += v;
        t.sum2 += u128(v) * v;
    }
    return t;
}

}  // namespace taumix
