#pragma once

#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "taumix/wideint.hpp"

namespace taumix {

// Exact rational on 64-bit numerator/denominator, canonical form
// (den > 0, gcd = 1). Intermediates use __int128; overflow of the reduced
// result throws rather than wrapping.
struct Rat {
    i64 num = 0;
    i64 den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i64 n, i64 d) { *this = make(n, d); }

    static Rat make(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Rat r;
        r.num = narrow(n);
        r.den = narrow(d);
        return r;
    }

    friend Rat operator+(Rat a, Rat b) {
        return make(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend Rat operator-(Rat a, Rat b) {
        return make(i128(a.num) * b.den - i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend Rat operator*(Rat a, Rat b) { return make(i128(a.num) * b.num, i128(a.den) * b.den); }
    friend Rat operator/(Rat a, Rat b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return make(i128(a.num) * b.den, i128(a.den) * b.num);
    }
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

    friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(Rat a, Rat b) { return !(a == b); }
    friend bool operator<(Rat a, Rat b) { return i128(a.num) * b.den < i128(b.num) * a.den; }
    friend bool operator<=(Rat a, Rat b) { return i128(a.num) * b.den <= i128(b.num) * a.den; }
    friend bool operator>(Rat a, Rat b) { return b < a; }
    friend bool operator>=(Rat a, Rat b) { return b <= a; }

    double to_double() const { return double(num) / double(den); }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
    friend std::ostream& operator<<(std::ostream& os, Rat r) { return os << r.str(); }

  private:
    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }
    static i64 narrow(i128 v) {
        if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
            throw std::overflow_error("rational exceeds 64-bit range after reduction");
        return i64(v);
    }
};

inline Rat rat_min(Rat a, Rat b) { return a <= b ? a : b; }

// 2^e for possibly negative e.
inline Rat rat_pow2(int e) {
    if (e >= 63 || e <= -63) throw std::overflow_error("rational power of two out of range");
    if (e >= 0) return Rat(i64(1) << e);
    return Rat(1, i64(1) << (-e));
}

}  // namespace taumix
