#pragma once

#include "genusbound/core.hpp"

namespace genusbound {

/// Exact rational scalar over 128-bit integers, for the internal
/// eliminations (signatures, lattice-point enumeration). Always normalized:
/// positive denominator, coprime parts.
struct Frac {
    __int128 num = 0;
    __int128 den = 1;

    Frac() = default;
    Frac(__int128 n, __int128 d) : num(n), den(d) {
        if (den == 0) throw InternalError("Frac: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    static Frac of(Int n) { return Frac(n, 1); }

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
    Frac operator-(const Frac& o) const { return Frac(num * o.den - o.num * den, den * o.den); }
    Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
    Frac operator/(const Frac& o) const {
        if (o.num == 0) throw InternalError("Frac: division by zero");
        return Frac(num * o.den, den * o.num);
    }
    bool operator<(const Frac& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Frac& o) const { return num * o.den <= o.num * den; }
    bool zero() const { return num == 0; }
    bool negative() const { return num < 0; }
};

}  // namespace genusbound
