#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace qub {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long n = e > 0 ? e : -e;
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline Int factorial(long n) {
    Int r(1);
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return Int(0);
    Int r(1);
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// Floored modulus; result in [0, m).
inline long mod_floor(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline long floor_div(long a, long m) { return (a - mod_floor(a, m)) / m; }

// mpq_class(num, den) does not canonicalize on its own.
inline Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace qub
