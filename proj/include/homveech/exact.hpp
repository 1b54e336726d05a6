#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "homveech/errors.hpp"

// Overflow-checked 64-bit integer arithmetic. Every arithmetic path in the
// library goes through these helpers; a wraparound aborts the computation
// with OverflowError instead of producing a silently wrong value.
namespace homveech::exact {

using Int = std::int64_t;

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline Int neg(Int a) {
    return sub(0, a);
}

inline Int abs(Int a) {
    return a < 0 ? neg(a) : a;
}

// Least non-negative residue, n >= 1.
inline Int mod_floor(Int a, Int n) {
    Int r = a % n;
    return r < 0 ? r + n : r;
}

// Exact division; throws if y does not divide x.
inline Int div_exact(Int x, Int y, const char* context = "exact division") {
    if (y == 0 || x % y != 0) throw Error(std::string(context) + ": inexact division");
    return x / y;
}

struct ExtGcd {
    Int g;  // gcd >= 0
    Int x;  // g == x*a + y*b
    Int y;
};

inline ExtGcd ext_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = sub(old_r, mul(q, r));
        old_r = r;
        r = tmp;
        tmp = sub(old_s, mul(q, s));
        old_s = s;
        s = tmp;
        tmp = sub(old_t, mul(q, t));
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = neg(old_r);
        old_s = neg(old_s);
        old_t = neg(old_t);
    }
    return {old_r, old_s, old_t};
}

inline Int gcd(Int a, Int b) {
    return std::gcd(a, b);
}

inline Int pow(Int base, Int e) {
    Int r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return r;
}

inline bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline bool is_squarefree(Int n) {
    if (n <= 0) return false;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

// Prime factorization of n >= 1 by trial division, ascending primes.
inline std::vector<std::pair<Int, int>> factorize(Int n) {
    std::vector<std::pair<Int, int>> out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<Int> primes_up_to(Int bound) {
    std::vector<Int> out;
    for (Int p = 2; p <= bound; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

// Reduced fraction with positive denominator.
struct Rational {
    Int num = 0;
    Int den = 1;

    static Rational of(Int n, Int d) {
        if (d == 0) throw Error("rational with zero denominator");
        if (d < 0) {
            n = neg(n);
            d = neg(d);
        }
        Int g = std::gcd(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        return Rational{n, d};
    }

    bool is_integer() const { return den == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return of(add(mul(a.num, b.den), mul(b.num, a.den)), mul(a.den, b.den));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return of(mul(a.num, b.num), mul(a.den, b.den));
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

}  // namespace homveech::exact
