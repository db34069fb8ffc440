#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>

#include "sk2/errors.hpp"

namespace sk2 {

using Int = mpz_class;
using Rat = mpq_class;

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow_int(long base, unsigned long e) { return pow_int(Int(base), e); }

// Exact rational from numerator/denominator (canonicalized).
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline long isqrt_floor(long n) {
    if (n < 0) throw std::invalid_argument("isqrt_floor: negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), Int(n).get_mpz_t());
    return r.get_si();
}

// Value x + y*sqrt(p) with x, y rational, p a fixed prime. Exact signs.
struct HalfPow {
    long p = 0;
    Rat x, y;

    HalfPow() = default;
    HalfPow(long p_, Rat x_, Rat y_) : p(p_), x(std::move(x_)), y(std::move(y_)) {}

    HalfPow& operator+=(const HalfPow& o) {
        if (p == 0) p = o.p;
        if (o.p != 0 && o.p != p && !(o.x == 0 && o.y == 0))
            throw InternalError("HalfPow: mixing sqrt(p) for different p");
        x += o.x;
        y += o.y;
        return *this;
    }
    HalfPow operator*(const Rat& c) const { return {p, x * c, y * c}; }

    // Exact sign of x + y*sqrt(p).
    int sign() const {
        int sx = sgn(x), sy = sgn(y);
        if (sy == 0) return sx;
        if (sx == 0) return sy;
        if (sx == sy) return sx;
        // opposite signs: compare x^2 vs y^2 * p
        Rat xs = x * x, ys = y * y * p;
        if (xs == ys) return 0;
        return (xs > ys) ? sx : sy;
    }
    double to_double() const {
        return x.get_d() + y.get_d() * std::sqrt(static_cast<double>(p));
    }
    bool is_zero() const { return x == 0 && y == 0; }
};

inline HalfPow operator+(HalfPow a, const HalfPow& b) { return a += b; }

// Value a + b*sqrt(core) in a fixed real quadratic field; core > 1 squarefree.
struct QuadExt {
    Rat a, b;
    Int core = 1;

    QuadExt() = default;
    QuadExt(Rat a_, Rat b_, Int core_) : a(std::move(a_)), b(std::move(b_)), core(std::move(core_)) {}

    static void require_same(const QuadExt& u, const QuadExt& v) {
        if (u.core != v.core && !(u.b == 0 || v.b == 0))
            throw InternalError("QuadExt: mixed field cores");
    }
    QuadExt operator+(const QuadExt& o) const {
        require_same(*this, o);
        return {a + o.a, b + o.b, b == 0 ? o.core : core};
    }
    QuadExt operator-(const QuadExt& o) const {
        require_same(*this, o);
        return {a - o.a, b - o.b, b == 0 ? o.core : core};
    }
    QuadExt operator*(const QuadExt& o) const {
        require_same(*this, o);
        const Int& c = (b == 0) ? o.core : core;
        return {a * o.a + b * o.b * Rat(c), a * o.b + b * o.a, c};
    }
    QuadExt conj() const { return {a, -b, core}; }
    bool operator==(const QuadExt& o) const { return a == o.a && b == o.b; }
    double to_double() const {
        return a.get_d() + b.get_d() * std::sqrt(core.get_d());
    }
};

}  // namespace sk2
