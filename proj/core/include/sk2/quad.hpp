#pragma once

#include <vector>

#include "sk2/rational.hpp"

namespace sk2 {

// Half-integral symmetric matrix [[n, r/2], [r/2, m]], i.e. the binary
// quadratic form n x^2 + r xy + m y^2.
struct HalfIntMatrix {
    long n = 0, r = 0, m = 0;

    long det4() const { return 4 * n * m - r * r; }  // 4 det T
    long disc() const { return -det4(); }
    bool is_psd() const { return n >= 0 && m >= 0 && det4() >= 0; }
    bool is_pd() const { return n > 0 && m > 0 && det4() > 0; }
    long content() const;  // gcd(n, r, m); 0 for the zero matrix
    bool operator==(const HalfIntMatrix& o) const {
        return n == o.n && r == o.r && m == o.m;
    }
    bool operator<(const HalfIntMatrix& o) const {  // (det4, n, r) order
        long da = det4(), db = o.det4();
        if (da != db) return da < db;
        if (n != o.n) return n < o.n;
        if (r != o.r) return r < o.r;
        return m < o.m;
    }
};

// Element of GL2(Z), acting on forms by T -> U^T T U.
struct Unimodular {
    long a = 1, b = 0, c = 0, d = 1;
    long det() const { return a * d - b * c; }
    Unimodular mul(const Unimodular& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Unimodular inverse() const;  // valid because det = +-1
};

HalfIntMatrix transform(const HalfIntMatrix& T, const Unimodular& u);

// GL2(Z) reduction of a psd matrix: positive definite -> 0 <= r <= n <= m;
// rank 1 -> (content, 0, 0); zero -> (0,0,0). transform(T, witness) = canon.
struct Reduction {
    HalfIntMatrix canon;
    Unimodular witness;
};
Reduction reduce(const HalfIntMatrix& T);

// disc T = d * L^2 * M^2 with L the content, d fundamental: T is GL2(Z)-
// equivalent to L * diag(M,1) * S_c * diag(M,1) for a fundamental S_c of
// discriminant d; witness satisfies transform(T, witness) = that product.
struct Decomposition {
    long L = 1, M = 1, d = 0;
    HalfIntMatrix s_c;
    Unimodular witness;
};
Decomposition decompose(const HalfIntMatrix& T);

// One reduced primitive form per SL2(Z) class of discriminant d < 0;
// length = class number h(d).
std::vector<HalfIntMatrix> class_representatives(long d);

}  // namespace sk2
