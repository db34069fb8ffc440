#include "sk2/quad.hpp"

#include <algorithm>
#include <numeric>

#include "sk2/arith.hpp"

namespace sk2 {

long HalfIntMatrix::content() const {
    long g = std::gcd(std::gcd(std::abs(n), std::abs(r)), std::abs(m));
    return g;
}

Unimodular Unimodular::inverse() const {
    long dt = det();
    if (dt != 1 && dt != -1) throw InternalError("Unimodular: det not +-1");
    return {d * dt, -b * dt, -c * dt, a * dt};
}

HalfIntMatrix transform(const HalfIntMatrix& T, const Unimodular& u) {
    // U^T [[n, r/2],[r/2, m]] U for U = [[a, b],[c, d]]
    return {T.n * u.a * u.a + T.r * u.a * u.c + T.m * u.c * u.c,
            2 * T.n * u.a * u.b + T.r * (u.a * u.d + u.b * u.c) + 2 * T.m * u.c * u.d,
            T.n * u.b * u.b + T.r * u.b * u.d + T.m * u.d * u.d};
}

namespace {
const Unimodular kSwap{0, 1, 1, 0};        // exchanges n and m (det -1)
const Unimodular kFlip{-1, 0, 0, 1};       // negates r (det -1)
Unimodular shear(long t) { return {1, t, 0, 1}; }  // r -> r + 2nt

// g = gcd(a, b) with s*a + t*b = g
long egcd(long a, long b, long& s, long& t) {
    if (b == 0) {
        s = (a < 0) ? -1 : 1;
        t = 0;
        return std::abs(a);
    }
    long s1 = 0, t1 = 0;
    long g = egcd(b, a % b, s1, t1);
    s = t1;
    t = s1 - (a / b) * t1;
    return g;
}
}  // namespace

Reduction reduce(const HalfIntMatrix& T0) {
    if (!T0.is_psd()) throw std::invalid_argument("reduce: matrix not psd");
    HalfIntMatrix T = T0;
    Unimodular U;
    auto step = [&](const Unimodular& u) {
        T = transform(T, u);
        U = U.mul(u);
    };
    auto translate = [&]() {  // bring r into (-n, n], n > 0
        long t = (T.n - T.r) / (2 * T.n);
        while (T.r + 2 * T.n * t > T.n) --t;
        while (T.r + 2 * T.n * t <= -T.n) ++t;
        if (t != 0) step(shear(t));
    };
    if (T.det4() == 0) {
        // rank <= 1: bring to (content, 0, 0). If a diagonal entry is 0 the
        // off-diagonal is too (det4 = -r^2 there), so swaps/translations
        // shrink m to 0 exactly as in the definite case.
        if (T.n == 0 && T.m == 0) return {T, U};  // r = 0 forced by psd
        if (T.n == 0) step(kSwap);
        for (;;) {
            if (T.m != 0 && T.n > T.m) {
                step(kSwap);
                continue;
            }
            if (T.m == 0) {
                if (T.r != 0) throw InternalError("reduce: rank-1 with m=0, r!=0");
                break;
            }
            if (T.r > T.n || T.r <= -T.n) {
                translate();  // det4 = 0 forces new m = r'^2/(4n) < n: shrinks
                continue;
            }
            // |r| <= n <= m with r^2 = 4nm is impossible for n > 0
            throw InternalError("reduce: rank-1 invariant violated");
        }
        return {T, U};
    }
    // positive definite Gaussian reduction
    for (;;) {
        if (T.n > T.m) {
            step(kSwap);
            continue;
        }
        if (T.r > T.n || T.r <= -T.n) {
            translate();
            continue;
        }
        if (T.r < 0) {
            step(kFlip);
            continue;
        }
        break;
    }
    if (!(0 <= T.r && T.r <= T.n && T.n <= T.m)) throw InternalError("reduce: not canonical");
    return {T, U};
}

std::vector<HalfIntMatrix> class_representatives(long d) {
    if (d >= 0 || (((d % 4) + 4) % 4) > 1)
        throw std::invalid_argument("class_representatives: need d < 0, d = 0,1 mod 4");
    long N = -d;
    std::vector<HalfIntMatrix> reps;
    for (long b = N & 1L; b * b * 3 <= N; b += 2) {
        if ((b * b + N) % 4 != 0) continue;
        long ac = (b * b + N) / 4;
        for (long a = std::max(b, 1L); a * a <= ac; ++a) {
            if (ac % a != 0) continue;
            long c = ac / a;
            if (std::gcd(a, std::gcd(b, c)) != 1) continue;
            reps.push_back({a, b, c});
            if (0 < b && b < a && a < c) reps.push_back({a, -b, c});
        }
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

Decomposition decompose(const HalfIntMatrix& T) {
    if (!T.is_pd()) throw std::invalid_argument("decompose: need positive definite");
    Decomposition out;
    out.L = T.content();
    HalfIntMatrix T1{T.n / out.L, T.r / out.L, T.m / out.L};
    auto [d, M] = factor_discriminant(T1.disc());
    out.d = d;
    out.M = M;
    Reduction r1 = reduce(T1);
    auto finish = [&](const HalfIntMatrix& sc, const Unimodular& witness) {
        out.s_c = sc;
        out.witness = witness;
        HalfIntMatrix W{sc.n * M * M, sc.r * M, sc.m};
        HalfIntMatrix chk = transform(T, witness);
        if (sc.disc() != d || !(chk == HalfIntMatrix{W.n * out.L, W.r * out.L, W.m * out.L}))
            throw InternalError("decompose: witness verification failed");
        return out;
    };
    // fast path: a reduced fundamental S_c with T1 ~ diag(M,1) S_c diag(M,1)
    for (const HalfIntMatrix& sc : class_representatives(d)) {
        HalfIntMatrix W{sc.n * M * M, sc.r * M, sc.m};
        Reduction rw = reduce(W);
        if (!(rw.canon == r1.canon)) continue;
        // transform(T1, u1) = canon = transform(W, uw)  =>
        // transform(T1, u1 * uw^{-1}) = W; content scales by L unaffected
        return finish(sc, r1.witness.mul(rw.witness.inverse()));
    }
    // general case: the conjugated class of S_c need not reduce to T1's
    // class. A primitive vector v with T1(v) = 0 mod M^2, completed to a
    // unimodular U with v as first column, gives U^t T1 U = (M^2 a, M b, c):
    // M^2 | a' forces M | b' because b'^2 = M^2 d + 4 a' c'.
    const long M2 = M * M;
    auto eval = [&](long x, long y) {
        return T1.n * x * x + T1.r * x * y + T1.m * y * y;
    };
    auto complete = [&](long x, long y) {
        // det [[x, -t],[y, s]] = xs + ty = gcd(x, y) = 1
        long s = 0, t = 0, g = egcd(x, y, s, t);
        (void)g;
        Unimodular U{x, -t, y, s};
        HalfIntMatrix Q = transform(T1, U);
        return finish(HalfIntMatrix{Q.n / M2, Q.r / M, Q.m}, U);
    };
    for (long x0 = 0; x0 < M2; ++x0)
        for (long y0 = 0; y0 < M2; ++y0) {
            if (std::gcd(std::gcd(x0, y0), M2) != 1) continue;
            if (((eval(x0, y0) % M2) + M2) % M2 != 0) continue;
            // lift to a globally coprime pair within the same residue class
            for (long t = 0; t <= M2; ++t) {
                if (std::gcd(x0 + M2 * t, y0) == 1) return complete(x0 + M2 * t, y0);
                if (std::gcd(x0, y0 + M2 * t) == 1) return complete(x0, y0 + M2 * t);
            }
        }
    throw InternalError("decompose: no fundamental representative matched");
}

}  // namespace sk2
