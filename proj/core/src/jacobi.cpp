#include "sk2/jacobi.hpp"

#include <numeric>
#include <stdexcept>

#include "sk2/arith.hpp"
#include "sk2/errors.hpp"

namespace sk2 {

Rat JacobiIndex1Form::coeff_d(long D) const {
    if (D < 0) return Rat(0);
    long res = D % 4;
    if (res == 1 || res == 2) return Rat(0);
    if (D > max_d())
        throw PrecisionError("JacobiIndex1Form: discriminant " + std::to_string(D) +
                             " beyond stored range " + std::to_string(max_d()));
    return C[static_cast<size_t>(D)];
}

JacobiIndex1Form JacobiIndex1Form::add(const JacobiIndex1Form& o) const {
    if (weight != o.weight) throw std::invalid_argument("JacobiIndex1Form::add: weight mismatch");
    JacobiIndex1Form r;
    r.weight = weight;
    r.cusp = cusp && o.cusp;
    r.C.resize(std::min(C.size(), o.C.size()));
    for (size_t i = 0; i < r.C.size(); ++i) r.C[i] = C[i] + o.C[i];
    return r;
}

JacobiIndex1Form JacobiIndex1Form::scale(const Rat& s) const {
    JacobiIndex1Form r = *this;
    for (Rat& x : r.C) x *= s;
    return r;
}

JacobiIndex1Form jacobi_eisenstein(int k, long maxD) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("jacobi_eisenstein: even weight >= 4");
    JacobiIndex1Form e;
    e.weight = k;
    e.C = cohen_table(k - 1, maxD);
    Rat h0 = e.C[0];
    if (h0 == 0) throw InternalError("jacobi_eisenstein: vanishing constant term");
    for (Rat& x : e.C) x /= h0;
    return e;
}

JacobiIndex1Form scalar_jacobi_product(const QSeries& f, int fweight, const JacobiIndex1Form& phi,
                                       long maxD) {
    if (phi.max_d() < maxD)
        throw PrecisionError("scalar_jacobi_product: Jacobi factor stored range too small");
    // evaluating at (n, r) needs f up to n = (D + r^2)/4; the check uses r up
    // to r0 + 2, so r^2 <= 9
    long need = (maxD + 9) / 4;
    if (f.precision() < need)
        throw PrecisionError("scalar_jacobi_product: q-series precision too small");
    auto grid = [&](long n, long r) {
        Rat s(0);
        for (long j = 0; j <= n; ++j) {
            if (f[j] == 0) continue;
            s += f[j] * phi.coeff_d(4 * (n - j) - r * r);
        }
        return s;
    };
    JacobiIndex1Form out;
    out.weight = fweight + phi.weight;
    out.cusp = phi.cusp && f[0] == 0;
    out.C.assign(static_cast<size_t>(maxD) + 1, Rat(0));
    for (long D = 0; D <= maxD; ++D) {
        long res = D % 4;
        if (res == 1 || res == 2) continue;
        long r0 = (res == 0) ? 0 : 1;
        Rat v = grid((D + r0 * r0) / 4, r0);
        long r1 = r0 + 2;
        Rat w = grid((D + r1 * r1) / 4, r1);
        if (v != w)
            throw InternalError("scalar_jacobi_product: coefficient depends on (n, r) beyond 4n - r^2");
        out.C[static_cast<size_t>(D)] = v;
    }
    return out;
}

JacobiIndex1Form cusp_form_10_12(int weight, long maxD) {
    if (weight != 10 && weight != 12)
        throw std::invalid_argument("cusp_form_10_12: weight must be 10 or 12");
    long prec = (maxD + 9) / 4;
    QSeries e4 = eisenstein(4, prec);
    QSeries e6 = eisenstein(6, prec);
    JacobiIndex1Form e41 = jacobi_eisenstein(4, maxD);
    JacobiIndex1Form e61 = jacobi_eisenstein(6, maxD);
    JacobiIndex1Form lhs, rhs;
    if (weight == 10) {
        lhs = scalar_jacobi_product(e6, 6, e41, maxD);
        rhs = scalar_jacobi_product(e4, 4, e61, maxD);
    } else {
        QSeries e8 = e4.mul(e4, prec);
        lhs = scalar_jacobi_product(e8, 8, e41, maxD);
        rhs = scalar_jacobi_product(e6, 6, e61, maxD);
    }
    JacobiIndex1Form phi = lhs.add(rhs.scale(Rat(-1))).scale(Rat(1, 144));
    if (phi.C[0] != 0) throw InternalError("cusp_form_10_12: nonzero constant term");
    phi.cusp = true;
    return phi;
}

Rat fj_norm_ratio(const EllipticEigenform& f, int k, long N, long m) {
    if (f.weight != 2 * k - 2)
        throw std::invalid_argument("fj_norm_ratio: eigenform weight must be 2k - 2");
    if (N < 1 || m < 1) throw std::invalid_argument("fj_norm_ratio: N, m must be positive");
    Rat total(0);
    for (long d : divisors(m)) {
        if (std::gcd(d, N) != 1) continue;
        Rat alpha(d);
        for (const auto& [p, e] : factorize(d)) {
            (void)e;
            alpha *= Rat(p + 1, p);
        }
        total += alpha * Rat(pow_int(d, k - 2)) * Rat(f.coeff(m / d));
    }
    return total;
}

}  // namespace sk2
