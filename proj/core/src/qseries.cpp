#include "sk2/qseries.hpp"

#include <algorithm>

#include "sk2/arith.hpp"

namespace sk2 {

bool QSeries::is_integral() const {
    for (const Rat& x : c_)
        if (x.get_den() != 1) return false;
    return true;
}

namespace {

// c[n] += sum_{i+j=n} a[i] b[j] for n <= trunc, all-integer operands.
std::vector<Int> convolve_int(const std::vector<Int>& a, const std::vector<Int>& b, long trunc) {
    std::vector<Int> c(static_cast<size_t>(trunc) + 1);
    if (&a == &b) {
        // symmetric: c[n] = 2 sum_{i < n/2} a_i a_{n-i} + [n even] a_{n/2}^2
        for (long i = 0; i <= trunc; ++i) {
            if (a[static_cast<size_t>(i)] == 0) continue;
            long jmax = std::min<long>(trunc - i, static_cast<long>(a.size()) - 1);
            for (long j = i + 1; j <= jmax; ++j)
                mpz_addmul(c[static_cast<size_t>(i + j)].get_mpz_t(),
                           a[static_cast<size_t>(i)].get_mpz_t(),
                           a[static_cast<size_t>(j)].get_mpz_t());
        }
        for (auto& x : c) x *= 2;
        for (long i = 0; 2 * i <= trunc; ++i)
            mpz_addmul(c[static_cast<size_t>(2 * i)].get_mpz_t(),
                       a[static_cast<size_t>(i)].get_mpz_t(),
                       a[static_cast<size_t>(i)].get_mpz_t());
    } else {
        for (long i = 0; i <= trunc; ++i) {
            if (a[static_cast<size_t>(i)] == 0) continue;
            for (long j = 0; j <= trunc - i; ++j)
                mpz_addmul(c[static_cast<size_t>(i + j)].get_mpz_t(),
                           a[static_cast<size_t>(i)].get_mpz_t(),
                           b[static_cast<size_t>(j)].get_mpz_t());
        }
    }
    return c;
}

}  // namespace

QSeries QSeries::mul(const QSeries& o, long trunc) const {
    if (trunc > precision() || trunc > o.precision())
        throw PrecisionError("QSeries::mul: truncation beyond factor precision");
    QSeries r(trunc);
    if (is_integral() && o.is_integral()) {
        std::vector<Int> a(static_cast<size_t>(trunc) + 1), b;
        for (long i = 0; i <= trunc; ++i) a[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)].get_num();
        std::vector<Int> prod;
        if (this == &o) {
            prod = convolve_int(a, a, trunc);
        } else {
            b.resize(static_cast<size_t>(trunc) + 1);
            for (long i = 0; i <= trunc; ++i) b[static_cast<size_t>(i)] = o.c_[static_cast<size_t>(i)].get_num();
            prod = convolve_int(a, b, trunc);
        }
        for (long n = 0; n <= trunc; ++n) r.at(n) = Rat(prod[static_cast<size_t>(n)]);
    } else {
        for (long i = 0; i <= trunc; ++i) {
            if (c_[static_cast<size_t>(i)] == 0) continue;
            for (long j = 0; j <= trunc - i; ++j)
                r.at(i + j) += c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
        }
    }
    return r;
}

QSeries QSeries::add(const QSeries& o) const {
    QSeries r(std::min(precision(), o.precision()));
    for (long n = 0; n <= r.precision(); ++n) r.at(n) = (*this)[n] + o[n];
    return r;
}

QSeries QSeries::scale(const Rat& s) const {
    QSeries r(precision());
    for (long n = 0; n <= precision(); ++n) r.at(n) = c_[static_cast<size_t>(n)] * s;
    return r;
}

QSeries eisenstein(int k, long precision) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("eisenstein: even weight >= 4 required");
    Rat factor = Rat(-2 * k) / bernoulli(k);
    QSeries e(precision);
    e.at(0) = 1;
    std::vector<Int> sig(static_cast<size_t>(precision) + 1);
    for (long d = 1; d <= precision; ++d) {
        Int dp = pow_int(d, k - 1);
        for (long n = d; n <= precision; n += d) sig[static_cast<size_t>(n)] += dp;
    }
    for (long n = 1; n <= precision; ++n) e.at(n) = factor * Rat(sig[static_cast<size_t>(n)]);
    return e;
}

QSeries delta(long precision) {
    QSeries d(precision);
    if (precision == 0) return d;
    long p = precision - 1;  // eighth power needed to p, then shifted by q
    QSeries j(p);
    for (long t = 0;; ++t) {
        long e = t * (t + 1) / 2;
        if (e > p) break;
        j.at(e) = (t % 2 == 0) ? (2 * t + 1) : -(2 * t + 1);
    }
    QSeries j2 = j.mul(j, p);
    QSeries j4 = j2.mul(j2, p);
    QSeries j8 = j4.mul(j4, p);
    for (long n = 0; n <= p; ++n) d.at(n + 1) = j8[n];
    return d;
}

double EllipticEigenform::normalized(long p) const {
    return coeff(p).get_d() / std::pow(static_cast<double>(p), (weight - 1) / 2.0);
}

namespace {

std::vector<Int> to_int_coeffs(const QSeries& s, const char* what) {
    std::vector<Int> a(static_cast<size_t>(s.precision()) + 1);
    for (long n = 0; n <= s.precision(); ++n) {
        const Rat& c = s[n];
        if (c.get_den() != 1) throw InternalError(std::string(what) + ": non-integral coefficient");
        a[static_cast<size_t>(n)] = c.get_num();
    }
    return a;
}

}  // namespace

EllipticEigenform newform_onedim(int k, long precision) {
    QSeries d = delta(precision);
    QSeries e4 = eisenstein(4, precision);
    QSeries e6 = eisenstein(6, precision);
    QSeries f = [&]() {
        switch (k) {
            case 18: return d.mul(e6, precision);
            case 22: return d.mul(e6, precision).mul(e4, precision);
            case 26: return d.mul(e4, precision).mul(e4, precision).mul(e6, precision);
            default: throw std::invalid_argument("newform_onedim: weight must be 18, 22 or 26");
        }
    }();
    EllipticEigenform g;
    g.weight = k;
    g.a = to_int_coeffs(f, "newform_onedim");
    if (precision >= 1 && g.a[1] != 1) throw InternalError("newform_onedim: a(1) != 1");
    return g;
}

QuadExt S38Eigen::a2_plus() const { return QuadExt{Rat(trace) / 2, Rat(scale) / 2, core}; }
QuadExt S38Eigen::a2_minus() const { return QuadExt{Rat(trace) / 2, Rat(-scale) / 2, core}; }

std::vector<QuadExt> S38Eigen::eigenform(const QuadExt& a2, long precision) const {
    if (precision >= static_cast<long>(g1.size()))
        throw PrecisionError("S38Eigen::eigenform: precision beyond stored basis");
    QuadExt q00{m[0][0], Rat(0), core}, q01{m[0][1], Rat(0), core};
    QuadExt q10{m[1][0], Rat(0), core}, q11{m[1][1], Rat(0), core};
    // eigenvector of the 2x2 matrix for eigenvalue a2
    QuadExt x = q01, y = a2 - q00;
    if (x.a == 0 && x.b == 0 && y.a == 0 && y.b == 0) {
        x = a2 - q11;
        y = q10;
    }
    if (!(q00 * x + q01 * y == a2 * x) || !(q10 * x + q11 * y == a2 * y))
        throw InternalError("S38Eigen::eigenform: eigenvector check failed");
    auto inv = [](const QuadExt& z) {
        Rat nrm = z.a * z.a - z.b * z.b * Rat(z.core);
        if (nrm == 0) throw InternalError("S38Eigen::eigenform: division by zero");
        return QuadExt{z.a / nrm, -z.b / nrm, z.core};
    };
    QuadExt lead = x * QuadExt{Rat(g1[1]), Rat(0), core} + y * QuadExt{Rat(g2[1]), Rat(0), core};
    QuadExt unit = inv(lead);
    std::vector<QuadExt> f(static_cast<size_t>(precision) + 1, QuadExt{Rat(0), Rat(0), core});
    for (long n = 1; n <= precision; ++n) {
        QuadExt v = x * QuadExt{Rat(g1[static_cast<size_t>(n)]), Rat(0), core} +
                    y * QuadExt{Rat(g2[static_cast<size_t>(n)]), Rat(0), core};
        f[static_cast<size_t>(n)] = v * unit;
    }
    return f;
}

S38Eigen eigenbasis_s38() {
    const long prec = 64;
    QSeries d = delta(prec);
    QSeries e4 = eisenstein(4, prec);
    QSeries e6 = eisenstein(6, prec);
    QSeries e42 = e4.mul(e4, prec);
    QSeries e62 = e6.mul(e6, prec);
    QSeries b1 = d.mul(e42, prec).mul(e62, prec).mul(e6, prec);      // Delta E4^2 E6^3
    QSeries b2 = d.mul(e42, prec).mul(e42, prec).mul(e4, prec).mul(e6, prec);  // Delta E4^5 E6
    S38Eigen s;
    s.g1 = to_int_coeffs(b1, "eigenbasis_s38");
    s.g2 = to_int_coeffs(b2, "eigenbasis_s38");
    const Int p37 = pow_int(2, 37);
    auto t2 = [&](const std::vector<Int>& g, long n) {
        Int v = g[static_cast<size_t>(2 * n)];
        if (n % 2 == 0) v += p37 * g[static_cast<size_t>(n / 2)];
        return v;
    };
    // solve T(2) g_j = m[0][j] g1 + m[1][j] g2 from coefficient rows n = 1, 2
    Rat a11(s.g1[1]), a12(s.g2[1]), a21(s.g1[2]), a22(s.g2[2]);
    Rat den = a11 * a22 - a12 * a21;
    if (den == 0) throw InternalError("eigenbasis_s38: singular coefficient rows");
    for (int j = 0; j < 2; ++j) {
        const std::vector<Int>& g = (j == 0) ? s.g1 : s.g2;
        Rat h1(t2(g, 1)), h2(t2(g, 2));
        s.m[0][j] = (h1 * a22 - a12 * h2) / den;
        s.m[1][j] = (a11 * h2 - h1 * a21) / den;
        // the image must lie in the span: check every available coefficient
        for (long n = 1; 2 * n <= prec; ++n) {
            Rat lhs(t2(g, n));
            Rat rhs = s.m[0][j] * Rat(s.g1[static_cast<size_t>(n)]) +
                      s.m[1][j] * Rat(s.g2[static_cast<size_t>(n)]);
            if (lhs != rhs) throw InternalError("eigenbasis_s38: image not in span");
        }
    }
    Rat tr = s.m[0][0] + s.m[1][1];
    Rat de = s.m[0][0] * s.m[1][1] - s.m[0][1] * s.m[1][0];
    if (tr.get_den() != 1 || de.get_den() != 1)
        throw InternalError("eigenbasis_s38: non-integral trace or determinant");
    s.trace = tr.get_num();
    s.det = de.get_num();
    s.disc = s.trace * s.trace - 4 * s.det;
    if (s.disc <= 0) throw InternalError("eigenbasis_s38: discriminant not positive");
    // split disc = scale^2 * core with core squarefree by trial division
    s.core = 1;
    s.scale = 1;
    Int n = s.disc;
    for (Int p = 2; p * p <= n;) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            for (int i = 0; i < e / 2; ++i) s.scale *= p;
            if (e % 2 == 1) s.core *= p;
        }
        p += (p == 2) ? 1 : 2;
    }
    s.core *= n;
    if (s.scale * s.scale * s.core != s.disc) throw InternalError("eigenbasis_s38: disc split failed");
    return s;
}

}  // namespace sk2
