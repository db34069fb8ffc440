#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sk2/errors.hpp"
#include "sk2/qseries.hpp"

using namespace sk2;

TEST_CASE("eisenstein series leading coefficients") {
    QSeries e4 = eisenstein(4, 10);
    CHECK_EQ(e4[0], Rat(1));
    CHECK_EQ(e4[1], Rat(240));
    CHECK_EQ(e4[2], Rat(2160));
    CHECK_EQ(e4[3], Rat(6720));
    QSeries e6 = eisenstein(6, 10);
    CHECK_EQ(e6[1], Rat(-504));
    CHECK_EQ(e6[2], Rat(-16632));
}

TEST_CASE("one-dimensional eisenstein spaces force product identities") {
    const long N = 30;
    QSeries e4 = eisenstein(4, N);
    QSeries e6 = eisenstein(6, N);
    QSeries e8 = eisenstein(8, N);
    QSeries e10 = eisenstein(10, N);
    QSeries e14 = eisenstein(14, N);
    QSeries p8 = e4.mul(e4, N);
    QSeries p10 = e4.mul(e6, N);
    QSeries p14 = p8.mul(e6, N);
    for (long n = 0; n <= N; ++n) {
        CAPTURE(n);
        CHECK_EQ(p8[n], e8[n]);
        CHECK_EQ(p10[n], e10[n]);
        CHECK_EQ(p14[n], e14[n]);
    }
}

TEST_CASE("discriminant form coefficients and hecke relations") {
    QSeries d = delta(20);
    CHECK_EQ(d[0], Rat(0));
    CHECK_EQ(d[1], Rat(1));
    CHECK_EQ(d[2], Rat(-24));
    CHECK_EQ(d[3], Rat(252));
    CHECK_EQ(d[4], Rat(-1472));
    CHECK_EQ(d[5], Rat(4830));
    CHECK_EQ(d[6], Rat(-6048));
    // multiplicativity and the prime-power recursion at p = 2, 3
    CHECK_EQ(d[6], d[2] * d[3]);
    CHECK_EQ(d[4], d[2] * d[2] - Rat(pow_int(2, 11)));
    CHECK_EQ(d[9], d[3] * d[3] - Rat(pow_int(3, 11)));
    CHECK_EQ(d[12], d[3] * d[4]);
}

TEST_CASE("delta equals the normalized eisenstein discriminant") {
    const long N = 40;
    QSeries e4 = eisenstein(4, N);
    QSeries e6 = eisenstein(6, N);
    QSeries num = e4.mul(e4, N).mul(e4, N).add(e6.mul(e6, N).scale(Rat(-1)));
    QSeries lhs = num.scale(Rat(1, 1728));
    QSeries d = delta(N);
    for (long n = 0; n <= N; ++n) {
        CAPTURE(n);
        CHECK_EQ(lhs[n], d[n]);
    }
}

TEST_CASE("series arithmetic laws and bounds") {
    QSeries e4 = eisenstein(4, 12);
    QSeries e6 = eisenstein(6, 12);
    QSeries ab = e4.mul(e6, 12);
    QSeries ba = e6.mul(e4, 12);
    for (long n = 0; n <= 12; ++n) CHECK_EQ(ab[n], ba[n]);

    QSeries tr = e4.mul(e6, 5);
    CHECK_EQ(tr.precision(), 5);
    CHECK_EQ(tr[5], ab[5]);

    CHECK(e4.is_integral());
    CHECK_FALSE(e4.scale(Rat(1, 7)).is_integral());

    CHECK_THROWS_AS(e4[13], PrecisionError);
    CHECK_THROWS_AS(e4[-1], PrecisionError);
    CHECK_THROWS_AS(e4.mul(e6, 13), PrecisionError);
    CHECK_THROWS_AS(QSeries(-1), std::invalid_argument);
}

TEST_CASE("one-dimensional cusp eigenforms: frozen values and hecke relations") {
    struct Row {
        int k;
        long a2, a3, a5;
    };
    const Row rows[] = {
        {18, -528, -4284, -1025850},
        {22, -288, -128844, 21640950},
        {26, -48, -195804, -741989850},
    };
    for (const Row& row : rows) {
        EllipticEigenform f = newform_onedim(row.k, 40);
        CAPTURE(row.k);
        CHECK_EQ(f.weight, row.k);
        CHECK_EQ(f.coeff(1), Int(1));
        CHECK_EQ(f.coeff(2), Int(row.a2));
        CHECK_EQ(f.coeff(3), Int(row.a3));
        CHECK_EQ(f.coeff(5), Int(row.a5));
        Int p2k = pow_int(2, static_cast<unsigned long>(row.k - 1));
        Int p3k = pow_int(3, static_cast<unsigned long>(row.k - 1));
        CHECK_EQ(f.coeff(4), f.coeff(2) * f.coeff(2) - p2k);
        CHECK_EQ(f.coeff(6), f.coeff(2) * f.coeff(3));
        CHECK_EQ(f.coeff(8), f.coeff(2) * f.coeff(4) - p2k * f.coeff(2));
        CHECK_EQ(f.coeff(9), f.coeff(3) * f.coeff(3) - p3k);
        CHECK_EQ(f.coeff(10), f.coeff(2) * f.coeff(5));
        CHECK_EQ(f.coeff(12), f.coeff(3) * f.coeff(4));
        CHECK_EQ(f.coeff(15), f.coeff(3) * f.coeff(5));
        CHECK_THROWS_AS(f.coeff(41), PrecisionError);
        CHECK_THROWS_AS(f.coeff(0), PrecisionError);
        // analytic normalization stays inside the closed unit-disc bound 2
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
            CAPTURE(p);
            CHECK(std::abs(f.normalized(p)) < 2.0);
        }
    }
    CHECK_THROWS_AS(newform_onedim(20, 10), std::invalid_argument);
}

TEST_CASE("weight-38 pair: frozen t(2) data") {
    S38Eigen s = eigenbasis_s38();
    CHECK_EQ(s.trace, Int(-194400));
    CHECK_EQ(s.det, Int("-137403408384"));
    CHECK_EQ(s.disc, Int("587404993536"));
    CHECK_EQ(s.core, Int(63737521));
    CHECK_EQ(s.scale, Int(96));
    CHECK_EQ(s.m[0][0], Rat(-79635072));
    CHECK_EQ(s.m[0][1], Rat(-79440000));
    CHECK_EQ(s.m[1][0], Rat(79634016));
    CHECK_EQ(s.m[1][1], Rat(79440672));
    CHECK_EQ(s.g1[1], Int(1));
    CHECK_EQ(s.g1[2], Int(-1056));
    CHECK_EQ(s.g2[1], Int(1));
    CHECK_EQ(s.g2[2], Int(672));
    CHECK_EQ(s.disc, s.trace * s.trace - 4 * s.det);
    CHECK_EQ(s.disc, s.scale * s.scale * s.core);
}

TEST_CASE("weight-38 monomial basis is stable under t(2)") {
    S38Eigen s = eigenbasis_s38();
    const Int p37 = pow_int(2, 37);
    auto t2 = [&](const std::vector<Int>& g, long n) {
        Int v = g[static_cast<size_t>(2 * n)];
        if (n % 2 == 0) v += p37 * g[static_cast<size_t>(n / 2)];
        return v;
    };
    for (int j = 0; j < 2; ++j) {
        const std::vector<Int>& g = (j == 0) ? s.g1 : s.g2;
        for (long n = 1; 2 * n < static_cast<long>(g.size()); ++n) {
            Rat lhs(t2(g, n));
            Rat rhs = s.m[0][j] * Rat(s.g1[static_cast<size_t>(n)]) +
                      s.m[1][j] * Rat(s.g2[static_cast<size_t>(n)]);
            CAPTURE(j);
            CAPTURE(n);
            CHECK_EQ(lhs, rhs);
        }
    }
}

TEST_CASE("weight-38 eigenvalues and eigenforms") {
    S38Eigen s = eigenbasis_s38();
    QuadExt ap = s.a2_plus();
    QuadExt am = s.a2_minus();
    CHECK_EQ(ap.a, Rat(-97200));
    CHECK_EQ(ap.b, Rat(48));
    CHECK_EQ(ap.core, Int(63737521));
    CHECK_EQ(am.b, Rat(-48));
    QuadExt sum = ap + am;
    CHECK_EQ(sum.a, Rat(s.trace));
    CHECK_EQ(sum.b, Rat(0));
    QuadExt prod = ap * am;
    CHECK_EQ(prod.a, Rat(s.det));
    CHECK_EQ(prod.b, Rat(0));

    std::vector<QuadExt> e = s.eigenform(ap, 32);
    CHECK(e[1] == QuadExt(Rat(1), Rat(0), s.core));
    CHECK(e[2] == ap);
    QuadExt e4 = ap * ap - QuadExt(Rat(pow_int(2, 37)), Rat(0), s.core);
    CHECK(e[4] == e4);
    CHECK(e[6] == e[2] * e[3]);
    CHECK(e[12] == e[3] * e[4]);
    CHECK_THROWS_AS(s.eigenform(ap, 100), PrecisionError);
}
