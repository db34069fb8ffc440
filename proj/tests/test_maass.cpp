#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <tuple>

#include "sk2/errors.hpp"
#include "sk2/maass.hpp"
#include "sk2/quad.hpp"

using namespace sk2;

TEST_CASE("canonical keys enumerate the region exactly once") {
    const long detmax4 = 48;
    std::vector<HalfIntMatrix> keys = canonical_keys(detmax4);
    std::set<std::tuple<long, long, long>> seen;
    for (const HalfIntMatrix& t : keys) {
        CHECK(0 <= t.r);
        CHECK(t.r <= t.n);
        CHECK(t.n <= t.m);
        CHECK(t.det4() > 0);
        CHECK(t.det4() <= detmax4);
        CHECK(seen.insert({t.n, t.r, t.m}).second);
    }
    // sorted by (det4, n, r, m)
    for (size_t i = 1; i < keys.size(); ++i) {
        auto rank = [](const HalfIntMatrix& t) {
            return std::make_tuple(t.det4(), t.n, t.r, t.m);
        };
        CHECK(rank(keys[i - 1]) < rank(keys[i]));
    }
    // brute-force completeness: 3n^2 <= det4 bounds the reduced first entry
    size_t count = 0;
    for (long n = 1; 3 * n * n <= detmax4; ++n)
        for (long r = 0; r <= n; ++r)
            for (long m = n; 4 * n * m - r * r <= detmax4; ++m)
                if (4 * n * m - r * r > 0) ++count;
    CHECK_EQ(keys.size(), count);

    for (const HalfIntMatrix& t : canonical_keys(detmax4, 2)) {
        CHECK(t.n <= 2);
        CHECK(t.m <= 2);
    }
}

TEST_CASE("weight-10 lift frozen coefficients") {
    SiegelExpansion l10 = sk_lift(cusp_form_10_12(10, 64), 64);
    CHECK_EQ(l10.weight, 10);
    CHECK_FALSE(l10.has_singular);
    CHECK_EQ(l10.box, -1);
    CHECK_EQ(l10.coeff(1, 1, 1), Rat(1));
    CHECK_EQ(l10.coeff(1, 0, 1), Rat(-2));
    CHECK_EQ(l10.coeff(1, 1, 2), Rat(-16));
    CHECK_EQ(l10.coeff(1, 0, 2), Rat(36));
    CHECK_EQ(l10.coeff(1, 1, 3), Rat(99));
    CHECK_EQ(l10.coeff(1, 0, 3), Rat(-272));
    // content sum: a(2,2,2) = C(12) + 2^9 C(3)
    CHECK_EQ(l10.coeff(2, 2, 2), Rat(240));
    // a(2,0,2) = C(16) + 2^9 C(4)
    CHECK_EQ(l10.coeff(2, 0, 2), Rat(32));
    // singular part of a cusp expansion is zero
    CHECK_EQ(l10.coeff(0, 0, 0), Rat(0));
    CHECK_EQ(l10.coeff(1, 2, 1), Rat(0));
    CHECK_EQ(l10.coeff(5, 0, 0), Rat(0));
    CHECK_THROWS_AS(l10.coeff(10, 0, 10), PrecisionError);
}

TEST_CASE("coefficients are constant on unimodular orbits") {
    SiegelExpansion l10 = sk_lift(cusp_form_10_12(10, 100), 100);
    std::mt19937 rng(42);
    const Unimodular shear{1, 1, 0, 1};
    const Unimodular rot{0, -1, 1, 0};
    for (const HalfIntMatrix& t : canonical_keys(100)) {
        Unimodular u;
        for (int step = 0; step < 6; ++step) u = u.mul(rng() % 2 ? shear : rot);
        HalfIntMatrix moved = transform(t, u);
        CHECK_EQ(l10.coeff(moved), l10.coeff(t));
    }
}

TEST_CASE("degree-2 eisenstein frozen coefficients") {
    SiegelExpansion e4 = siegel_eisenstein2(4, 40);
    CHECK_EQ(e4.weight, 4);
    CHECK(e4.has_singular);
    CHECK_EQ(e4.a0, Rat(1));
    CHECK_EQ(e4.rank1[1], Rat(240));
    CHECK_EQ(e4.rank1[2], Rat(2160));
    CHECK_EQ(e4.coeff(1, 1, 1), Rat(13440));
    CHECK_EQ(e4.coeff(1, 0, 1), Rat(30240));
    CHECK_EQ(e4.coeff(1, 1, 2), Rat(138240));
    CHECK_EQ(e4.coeff(2, 2, 2), Rat(604800));

    SiegelExpansion e6 = siegel_eisenstein2(6, 40);
    CHECK_EQ(e6.a0, Rat(1));
    CHECK_EQ(e6.rank1[1], Rat(-504));
    CHECK_EQ(e6.coeff(1, 1, 1), Rat(44352));
    CHECK_EQ(e6.coeff(1, 0, 1), Rat(166320));

    CHECK_THROWS_AS(siegel_eisenstein2(8, 40), std::invalid_argument);
}

TEST_CASE("degree lowering sends the eisenstein series to its elliptic twin") {
    SiegelExpansion e4 = siegel_eisenstein2(4, 40);
    QSeries low = phi_operator(e4, 8);
    QSeries elliptic = eisenstein(4, 8);
    for (long n = 0; n <= 8; ++n) {
        CAPTURE(n);
        CHECK_EQ(low[n], elliptic[n]);
    }
}

TEST_CASE("diagonal restriction factors for eisenstein and lifts") {
    SiegelExpansion e4 = siegel_eisenstein2(4, 48);
    QSeries elliptic = eisenstein(4, 3);
    for (long n = 0; n <= 3; ++n)
        for (long m = 0; m <= 3; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK_EQ(witt_pullback(e4, n, m), elliptic[n] * elliptic[m]);
        }

    // weight 10: the diagonal restriction lands in a zero cusp space
    SiegelExpansion l10 = sk_lift(cusp_form_10_12(10, 64), 64);
    for (long n = 1; n <= 2; ++n)
        for (long m = 1; m <= 2; ++m) CHECK_EQ(witt_pullback(l10, n, m), Rat(0));

    // weight 12: the restriction is a multiple of the discriminant form twice
    SiegelExpansion l12 = sk_lift(cusp_form_10_12(12, 64), 64);
    QSeries tau = delta(2);
    for (long n = 1; n <= 2; ++n)
        for (long m = 1; m <= 2; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK_EQ(witt_pullback(l12, n, m), Rat(12) * tau[n] * tau[m]);
        }
}

TEST_CASE("products multiply diagonal restrictions by convolution") {
    SiegelExpansion e4 = siegel_eisenstein2(4, 40);
    SiegelExpansion e6 = siegel_eisenstein2(6, 40);
    SiegelExpansion p = multiply(e4, e6, 36, 3);
    CHECK_EQ(p.weight, 10);
    CHECK_EQ(p.detmax4, 36);
    CHECK_EQ(p.box, 3);
    CHECK(p.has_singular);
    for (long n = 0; n <= 3; ++n)
        for (long m = 0; m <= 3; ++m) {
            Rat rhs(0);
            for (long i = 0; i <= n; ++i)
                for (long j = 0; j <= m; ++j)
                    rhs += witt_pullback(e4, i, j) * witt_pullback(e6, n - i, m - j);
            CAPTURE(n);
            CAPTURE(m);
            CHECK_EQ(witt_pullback(p, n, m), rhs);
        }

    SiegelExpansion q = multiply(e6, e4, 36, 3);
    CHECK_EQ(q.coeffs.size(), p.coeffs.size());
    for (const auto& [key, val] : p.coeffs) CHECK_EQ(q.coeff(key), val);
}

TEST_CASE("linear combinations act coefficientwise on the common region") {
    SiegelExpansion e4 = siegel_eisenstein2(4, 40);
    SiegelExpansion sum = linear_combination({{Rat(3), &e4}, {Rat(-1), &e4}});
    CHECK_EQ(sum.weight, 4);
    CHECK(sum.has_singular);
    CHECK_EQ(sum.a0, Rat(2));
    for (const auto& [key, val] : sum.coeffs) CHECK_EQ(val, Rat(2) * e4.coeff(key));
    // mixed weights are rejected
    SiegelExpansion e6 = siegel_eisenstein2(6, 40);
    CHECK_THROWS_AS(linear_combination({{Rat(1), &e4}, {Rat(1), &e6}}), std::invalid_argument);
}
