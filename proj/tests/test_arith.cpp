#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmp.h>

#include "sk2/arith.hpp"

using namespace sk2;

TEST_CASE("kronecker matches the gmp oracle on the full domain") {
    for (long d = -60; d <= 60; ++d)
        for (long n = -60; n <= 60; ++n) {
            Int a(d), b(n);
            int expected = mpz_kronecker(a.get_mpz_t(), b.get_mpz_t());
            CAPTURE(d);
            CAPTURE(n);
            CHECK_EQ(kronecker(d, n), expected);
        }
}

TEST_CASE("splitting symbol is the kronecker value of the discriminant") {
    CHECK_EQ(splitting_symbol(-4, 2), 0);
    CHECK_EQ(splitting_symbol(-4, 3), -1);
    CHECK_EQ(splitting_symbol(-4, 5), 1);
    CHECK_EQ(splitting_symbol(-4, 13), 1);
    CHECK_EQ(splitting_symbol(-3, 3), 0);
    CHECK_EQ(splitting_symbol(-3, 5), -1);
    CHECK_EQ(splitting_symbol(-3, 7), 1);
    CHECK_EQ(splitting_symbol(1, 7), 1);
}

TEST_CASE("factor_discriminant splits off the fundamental part") {
    auto check = [](long D, long d, long f) {
        DiscFactor r = factor_discriminant(D);
        CAPTURE(D);
        CHECK_EQ(r.d, d);
        CHECK_EQ(r.f, f);
    };
    check(-3, -3, 1);
    check(-4, -4, 1);
    check(-12, -3, 2);
    check(-16, -4, 2);
    check(-32, -8, 2);
    check(-27, -3, 3);
    check(5, 5, 1);
    check(8, 8, 1);
    check(12, 12, 1);
    check(45, 5, 3);
    check(48, 12, 2);
    check(9, 1, 3);
    check(25, 1, 5);
    CHECK_THROWS_AS(factor_discriminant(7), std::invalid_argument);
    CHECK_THROWS_AS(factor_discriminant(0), std::invalid_argument);
}

TEST_CASE("bernoulli numbers and polynomials") {
    CHECK_EQ(bernoulli(0), Rat(1));
    CHECK_EQ(bernoulli(1), Rat(-1, 2));
    CHECK_EQ(bernoulli(2), Rat(1, 6));
    CHECK_EQ(bernoulli(3), Rat(0));
    CHECK_EQ(bernoulli(4), Rat(-1, 30));
    CHECK_EQ(bernoulli(12), Rat(-691, 2730));

    CHECK_EQ(bernoulli_poly(2, Rat(1, 2)), Rat(-1, 12));
    CHECK_EQ(bernoulli_poly(4, Rat(0)), bernoulli(4));
    // forward difference B_r(x+1) - B_r(x) = r x^{r-1}
    for (int r = 1; r <= 6; ++r)
        for (long x = 0; x <= 4; ++x) {
            Rat diff = bernoulli_poly(r, Rat(x + 1)) - bernoulli_poly(r, Rat(x));
            Rat expected = Rat(r) * pow_int(Int(x), static_cast<unsigned long>(r - 1));
            CHECK_EQ(diff, expected);
        }
}

TEST_CASE("cohen column r=1 equals the hurwitz class number") {
    for (long N = 0; N <= 300; ++N) {
        CAPTURE(N);
        CHECK_EQ(cohen_h(1, N), hurwitz(N));
    }
}

TEST_CASE("hurwitz class numbers at small discriminants") {
    CHECK_EQ(hurwitz(0), Rat(-1, 12));
    CHECK_EQ(hurwitz(1), Rat(0));
    CHECK_EQ(hurwitz(2), Rat(0));
    CHECK_EQ(hurwitz(3), Rat(1, 3));
    CHECK_EQ(hurwitz(4), Rat(1, 2));
    CHECK_EQ(hurwitz(7), Rat(1));
    CHECK_EQ(hurwitz(8), Rat(1));
    CHECK_EQ(hurwitz(11), Rat(1));
    CHECK_EQ(hurwitz(12), Rat(4, 3));
    CHECK_EQ(hurwitz(15), Rat(2));
    CHECK_EQ(hurwitz(16), Rat(3, 2));
    CHECK_EQ(hurwitz(23), Rat(3));
}

TEST_CASE("cohen H(r, 0) is the zeta value and H(r, N) vanishes when (-1)^r N is 2,3 mod 4") {
    CHECK_EQ(cohen_h(1, 0), Rat(-1, 12));
    CHECK_EQ(cohen_h(2, 0), Rat(1, 120));
    CHECK_EQ(cohen_h(3, 0), Rat(-1, 252));
    for (int r = 1; r <= 4; ++r)
        for (long N = 1; N <= 50; ++N) {
            // zero exactly when (-1)^r N is not 0 or 1 mod 4
            long res = (r % 2 == 0) ? N % 4 : (4 - N % 4) % 4;
            if (res == 2 || res == 3) {
                CAPTURE(r);
                CAPTURE(N);
                CHECK_EQ(cohen_h(r, N), Rat(0));
            }
        }
    // parity matters: even r is supported on 0,1 mod 4
    CHECK_EQ(cohen_h(2, 1), Rat(-1, 12));
    CHECK_NE(cohen_h(2, 5), Rat(0));
}

TEST_CASE("cohen_table agrees with pointwise evaluation") {
    for (int r = 1; r <= 3; ++r) {
        std::vector<Rat> row = cohen_table(r, 120);
        REQUIRE_EQ(row.size(), 121);
        for (long N = 0; N <= 120; ++N) {
            CAPTURE(r);
            CAPTURE(N);
            CHECK_EQ(row[static_cast<size_t>(N)], cohen_h(r, N));
        }
    }
}

TEST_CASE("multiplicative utilities") {
    auto f = factorize(720);
    REQUIRE_EQ(f.size(), 3);
    CHECK(f[0] == std::pair<long, int>(2, 4));
    CHECK(f[1] == std::pair<long, int>(3, 2));
    CHECK(f[2] == std::pair<long, int>(5, 1));

    std::vector<long> d36 = divisors(36);
    CHECK_EQ(d36.size(), 9);
    CHECK_EQ(d36.front(), 1);
    CHECK_EQ(d36.back(), 36);
    for (size_t i = 1; i < d36.size(); ++i) CHECK(d36[i - 1] < d36[i]);

    CHECK_EQ(moebius(1), 1);
    CHECK_EQ(moebius(2), -1);
    CHECK_EQ(moebius(6), 1);
    CHECK_EQ(moebius(12), 0);
    CHECK_EQ(moebius(30), -1);

    CHECK_EQ(divisor_sigma(6, 3), Int(252));
    CHECK_EQ(divisor_sigma(12, 0), Int(6));
    CHECK_EQ(divisor_sigma(12, 1), Int(28));

    std::vector<long> ps = primes_upto(100);
    CHECK_EQ(ps.size(), 25);
    CHECK_EQ(ps.front(), 2);
    CHECK_EQ(ps.back(), 97);
}
