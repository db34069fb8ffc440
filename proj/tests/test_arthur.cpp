#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>

#include "sk2/arith.hpp"
#include "sk2/arthur.hpp"
#include "sk2/errors.hpp"
#include "sk2/jacobi.hpp"

using namespace sk2;

namespace {

std::shared_ptr<EllipticEigenform> stream(int w, long prec) {
    return std::make_shared<EllipticEigenform>(newform_onedim(w, prec));
}

}  // namespace

TEST_CASE("general and yoshida eigenvalues are tempered combinations") {
    auto f18 = stream(18, 40);
    auto f22 = stream(22, 40);
    HalfPow g = lambda_p(general_spec(f18, "f18"), 2);
    CHECK_EQ(g.p, 2);
    CHECK_EQ(g.x, Rat(0));
    CHECK_EQ(g.y, Rat(-33, 32));  // a(2) / 2^9
    HalfPow y = lambda_p(yoshida_spec(f18, "f18", f22, "f22"), 2);
    CHECK_EQ(y.x, Rat(0));
    CHECK_EQ(y.y, Rat(-75, 64));  // -33/32 - 288/2048
}

TEST_CASE("lift eigenvalue with trivial character at p = 2") {
    auto f18 = stream(18, 40);
    HalfPow v = lambda_p(sk_spec(f18, "f18", 1), 2);
    CHECK_EQ(v.x, Rat(0));
    CHECK_EQ(v.y, Rat(15, 32));
    CHECK_GT(v.sign(), 0);
}

TEST_CASE("soudry eigenvalue collapses to the rational part") {
    auto f18 = stream(18, 40);
    HalfPow v = lambda_p(soudry_spec(f18, "f18"), 2);
    CHECK_EQ(v.x, Rat(-99, 32));  // (p + 1) a(2) / 2^9
    CHECK_EQ(v.y, Rat(0));
}

TEST_CASE("two-character eigenvalue trichotomy") {
    ArthurSpec spec = howe_ps_spec(-4, -3);
    HalfPow h13 = lambda_p(spec, 13);
    CHECK_EQ(h13.x, Rat(0));
    CHECK_EQ(h13.y, Rat(28, 13));
    HalfPow h7 = lambda_p(spec, 7);
    CHECK(h7.is_zero());
    HalfPow h11 = lambda_p(spec, 11);
    CHECK_EQ(h11.y, Rat(-24, 11));
    CHECK_LT(h11.sign(), 0);
    CHECK_THROWS_AS(lambda_p(spec, 3), std::domain_error);
    CHECK_THROWS_AS(lambda_p(spec, 2), std::domain_error);
    CHECK_THROWS_AS(howe_ps_spec(-4, -4), std::invalid_argument);
}

TEST_CASE("stream precision is enforced") {
    auto f18 = stream(18, 30);
    CHECK_THROWS_AS(lambda_p(general_spec(f18, "f18"), 37), PrecisionError);
}

TEST_CASE("eta stream: frozen values and generating-function recursion") {
    EllipticEigenform f18 = newform_onedim(18, 40);
    std::vector<Int> eta = sk_eta_stream(f18, 10, 32);
    CHECK_EQ(eta[1], Int(1));
    CHECK_EQ(eta[2], Int(240));
    CHECK_EQ(eta[3], Int(21960));
    CHECK_EQ(eta[4], Int(135424));
    CHECK_EQ(eta[5], Int(1317900));
    CHECK_EQ(eta[6], Int(5270400));
    CHECK_EQ(eta[7], Int(49344400));
    CHECK_EQ(eta[8], Int(98365440));
    // multiplicative across coprime indices
    CHECK_EQ(eta[6], eta[2] * eta[3]);
    CHECK_EQ(eta[10], eta[2] * eta[5]);
    CHECK_EQ(eta[15], eta[3] * eta[5]);
    CHECK_EQ(eta[12], eta[3] * eta[4]);
    // eta(p) = a(p) + p^{k-1} + p^{k-2}
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
        CAPTURE(p);
        CHECK_EQ(eta[static_cast<size_t>(p)], f18.coeff(p) + pow_int(p, 9) + pow_int(p, 8));
    }
    // power series identity: (sum eta(2^j) x^j) * denominator = numerator
    // with denominator (1 - a x + 2^17 x^2)(1 - 2^9 x)(1 - 2^8 x) and
    // numerator 1 - 2^16 x^2
    {
        const Int a = f18.coeff(2);
        std::vector<Int> den = {1, -a, pow_int(2, 17)};
        auto mul_lin = [](std::vector<Int> v, const Int& root) {
            std::vector<Int> out(v.size() + 1, Int(0));
            for (size_t i = 0; i < v.size(); ++i) {
                out[i] += v[i];
                out[i + 1] -= root * v[i];
            }
            return out;
        };
        den = mul_lin(den, pow_int(2, 9));
        den = mul_lin(den, pow_int(2, 8));
        std::vector<Int> lhs(6, Int(0));
        for (size_t i = 0; i < lhs.size(); ++i)
            for (size_t j = 0; j <= i && j < den.size(); ++j) {
                long idx = 1 << (i - j);
                lhs[i] += den[j] * eta[static_cast<size_t>(idx)];
            }
        CHECK_EQ(lhs[0], Int(1));
        CHECK_EQ(lhs[1], Int(0));
        CHECK_EQ(lhs[2], -pow_int(2, 16));
        CHECK_EQ(lhs[3], Int(0));
        CHECK_EQ(lhs[4], Int(0));
        CHECK_EQ(lhs[5], Int(0));
    }
    // independent oracle: the divisor-sum norm ratio has the same Dirichlet
    // series, so the two streams must agree at every index
    for (long m = 1; m <= 32; ++m) {
        CAPTURE(m);
        CHECK_EQ(Rat(eta[static_cast<size_t>(m)]), fj_norm_ratio(f18, 10, 1, m));
    }
}

TEST_CASE("combination classifier distinguishes surviving half powers") {
    auto f18 = stream(18, 40);
    auto f22 = stream(22, 40);
    ComboSpec pure{{{Rat(1), general_spec(f18, "f18")}}};
    CHECK(combo_classify(pure) == ComboCase::Case1);
    ComboSpec sk_triv{{{Rat(1), sk_spec(f18, "f18", 1)}}};
    CHECK(combo_classify(sk_triv) == ComboCase::Case2);
    ComboSpec engineered{{{Rat(1), sk_spec(f18, "f18", -3)},
                          {Rat(-1), howe_ps_spec(-3, -4)},
                          {Rat(1), sk_spec(f22, "f22", -4)}}};
    CHECK(combo_classify(engineered) == ComboCase::Case1);
    // cancelling two copies of the same non-tempered stream
    ComboSpec cancel{{{Rat(1), soudry_spec(f18, "f18")},
                      {Rat(-1), soudry_spec(f18, "f18")},
                      {Rat(1), general_spec(f22, "f22")}}};
    CHECK(combo_classify(cancel) == ComboCase::Case1);
    ComboSpec survive{{{Rat(1), soudry_spec(f18, "f18")}, {Rat(1), soudry_spec(f22, "f22")}}};
    CHECK(combo_classify(survive) == ComboCase::Case2);
    // combinations with vanishing total coefficient are rejected
    ComboSpec zero{{{Rat(1), general_spec(f18, "f18")}, {Rat(-1), general_spec(f22, "f22")}}};
    CHECK_THROWS_AS(combo_classify(zero), std::invalid_argument);
    CHECK_THROWS_AS(combo_value(zero, 5), std::invalid_argument);
}

TEST_CASE("combination values are linear in the coefficients") {
    auto f18 = stream(18, 60);
    ComboSpec twice{{{Rat(2), general_spec(f18, "f18")}}};
    for (long p : {2L, 3L, 5L, 7L}) {
        HalfPow v = combo_value(twice, p);
        HalfPow w = lambda_p(general_spec(f18, "f18"), p);
        CHECK_EQ(v.x, w.x * 2);
        CHECK_EQ(v.y, w.y * 2);
    }
}

TEST_CASE("engineered cancellation keeps values in the tempered envelope") {
    auto f18 = stream(18, 1000);
    auto f22 = stream(22, 1000);
    ComboSpec engineered{{{Rat(1), sk_spec(f18, "f18", -3)},
                          {Rat(-1), howe_ps_spec(-3, -4)},
                          {Rat(1), sk_spec(f22, "f22", -4)}}};
    for (long p : primes_upto(1000)) {
        if (p == 2 || p == 3) continue;
        HalfPow a = combo_value(engineered, p);
        HalfPow hi = a;
        hi.x += 4;
        HalfPow lo = a;
        lo.x -= 4;
        CAPTURE(p);
        CHECK_GE(hi.sign(), 0);
        CHECK_LE(lo.sign(), 0);
    }
}

TEST_CASE("nontrivial lift character drives the eigenvalue sign") {
    auto f18 = stream(18, 1000);
    for (long p : primes_upto(1000)) {
        if (p == 3) continue;
        HalfPow a = lambda_p(sk_spec(f18, "f18", -3), p);
        CAPTURE(p);
        CHECK_EQ(a.sign(), splitting_symbol(-3, p));
    }
}

TEST_CASE("combo streams skip ramified primes") {
    auto f18 = stream(18, 200);
    ComboSpec spec{{{Rat(1), sk_spec(f18, "f18", -3)}}};
    auto s = combo_stream(spec, 200);
    for (const auto& [p, v] : s) CHECK_NE(p, 3);
    CHECK_EQ(s.size(), primes_upto(200).size() - 1);
}

TEST_CASE("partial sums over progressions") {
    std::vector<std::pair<long, double>> s;
    for (long p : primes_upto(1000)) s.emplace_back(p, 1.0);
    auto rows = selberg_sums(s, 1, 4, 1.0, {10, 100, 1000});
    REQUIRE_EQ(rows.size(), 3);
    CHECK_EQ(rows[0].x, 10);
    CHECK_EQ(rows[2].x, 1000);
    CHECK_GT(rows[2].sum, rows[1].sum);
    for (const SelbergRow& row : rows) {
        CHECK_EQ(row.loglog, doctest::Approx(std::log(std::log(row.x))));
        CHECK_EQ(row.drift, doctest::Approx(row.sum - row.loglog / 2));
    }
    // p = 1 mod 4 at x = 10: primes 5 only, sum 1/5
    CHECK_EQ(rows[0].sum, doctest::Approx(0.2));
    CHECK_THROWS_AS(selberg_sums(s, 4, 4, 1.0, {10}), std::invalid_argument);
    CHECK_THROWS_AS(selberg_sums(s, 1, 4, 4.0, {10}), std::invalid_argument);
}

TEST_CASE("sign changes count consecutive nonzero flips in a progression") {
    std::vector<std::pair<long, double>> s = {
        {5, 1.0}, {7, -2.0}, {11, 0.5}, {13, 0.0}, {17, -1.0}};
    CHECK_EQ(count_sign_changes(s, 0, 1), 3);
    // restricted to p = 1 mod 4: values at 5, 13, 17 with the zero skipped
    CHECK_EQ(count_sign_changes(s, 1, 4), 1);
}
