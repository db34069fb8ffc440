#include "sk2/maass.hpp"

#include <numeric>
#include <stdexcept>

#include "sk2/arith.hpp"
#include "sk2/errors.hpp"

namespace sk2 {

Rat SiegelExpansion::coeff(const HalfIntMatrix& T) const {
    if (!T.is_psd()) throw std::invalid_argument("coeff: matrix not positive semidefinite");
    HalfIntMatrix K = reduce(T).canon;
    if (K.det4() == 0) {
        if (!has_singular) return Rat(0);
        if (K.n == 0) return a0;  // zero matrix
        if (K.n >= static_cast<long>(rank1.size()))
            throw PrecisionError("coeff: rank-1 content " + std::to_string(K.n) +
                                 " beyond stored range");
        return rank1[static_cast<size_t>(K.n)];
    }
    if (!in_region(K))
        throw PrecisionError("coeff: key (" + std::to_string(K.n) + "," + std::to_string(K.r) +
                             "," + std::to_string(K.m) + ") det4 " + std::to_string(K.det4()) +
                             " outside completeness region");
    auto it = coeffs.find(K);
    if (it == coeffs.end()) throw InternalError("coeff: canonical key missing inside region");
    return it->second;
}

std::vector<HalfIntMatrix> canonical_keys(long detmax4, long box) {
    std::vector<HalfIntMatrix> out;
    for (long n = 1; 3 * n * n <= detmax4 && (box < 0 || n <= box); ++n) {
        for (long r = 0; r <= n; ++r) {
            for (long m = n; 4 * n * m - r * r <= detmax4 && (box < 0 || m <= box); ++m) {
                if (4 * n * m - r * r > 0) out.push_back({n, r, m});
            }
        }
    }
    std::sort(out.begin(), out.end());  // HalfIntMatrix orders by (det4, n, r, m)
    return out;
}

namespace {

// The shared divisor-sum lift formula, usable for cusp and Eisenstein inputs.
std::map<HalfIntMatrix, Rat> lift_coeffs(const JacobiIndex1Form& phi, long detmax4) {
    if (phi.max_d() < detmax4)
        throw PrecisionError("sk_lift: Jacobi input supports D <= " + std::to_string(phi.max_d()) +
                             ", need " + std::to_string(detmax4));
    std::map<HalfIntMatrix, Rat> coeffs;
    for (const HalfIntMatrix& T : canonical_keys(detmax4)) {
        long g = T.content();
        long det4 = T.det4();
        Rat acc(0);
        for (long d : divisors(g)) acc += Rat(pow_int(d, phi.weight - 1)) * phi.coeff_d(det4 / (d * d));
        coeffs.emplace(T, acc);
    }
    return coeffs;
}

}  // namespace

SiegelExpansion sk_lift(const JacobiIndex1Form& phi, long detmax4) {
    if (!phi.cusp) throw std::invalid_argument("sk_lift: input must be cuspidal");
    SiegelExpansion F;
    F.weight = phi.weight;
    F.detmax4 = detmax4;
    F.coeffs = lift_coeffs(phi, detmax4);
    return F;
}

SiegelExpansion siegel_eisenstein2(int k, long detmax4) {
    if (k != 4 && k != 6) throw std::invalid_argument("siegel_eisenstein2: k must be 4 or 6");
    if (detmax4 < 4) throw std::invalid_argument("siegel_eisenstein2: detmax4 too small");
    JacobiIndex1Form ce = jacobi_eisenstein(k, detmax4);
    long rank1max = detmax4 / 4;  // covers every diagonal cell with 4nm <= detmax4
    QSeries ek = eisenstein(k, rank1max);
    SiegelExpansion F;
    F.weight = k;
    F.detmax4 = detmax4;
    F.has_singular = true;
    F.a0 = 1;
    F.rank1.assign(static_cast<size_t>(rank1max) + 1, Rat(0));
    for (long n = 1; n <= rank1max; ++n) F.rank1[static_cast<size_t>(n)] = ek[n];
    F.coeffs = lift_coeffs(ce, detmax4);
    // one unknown: the scale of the definite part against the singular part.
    // Diagonal restriction at (1, 1): kappa (2 C(3) + C(4)) + 2 e_k(1) = e_k(1)^2.
    Rat kappa = (ek[1] * ek[1] - 2 * ek[1]) / (2 * ce.coeff_d(3) + ce.coeff_d(4));
    for (auto& [key, val] : F.coeffs) val *= kappa;
    for (long n = 1; 4 * n * n <= detmax4; ++n) {
        for (long m = n; 4 * n * m <= detmax4; ++m) {
            if (witt_pullback(F, n, m) != ek[n] * ek[m])
                throw InternalError("siegel_eisenstein2: diagonal restriction fails at (" +
                                    std::to_string(n) + "," + std::to_string(m) + ")");
        }
    }
    return F;
}

SiegelExpansion multiply(const SiegelExpansion& F, const SiegelExpansion& G, long detmax4,
                         long box) {
    if (box < 1) throw std::invalid_argument("multiply: box must be >= 1");
    for (const SiegelExpansion* X : {&F, &G}) {
        if (X->detmax4 < 4 * box * box)
            throw PrecisionError("multiply: factor complete to det4 " +
                                 std::to_string(X->detmax4) + ", need " +
                                 std::to_string(4 * box * box));
        if (X->box >= 0 && X->box < box)
            throw PrecisionError("multiply: factor box too small");
        if (X->has_singular && static_cast<long>(X->rank1.size()) - 1 < box)
            throw PrecisionError("multiply: factor rank-1 row too short");
    }
    SiegelExpansion P;
    P.weight = F.weight + G.weight;
    P.detmax4 = detmax4;
    P.box = box;
    for (const HalfIntMatrix& T : canonical_keys(detmax4, box)) {
        Rat acc(0);
        for (long n1 = 0; n1 <= T.n; ++n1) {
            for (long m1 = 0; m1 <= T.m; ++m1) {
                long R1 = isqrt_floor(4 * n1 * m1);
                for (long r1 = -R1; r1 <= R1; ++r1) {
                    long n2 = T.n - n1, r2 = T.r - r1, m2 = T.m - m1;
                    if (4 * n2 * m2 - r2 * r2 < 0) continue;
                    Rat v1 = F.coeff(n1, r1, m1);
                    if (v1 == 0) continue;
                    Rat v2 = G.coeff(n2, r2, m2);
                    if (v2 != 0) acc += v1 * v2;
                }
            }
        }
        P.coeffs.emplace(T, acc);
    }
    if (F.has_singular && G.has_singular) {
        // the degree-lowering operator is multiplicative: the singular part
        // of the product is the 1-d convolution of the singular parts
        P.has_singular = true;
        P.a0 = F.a0 * G.a0;
        long L = std::min(F.rank1.size(), G.rank1.size()) - 1;
        P.rank1.assign(static_cast<size_t>(L) + 1, Rat(0));
        auto fr = [&](long i) { return i == 0 ? F.a0 : F.rank1[static_cast<size_t>(i)]; };
        auto gr = [&](long i) { return i == 0 ? G.a0 : G.rank1[static_cast<size_t>(i)]; };
        for (long c = 1; c <= L; ++c) {
            Rat s(0);
            for (long i = 0; i <= c; ++i) s += fr(i) * gr(c - i);
            P.rank1[static_cast<size_t>(c)] = s;
        }
    }
    return P;
}

Rat witt_pullback(const SiegelExpansion& F, long n, long m) {
    if (n < 0 || m < 0) throw std::invalid_argument("witt_pullback: negative index");
    long R = isqrt_floor(4 * n * m);
    Rat acc(0);
    for (long r = -R; r <= R; ++r) acc += F.coeff(n, r, m);
    return acc;
}

QSeries phi_operator(const SiegelExpansion& F, long precision) {
    QSeries out(precision);
    if (!F.has_singular) return out;  // cusp: identically zero
    if (precision > static_cast<long>(F.rank1.size()) - 1)
        throw PrecisionError("phi_operator: rank-1 row shorter than requested precision");
    out.at(0) = F.a0;
    for (long nn = 1; nn <= precision; ++nn) out.at(nn) = F.rank1[static_cast<size_t>(nn)];
    return out;
}

SiegelExpansion linear_combination(
    const std::vector<std::pair<Rat, const SiegelExpansion*>>& terms) {
    if (terms.empty()) throw std::invalid_argument("linear_combination: no terms");
    SiegelExpansion R;
    R.weight = terms[0].second->weight;
    R.detmax4 = terms[0].second->detmax4;
    R.box = terms[0].second->box;
    long rank1max = -2;  // -2: all-cusp so far (unbounded zeros), else min over non-cusp
    for (const auto& [c, X] : terms) {
        (void)c;
        if (X->weight != R.weight)
            throw std::invalid_argument("linear_combination: weight mismatch");
        R.detmax4 = std::min(R.detmax4, X->detmax4);
        if (X->box >= 0) R.box = R.box < 0 ? X->box : std::min(R.box, X->box);
        if (X->has_singular) {
            long rm = static_cast<long>(X->rank1.size()) - 1;
            rank1max = rank1max == -2 ? rm : std::min(rank1max, rm);
        }
    }
    for (const HalfIntMatrix& T : canonical_keys(R.detmax4, R.box)) {
        Rat acc(0);
        for (const auto& [c, X] : terms) acc += c * X->coeff(T);
        R.coeffs.emplace(T, acc);
    }
    if (rank1max != -2) {
        R.has_singular = true;
        R.rank1.assign(static_cast<size_t>(rank1max) + 1, Rat(0));
        for (const auto& [c, X] : terms) {
            if (!X->has_singular) continue;
            R.a0 += c * X->a0;
            for (long i = 1; i <= rank1max; ++i)
                R.rank1[static_cast<size_t>(i)] += c * X->rank1[static_cast<size_t>(i)];
        }
    }
    return R;
}

}  // namespace sk2
