#include "sk2/heckeop.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>

#include "sk2/arith.hpp"
#include "sk2/errors.hpp"

namespace sk2 {

namespace {

using Mat2 = std::array<std::array<long, 2>, 2>;

Mat2 mul2(const Mat2& x, const Mat2& y) {
    Mat2 z{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return z;
}

Mat2 transpose2(const Mat2& x) { return Mat2{{{x[0][0], x[1][0]}, {x[0][1], x[1][1]}}}; }

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Reduce B modulo the lattice {S D : S symmetric integral} to the
// lexicographically smallest representative with entries in [0, p).
std::array<long, 4> canonical_b(const Mat2& B, const Mat2& D, long p) {
    std::optional<std::array<long, 4>> best;
    for (long s1 = -p; s1 <= p; ++s1)
        for (long s2 = -p; s2 <= p; ++s2)
            for (long s3 = -p; s3 <= p; ++s3) {
                Mat2 SD = mul2(Mat2{{{s1, s2}, {s2, s3}}}, D);
                std::array<long, 4> cand{B[0][0] + SD[0][0], B[0][1] + SD[0][1],
                                         B[1][0] + SD[1][0], B[1][1] + SD[1][1]};
                bool in_range = true;
                for (long x : cand) in_range = in_range && 0 <= x && x < p;
                if (in_range && (!best || cand < *best)) best = cand;
            }
    if (!best) throw InternalError("coset_reps: B reduction found no representative");
    return *best;
}

void verify_similitude(const CosetRep& rep, long p) {
    long g[4][4] = {}, J[4][4] = {};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            g[i][j] = rep.A[i][j];
            g[i][j + 2] = rep.B[i][j];
            g[i + 2][j + 2] = rep.D[i][j];
        }
    J[0][2] = J[1][3] = 1;
    J[2][0] = J[3][1] = -1;
    long Jg[4][4] = {}, gtJg[4][4] = {};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int t = 0; t < 4; ++t) Jg[i][j] += J[i][t] * g[t][j];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int t = 0; t < 4; ++t) gtJg[i][j] += g[t][i] * Jg[t][j];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (gtJg[i][j] != p * J[i][j])
                throw InternalError("coset_reps: representative fails the similitude equation");
}

HeckeCosetSet build_coset_reps(long p) {
    HeckeCosetSet set;
    set.p = p;
    std::vector<Mat2> As = {Mat2{{{1, 0}, {0, 1}}}, Mat2{{{p, 0}, {0, p}}}, Mat2{{{p, 0}, {0, 1}}}};
    for (long b = 0; b < p; ++b) As.push_back(Mat2{{{1, b}, {0, p}}});
    for (const Mat2& A : As) {
        long det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
        Mat2 D{{{p * A[1][1] / det, -p * A[1][0] / det}, {-p * A[0][1] / det, p * A[0][0] / det}}};
        std::set<std::array<long, 4>> seen;
        for (long b1 = 0; b1 < p; ++b1)
            for (long b2 = 0; b2 < p; ++b2)
                for (long b3 = 0; b3 < p; ++b3)
                    for (long b4 = 0; b4 < p; ++b4) {
                        Mat2 B{{{b1, b2}, {b3, b4}}};
                        Mat2 BtD = mul2(transpose2(B), D);
                        if (BtD[0][1] != BtD[1][0]) continue;
                        seen.insert(canonical_b(B, D, p));
                    }
        for (const auto& c : seen) {
            CosetRep rep{A, Mat2{{{c[0], c[1]}, {c[2], c[3]}}}, D};
            verify_similitude(rep, p);
            set.reps.push_back(rep);
        }
    }
    return set;
}

}  // namespace

const HeckeCosetSet& coset_reps(long p) {
    if (!is_prime(p)) throw std::invalid_argument("coset_reps: p must be prime");
    static std::map<long, HeckeCosetSet> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(p);
    if (it == memo.end()) it = memo.emplace(p, build_coset_reps(p)).first;
    return it->second;
}

namespace {

// b(T) for a single index triple (any rank), as the coset sum
// p^{-3} sum_gamma (det A)^k a(p A^{-t} T A^{-1}) with trivial-phase filter.
Rat tp_coefficient(const SiegelExpansion& F, const HeckeCosetSet& cs, long n, long r, long m) {
    long p = cs.p;
    Rat acc(0);
    for (const CosetRep& rep : cs.reps) {
        long det = rep.A[0][0] * rep.A[1][1] - rep.A[0][1] * rep.A[1][0];
        Unimodular adj{rep.A[1][1], -rep.A[0][1], -rep.A[1][0], rep.A[0][0]};
        HalfIntMatrix N = transform(HalfIntMatrix{n, r, m}, adj);
        long q = det * det;
        if ((p * N.n) % q != 0 || (p * N.r) % q != 0 || (p * N.m) % q != 0) continue;
        long tn = p * N.n / q, tr = p * N.r / q, tm = p * N.m / q;
        // exponential phase tr(T' B A^t / p); nontrivial phases never occur
        // for these representatives once T' is integral
        Mat2 M = mul2(rep.B, transpose2(rep.A));
        long num = 2 * tn * M[0][0] + tr * (M[0][1] + M[1][0]) + 2 * tm * M[1][1];
        if (num % (2 * p) != 0)
            throw InternalError("apply_tp: nontrivial exponential phase encountered");
        acc += F.coeff(tn, tr, tm) * Rat(pow_int(det, static_cast<unsigned long>(F.weight)));
    }
    return acc / Rat(pow_int(p, 3));
}

}  // namespace

SiegelExpansion apply_tp(const SiegelExpansion& F, long p) {
    const HeckeCosetSet& cs = coset_reps(p);
    SiegelExpansion out;
    out.weight = F.weight;
    out.detmax4 = F.detmax4 / (p * p);
    out.box = F.box < 0 ? -1 : F.box / p;
    std::vector<HalfIntMatrix> keys = canonical_keys(out.detmax4, out.box);
    if (keys.empty())
        throw PrecisionError("apply_tp: input region too small; need det4 >= " +
                             std::to_string(3 * p * p) +
                             (F.box >= 0 ? " and box >= " + std::to_string(p) : ""));
    for (const HalfIntMatrix& T : keys) out.coeffs.emplace(T, tp_coefficient(F, cs, T.n, T.r, T.m));
    if (F.has_singular) {
        out.has_singular = true;
        out.a0 = tp_coefficient(F, cs, 0, 0, 0);
        long rmax = (static_cast<long>(F.rank1.size()) - 1) / p;
        out.rank1.assign(static_cast<size_t>(rmax) + 1, Rat(0));
        for (long c = 1; c <= rmax; ++c)
            out.rank1[static_cast<size_t>(c)] = tp_coefficient(F, cs, c, 0, 0);
    }
    return out;
}

Rat eigenvalue(const SiegelExpansion& F, long p) {
    SiegelExpansion TpF = apply_tp(F, p);
    std::optional<Rat> lambda;
    for (const auto& [key, b] : TpF.coeffs) {
        Rat a = F.coeff(key);
        if (!lambda && a != 0) lambda = b / a;
        if (lambda && b != *lambda * a)
            throw VerificationError("eigenvalue: not proportional at key (" +
                                    std::to_string(key.n) + "," + std::to_string(key.r) + "," +
                                    std::to_string(key.m) + ")");
    }
    if (!lambda) throw VerificationError("eigenvalue: form vanishes on the output region");
    if (TpF.has_singular) {
        if (TpF.a0 != *lambda * F.a0)
            throw VerificationError("eigenvalue: constant term not proportional");
        for (size_t c = 1; c < TpF.rank1.size(); ++c)
            if (TpF.rank1[c] != *lambda * F.rank1[c])
                throw VerificationError("eigenvalue: rank-1 row not proportional");
    }
    return *lambda;
}

namespace {

// Exact column solve with full-consistency verification: A x_j = rhs_j where
// A has one row per region key and one column per basis element.
std::vector<std::vector<Rat>> solve_columns(const std::vector<std::vector<Rat>>& rows, size_t nb) {
    size_t ncols = nb + nb;  // basis columns then image columns
    std::vector<std::vector<Rat>> work = rows;
    std::vector<size_t> pivot_col_of_row;
    size_t rank = 0;
    for (size_t col = 0; col < nb && rank < work.size(); ++col) {
        size_t piv = rank;
        while (piv < work.size() && work[piv][col] == 0) ++piv;
        if (piv == work.size()) continue;
        std::swap(work[rank], work[piv]);
        Rat inv = Rat(1) / work[rank][col];
        for (size_t j = 0; j < ncols; ++j) work[rank][j] *= inv;
        for (size_t i = 0; i < work.size(); ++i) {
            if (i == rank || work[i][col] == 0) continue;
            Rat f = work[i][col];
            for (size_t j = 0; j < ncols; ++j) work[i][j] -= f * work[rank][j];
        }
        pivot_col_of_row.push_back(col);
        ++rank;
    }
    if (rank < nb)
        throw VerificationError("tp_matrix: basis is rank-deficient on the common region");
    // rows beyond the rank must be identically zero, or the images are
    // outside the span
    for (size_t i = rank; i < work.size(); ++i)
        for (size_t j = 0; j < ncols; ++j)
            if (work[i][j] != 0)
                throw VerificationError("tp_matrix: image not contained in the basis span");
    std::vector<std::vector<Rat>> M(nb, std::vector<Rat>(nb, Rat(0)));
    for (size_t i = 0; i < rank; ++i)
        for (size_t j = 0; j < nb; ++j) M[pivot_col_of_row[i]][j] = work[i][nb + j];
    return M;
}

}  // namespace

std::vector<std::vector<Rat>> tp_matrix(const std::vector<const SiegelExpansion*>& basis, long p) {
    if (basis.empty()) throw std::invalid_argument("tp_matrix: empty basis");
    for (const SiegelExpansion* F : basis)
        if (F->detmax4 != basis[0]->detmax4 || F->box != basis[0]->box)
            throw std::invalid_argument("tp_matrix: basis regions differ");
    std::vector<SiegelExpansion> images;
    images.reserve(basis.size());
    for (const SiegelExpansion* F : basis) images.push_back(apply_tp(*F, p));
    size_t nb = basis.size();
    std::vector<std::vector<Rat>> rows;
    for (const HalfIntMatrix& key : canonical_keys(images[0].detmax4, images[0].box)) {
        std::vector<Rat> row(2 * nb);
        for (size_t j = 0; j < nb; ++j) {
            row[j] = basis[j]->coeff(key);
            row[nb + j] = images[j].coeff(key);
        }
        rows.push_back(std::move(row));
    }
    return solve_columns(rows, nb);
}

std::vector<SiegelExpansion> weight20_basis(long detmax4, long box) {
    long din = std::max(detmax4, 4 * box * box);
    SiegelExpansion l10 = sk_lift(cusp_form_10_12(10, din), din);
    SiegelExpansion l12 = sk_lift(cusp_form_10_12(12, din), din);
    SiegelExpansion e4 = siegel_eisenstein2(4, din);
    SiegelExpansion e6 = siegel_eisenstein2(6, din);
    SiegelExpansion e46 = multiply(e4, e6, detmax4, box);
    SiegelExpansion e44 = multiply(e4, e4, detmax4, box);
    std::vector<SiegelExpansion> basis;
    basis.push_back(multiply(l10, l10, detmax4, box));
    basis.push_back(multiply(e46, l10, detmax4, box));
    basis.push_back(multiply(e44, l12, detmax4, box));
    return basis;
}

NonliftReport nonlift20(long detmax4, long box) {
    return nonlift20_from_basis(weight20_basis(detmax4, box));
}

NonliftReport nonlift20_from_basis(const std::vector<SiegelExpansion>& basis) {
    if (basis.size() != 3) throw std::invalid_argument("nonlift20: need the 3-element basis");
    std::vector<std::vector<Rat>> M =
        tp_matrix({&basis[0], &basis[1], &basis[2]}, 2);
    S38Eigen s38 = eigenbasis_s38();
    const Int c = pow_int(2, 19) + pow_int(2, 18);
    Rat Q = Rat(s38.trace + 2 * c);
    Rat R = Rat(s38.det + c * s38.trace + c * c);
    // characteristic polynomial x^3 - c2 x^2 + c1 x - c0
    Rat c2 = M[0][0] + M[1][1] + M[2][2];
    Rat c1 = M[0][0] * M[1][1] - M[0][1] * M[1][0] + M[0][0] * M[2][2] - M[0][2] * M[2][0] +
             M[1][1] * M[2][2] - M[1][2] * M[2][1];
    Rat c0 = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
             M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
             M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    // factor out the paired quadratic x^2 - Q x + R exactly
    Rat eta2 = c2 - Q;
    if (c1 != R + eta2 * Q || c0 != eta2 * R)
        throw VerificationError("nonlift20: paired eigenvalue quadratic does not divide");
    if (eta2 * eta2 - Q * eta2 + R == 0)
        throw VerificationError("nonlift20: eigenvalue collides with the paired family");
    // eigenvector of M for eta2: cross product of two rows of (M - eta2 I)
    std::array<std::array<Rat, 3>, 3> A{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A[i][j] = M[i][j] - (i == j ? eta2 : Rat(0));
    std::array<Rat, 3> v{};
    for (int a = 0; a < 3 && v == std::array<Rat, 3>{}; ++a) {
        int b = (a + 1) % 3;
        v = {A[a][1] * A[b][2] - A[a][2] * A[b][1], A[a][2] * A[b][0] - A[a][0] * A[b][2],
             A[a][0] * A[b][1] - A[a][1] * A[b][0]};
    }
    if (v == std::array<Rat, 3>{}) throw InternalError("nonlift20: eigenvector not found");
    for (int i = 0; i < 3; ++i) {
        Rat check(0);
        for (int j = 0; j < 3; ++j) check += M[i][j] * v[static_cast<size_t>(j)];
        if (check != eta2 * v[static_cast<size_t>(i)])
            throw InternalError("nonlift20: eigenvector equation fails");
    }
    NonliftReport rep;
    rep.F = linear_combination(
        {{v[0], &basis[0]}, {v[1], &basis[1]}, {v[2], &basis[2]}});
    Rat lead(0);
    for (const HalfIntMatrix& key : canonical_keys(rep.F.detmax4, rep.F.box)) {
        Rat x = rep.F.coeff(key);
        if (x != 0) {
            lead = x;
            break;
        }
    }
    if (lead == 0) throw VerificationError("nonlift20: eigenvector expansion vanishes");
    for (auto& [key, val] : rep.F.coeffs) val /= lead;
    rep.eta2 = eta2;
    if (eigenvalue(rep.F, 2) != eta2) throw InternalError("nonlift20: T(2) eigenvalue mismatch");
    rep.eta3 = eigenvalue(rep.F, 3);
    rep.m2 = M;
    QuadExt cq{Rat(c), Rat(0), s38.core};
    rep.paired_plus = s38.a2_plus() + cq;
    rep.paired_minus = s38.a2_minus() + cq;
    return rep;
}

}  // namespace sk2
