#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sk2/jacobi.hpp"
#include "sk2/qseries.hpp"
#include "sk2/quad.hpp"

namespace sk2 {

// Truncated degree-2 Siegel expansion. Positive-definite coefficients are
// stored on canonical reduced keys, complete for 4 det T <= detmax4 and,
// when box >= 0, additionally n, m <= box (box = -1: no constraint). The
// singular part (constant term + rank-1 row indexed by content) is carried
// only for non-cusp expansions; cusp expansions have it identically zero.
struct SiegelExpansion {
    int weight = 0;
    long detmax4 = 0;
    long box = -1;
    bool has_singular = false;
    Rat a0;
    std::vector<Rat> rank1;  // [0] unused; complete through size() - 1
    std::map<HalfIntMatrix, Rat> coeffs;

    // a(T) for any positive-semidefinite T: reduces to the canonical class
    // and routes to the right storage; outside the completeness region it
    // throws PrecisionError.
    Rat coeff(const HalfIntMatrix& T) const;
    Rat coeff(long n, long r, long m) const { return coeff(HalfIntMatrix{n, r, m}); }

    bool in_region(const HalfIntMatrix& canonical) const {
        return canonical.det4() <= detmax4 && (box < 0 || canonical.m <= box);
    }
};

// Canonical reduced triples (0 <= r <= n <= m) with 0 < 4nm - r^2 <= detmax4
// and, if box >= 0, n, m <= box; sorted by (det4, n, r).
std::vector<HalfIntMatrix> canonical_keys(long detmax4, long box = -1);

// Maass lift of an index-1 Jacobi cusp form of weight k:
// a(n, r, m) = sum_{d | gcd(n, r, m)} d^{k-1} C((4nm - r^2)/d^2).
SiegelExpansion sk_lift(const JacobiIndex1Form& phi, long detmax4);

// Degree-2 Siegel Eisenstein series for k in {4, 6}: positive-definite part
// is kappa_k times the lift formula applied to the Jacobi Eisenstein series,
// rank-1 row equals the elliptic E_k coefficients, constant term 1. kappa_k
// is solved from the diagonal-restriction equation at (n, m) = (1, 1) and
// the full identity is then asserted on every cell in range.
SiegelExpansion siegel_eisenstein2(int k, long detmax4);

// Product of expansions, complete for 4 det T <= detmax4 and n, m <= box.
// Inputs must be complete for 4 det <= 4 box^2 with boxes >= box, and carry
// rank-1 data through content box when non-cusp.
SiegelExpansion multiply(const SiegelExpansion& F, const SiegelExpansion& G, long detmax4,
                         long box);

// Diagonal (Witt) pullback coefficient at (n, m): sum of a(n, r, m) over all
// integers r with r^2 <= 4nm.
Rat witt_pullback(const SiegelExpansion& F, long n, long m);

// Degree-lowering operator: series with value a0 at 0 and the rank-1
// coefficient at content n >= 1.
QSeries phi_operator(const SiegelExpansion& F, long precision);

// Exact linear combination on the common completeness region.
SiegelExpansion linear_combination(const std::vector<std::pair<Rat, const SiegelExpansion*>>& terms);

}  // namespace sk2
