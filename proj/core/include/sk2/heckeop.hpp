#pragma once

#include <array>
#include <vector>

#include "sk2/maass.hpp"
#include "sk2/qseries.hpp"

namespace sk2 {

// One right-coset representative in block upper-triangular form
// gamma = [[A, B], [0, D]] with A^t D = p I and B^t D symmetric.
struct CosetRep {
    std::array<std::array<long, 2>, 2> A, B, D;
};

struct HeckeCosetSet {
    long p = 0;
    std::vector<CosetRep> reps;
};

// Complete duplicate-free right-coset representative set for the degree-2
// Hecke operator at p, built by enumerating Hermite-form A blocks and B
// blocks reduced modulo the symmetric lattice. Every representative is
// checked against the similitude equation gamma^t J gamma = p J. Memoized.
const HeckeCosetSet& coset_reps(long p);

// T(p) acting on a truncated expansion. The output is complete on the
// shrunk region (detmax4 / p^2, box / p); the singular part is transformed
// when present.
SiegelExpansion apply_tp(const SiegelExpansion& F, long p);

// Eigenvalue of T(p) on F: the ratio at the first canonical key with
// nonzero coefficient, asserted proportional across the whole output
// region (VerificationError otherwise).
Rat eigenvalue(const SiegelExpansion& F, long p);

// Matrix M of T(p) on a basis: T(p) F_j = sum_i M[i][j] F_i, solved exactly
// on the shrunk common region and verified on every coefficient.
std::vector<std::vector<Rat>> tp_matrix(const std::vector<const SiegelExpansion*>& basis, long p);

// The weight-20 cuspidal product basis {L10^2, E4 E6 L10, E4^2 L12} on the
// region (detmax4, box).
std::vector<SiegelExpansion> weight20_basis(long detmax4, long box);

// Diagonalization certificate for the weight-20 space: the T(2) matrix on
// the product basis, the two paired eigenvalues a_g(2) + 2^19 + 2^18 coming
// from the weight-38 elliptic eigenforms g, and the remaining eigenvector
// (normalized so its first nonzero canonical coefficient is 1) with its
// T(2) and T(3) eigenvalues.
struct NonliftReport {
    SiegelExpansion F;
    Rat eta2, eta3;
    std::vector<std::vector<Rat>> m2;
    QuadExt paired_plus, paired_minus;
};

NonliftReport nonlift20(long detmax4, long box);

// Same, from an already-built weight-20 product basis (ordered as
// weight20_basis returns it).
NonliftReport nonlift20_from_basis(const std::vector<SiegelExpansion>& basis);

}  // namespace sk2
