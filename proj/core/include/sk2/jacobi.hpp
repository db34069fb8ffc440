#pragma once

#include <vector>

#include "sk2/qseries.hpp"
#include "sk2/rational.hpp"

namespace sk2 {

// Index-1 Jacobi form of even weight, stored by discriminant: the (n, r)
// Fourier coefficient is C(4n - r^2), zero when 4n - r^2 < 0 or when
// 4n - r^2 is 1 or 2 mod 4.
struct JacobiIndex1Form {
    int weight = 0;
    bool cusp = false;
    std::vector<Rat> C;  // indexed by D = 0..max_d()

    long max_d() const { return static_cast<long>(C.size()) - 1; }

    // Coefficient at discriminant D; D beyond max_d() is a precision error.
    Rat coeff_d(long D) const;

    // Coefficient at (n, r), i.e. coeff_d(4n - r^2).
    Rat coeff(long n, long r) const { return coeff_d(4 * n - r * r); }

    JacobiIndex1Form add(const JacobiIndex1Form& o) const;
    JacobiIndex1Form scale(const Rat& s) const;
};

// Jacobi Eisenstein series of weight k, index 1: C(D) = H(k-1, D) / H(k-1, 0).
JacobiIndex1Form jacobi_eisenstein(int k, long maxD);

// Product of an elliptic modular form f (q-expansion, given weight) with an
// index-1 Jacobi form: c'(n, r) = sum_j f(j) c(n - j, r). The result is
// computed on an (n, r) grid and re-checked to depend on 4n - r^2 only.
JacobiIndex1Form scalar_jacobi_product(const QSeries& f, int fweight, const JacobiIndex1Form& phi,
                                       long maxD);

// The index-1 cusp forms of weight 10 and 12, normalized so C(3) = 1:
// (E6 E41 - E4 E61)/144 and (E4^2 E41 - E6 E61)/144.
JacobiIndex1Form cusp_form_10_12(int weight, long maxD);

// Petersson norm ratio of the m-th Fourier-Jacobi coefficient of the lift of
// f (weight 2k-2, level N squarefree) to the first:
// sum over d | m with gcd(d, N) = 1 of alpha(d) d^{k-2} a_f(m/d),
// where alpha(d) = d * prod_{p | d} (1 + 1/p).
Rat fj_norm_ratio(const EllipticEigenform& f, int k, long N, long m);

}  // namespace sk2
