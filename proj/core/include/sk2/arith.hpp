#pragma once

#include <map>
#include <vector>

#include "sk2/rational.hpp"

namespace sk2 {

// Kronecker symbol (d|n), full domain including n <= 0 and even n.
int kronecker(long d, long n);

// D = d * f^2 with d a fundamental discriminant (or d = 1 when D is a
// positive square). Requires D != 0 and D = 0 or 1 mod 4.
struct DiscFactor {
    long d;
    long f;
};
DiscFactor factor_discriminant(long D);

// 0 split, -1 inert, 1 ramified is NOT the convention here: returns the
// kronecker value chi_d(p) in {-1, 0, 1} (0 = ramified).
int splitting_symbol(long d, long p);

const Rat& bernoulli(int m);
Rat bernoulli_poly(int r, const Rat& x);

// Generalized Bernoulli number B_{r, chi_d} for fundamental d (or d = 1).
Rat gen_bernoulli(int r, long d);

// Cohen class number H(r, N): H(r, 0) = zeta(1 - 2r); for N > 0 with
// (-1)^r N = d f^2 = 0, 1 mod 4 it is L(1-r, chi_d) * sum_{e|f} mu(e)
// chi_d(e) e^{r-1} sigma_{2r-1}(f/e); otherwise 0.
Rat cohen_h(int r, long N);

// Dense row H(r, N) for 0 <= N <= maxN (shares character sums across N).
std::vector<Rat> cohen_table(int r, long maxN);

// Hurwitz class number by reduced-form enumeration: forms (a, b, c) of
// discriminant -N with |b| <= a <= c (b >= 0 when |b| = a or a = c), weight
// 1/2 for forms proportional to x^2 + y^2, 1/3 for x^2 + xy + y^2.
// H(0) = -1/12; H(N) = 0 for N = 1, 2 mod 4.
Rat hurwitz(long N);

std::vector<std::pair<long, int>> factorize(long n);
std::vector<long> divisors(long n);
int moebius(long n);
Int divisor_sigma(long n, int k);
std::vector<long> primes_upto(long n);

}  // namespace sk2
