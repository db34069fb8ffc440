#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sk2/qseries.hpp"
#include "sk2/rational.hpp"

namespace sk2 {

// The five global-parameter types for degree-2 eigenforms. Each carries
// just enough data to evaluate the spin eigenvalue lambda(p) in the
// analytic normalization.
enum class PacketKind { General, Yoshida, SaitoKurokawa, Soudry, HowePS };

// Evaluation data for one parameter type. Eigenvalue streams are elliptic
// eigenforms read in the analytic normalization a(p) / p^{(w-1)/2};
// quadratic characters are fundamental discriminants (1 = trivial) and are
// evaluated through the Kronecker symbol.
struct ArthurSpec {
    PacketKind kind = PacketKind::General;
    std::shared_ptr<const EllipticEigenform> f1, f2;  // streams, per kind
    std::string id1, id2;  // stream labels, used when aggregating combinations
    long chi0 = 1;         // SaitoKurokawa character
    long chi1 = 0, chi2 = 0;  // HowePS characters, required distinct
};

ArthurSpec general_spec(std::shared_ptr<const EllipticEigenform> f, std::string id);
ArthurSpec yoshida_spec(std::shared_ptr<const EllipticEigenform> f1, std::string id1,
                        std::shared_ptr<const EllipticEigenform> f2, std::string id2);
ArthurSpec sk_spec(std::shared_ptr<const EllipticEigenform> f, std::string id, long chi0);
ArthurSpec soudry_spec(std::shared_ptr<const EllipticEigenform> f, std::string id);
ArthurSpec howe_ps_spec(long chi1, long chi2);

// lambda(p) in the exact two-component form x + y sqrt(p):
//   General        lambda_Pi(p)
//   Yoshida        lambda_1(p) + lambda_2(p)
//   SaitoKurokawa  lambda_0(p) + chi_0(p) (p^{1/2} + p^{-1/2})
//   Soudry         (p^{1/2} + p^{-1/2}) lambda_0(p)
//   HowePS         (chi_1(p) + chi_2(p)) (p^{1/2} + p^{-1/2})
// Throws std::domain_error when p divides a character conductor and
// PrecisionError when p exceeds a stream's precision.
HalfPow lambda_p(const ArthurSpec& spec, long p);

// Multiplicative eigenvalue sequence eta(m), 1 <= m <= mmax, of the lift of
// f (elliptic weight 2k-2), from the local generating function
//   sum_j eta(p^j) x^j =
//     (1 - p^{2k-4} x^2) /
//     [(1 - a_f(p) x + p^{2k-3} x^2)(1 - p^{k-1} x)(1 - p^{k-2} x)],
// so eta(p) = a_f(p) + p^{k-1} + p^{k-2}.
std::vector<Int> sk_eta_stream(const EllipticEigenform& f, int k, long mmax);

// Linear combination a_R(p) = sum_i r_i lambda_i(p) with sum_i r_i != 0.
struct ComboTerm {
    Rat r;
    ArthurSpec spec;
};
struct ComboSpec {
    std::vector<ComboTerm> terms;
};

// Case1: every aggregated coefficient of the (p^{1/2} + p^{-1/2}) terms
// vanishes, so a_R(p) is a bounded combination of tempered streams.
// Case2: some aggregate survives and a_R(p) grows like sqrt(p).
enum class ComboCase { Case1, Case2 };

// Symbolic classification: sums r_i over constituents contributing the same
// half-power source (a shared character, or a shared Soudry stream) and
// tests whether every aggregate is zero.
ComboCase combo_classify(const ComboSpec& R);

// a_R(p), exact. Same error behavior as lambda_p.
HalfPow combo_value(const ComboSpec& R, long p);

// (p, a_R(p)) for primes p <= pmax, skipping primes that ramify in any
// constituent character.
std::vector<std::pair<long, double>> combo_stream(const ComboSpec& R, long pmax);

// One row of a partial-sum table over an arithmetic progression.
struct SelbergRow {
    long x = 0;
    double sum = 0;     // sum_{p <= x, p = a mod M} s(p) / p^e
    double loglog = 0;  // log log x
    double drift = 0;   // sum - loglog / phi(M)
};

// Partial sums of a prime-indexed stream over p = a mod M at the cut
// points of xgrid (ascending, each >= 3). Requires gcd(a, M) = 1 and
// e in {1, 3/2, 2}.
std::vector<SelbergRow> selberg_sums(const std::vector<std::pair<long, double>>& stream, long a,
                                     long M, double e, const std::vector<long>& xgrid);

// Number of sign changes among consecutive nonzero stream values lying in
// the progression p = a mod M.
long count_sign_changes(const std::vector<std::pair<long, double>>& stream, long a, long M);

}  // namespace sk2
