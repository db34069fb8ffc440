#pragma once

#include <complex>
#include <optional>

#include "sk2/maass.hpp"
#include "sk2/rational.hpp"

namespace sk2 {

// How a rational prime behaves in the imaginary quadratic field attached to
// a Bessel model's torus.
enum class Splitting { Inert, Split, Ramified };

// The local spherical value U^{1,0}(a, b) = a + 1/a + b + 1/b - gamma / sqrt(p)
// with gamma = 0 (inert), Lambda + conj(Lambda) (split), Lambda (ramified).
// Lambda is required for the non-inert cases.
std::complex<double> sugano_u10(long p, std::complex<double> a, std::complex<double> b,
                                Splitting splitting,
                                std::optional<std::complex<double>> lambda = std::nullopt);

// Index of the double-coset matrix h_p(ell, m) = diag(p^{ell+2m}, p^{ell+m}, 1, p^m).
struct BesselCell {
    long p = 2;
    long ell = 0;
    long m = 0;
};

// Local representation types carrying a Bessel model with trivial character.
enum class LocalType { IIbSpherical, IIbEigen, Vb, VIb };

// A value known exactly up to sign: sign in {-1, 0, +1} (0 = unspecified by
// the closed form) and the square of the magnitude as an exact rational.
struct SignedMagnitude {
    int sign = 0;
    Rat mag_sq;
};

// Closed-form |B(h_p(ell, m)) / B(1)|:
//   Vb   magnitude p^{-2(ell+m)}, sign (-1)^{ell+m}
//   VIb  magnitude p^{-2(ell+m)}, sign +1
//   IIbEigen  magnitude p^{-3(ell+m)/2}, sign unspecified
// IIbSpherical has no closed form here; use the bound or empirical paths.
SignedMagnitude exact_value(LocalType kind, const BesselCell& cell);

// Square of the spherical IIb bound (ell+1)(2 ell + 2m + 1) p^{-ell - 3m/2},
// exact: (ell+1)^2 (2 ell + 2m + 1)^2 / p^{2 ell + 3m}.
Rat iib_spherical_bound_sq(const BesselCell& cell);

// The bound itself, for display.
double iib_spherical_bound(const BesselCell& cell);

// Single-prime Bessel ratio B(h_p(ell, m)) / B(1) read off a lift:
// a(T) / (p^{(ell+m) k} a(S)) with T = p^ell diag(p^m, 1) S diag(p^m, 1).
// Requires S of fundamental discriminant with a(S) != 0; throws
// PrecisionError when T leaves the completeness region.
Rat empirical_ratio(const SiegelExpansion& F, const HalfIntMatrix& S, long p, long ell, long m);

}  // namespace sk2
