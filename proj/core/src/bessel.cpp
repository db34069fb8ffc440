#include "sk2/bessel.hpp"

#include <cmath>
#include <stdexcept>

#include "sk2/arith.hpp"
#include "sk2/errors.hpp"

namespace sk2 {

namespace {

void require_cell(const BesselCell& cell) {
    if (cell.p < 2 || cell.ell < 0 || cell.m < 0)
        throw std::invalid_argument("BesselCell: need p >= 2 and ell, m >= 0");
}

}  // namespace

std::complex<double> sugano_u10(long p, std::complex<double> a, std::complex<double> b,
                                Splitting splitting, std::optional<std::complex<double>> lambda) {
    if (a == std::complex<double>(0) || b == std::complex<double>(0))
        throw std::invalid_argument("sugano_u10: a, b must be nonzero");
    if (splitting != Splitting::Inert && !lambda)
        throw std::invalid_argument("sugano_u10: Lambda required unless p is inert");
    std::complex<double> gamma(0);
    if (splitting == Splitting::Split) gamma = *lambda + std::conj(*lambda);
    if (splitting == Splitting::Ramified) gamma = *lambda;
    return a + 1.0 / a + b + 1.0 / b - gamma / std::sqrt(static_cast<double>(p));
}

SignedMagnitude exact_value(LocalType kind, const BesselCell& cell) {
    require_cell(cell);
    unsigned long s = static_cast<unsigned long>(cell.ell + cell.m);
    SignedMagnitude out;
    switch (kind) {
        case LocalType::Vb:
            out.sign = (s % 2 == 0) ? 1 : -1;
            out.mag_sq = Rat(1) / Rat(pow_int(cell.p, 4 * s));
            return out;
        case LocalType::VIb:
            out.sign = 1;
            out.mag_sq = Rat(1) / Rat(pow_int(cell.p, 4 * s));
            return out;
        case LocalType::IIbEigen:
            out.sign = 0;
            out.mag_sq = Rat(1) / Rat(pow_int(cell.p, 3 * s));
            return out;
        case LocalType::IIbSpherical:
            throw std::invalid_argument(
                "exact_value: IIbSpherical has no closed form; use the bound or empirical paths");
    }
    throw InternalError("exact_value: unknown local type");
}

Rat iib_spherical_bound_sq(const BesselCell& cell) {
    require_cell(cell);
    Int num = Int(cell.ell + 1) * Int(2 * cell.ell + 2 * cell.m + 1);
    return Rat(num * num) /
           Rat(pow_int(cell.p, static_cast<unsigned long>(2 * cell.ell + 3 * cell.m)));
}

double iib_spherical_bound(const BesselCell& cell) {
    return std::sqrt(iib_spherical_bound_sq(cell).get_d());
}

Rat empirical_ratio(const SiegelExpansion& F, const HalfIntMatrix& S, long p, long ell, long m) {
    require_cell(BesselCell{p, ell, m});
    if (!S.is_pd()) throw std::invalid_argument("empirical_ratio: S must be positive definite");
    if (factor_discriminant(S.disc()).f != 1)
        throw std::invalid_argument("empirical_ratio: disc(S) must be fundamental");
    Rat aS = F.coeff(S);
    if (aS == 0) throw std::invalid_argument("empirical_ratio: a(S) = 0");
    Int pl = pow_int(p, static_cast<unsigned long>(ell));
    Int pm = pow_int(p, static_cast<unsigned long>(m));
    Int n = Int(S.n) * pl * pm * pm;
    Int r = Int(S.r) * pl * pm;
    Int mm = Int(S.m) * pl;
    Rat aT = F.coeff(n.get_si(), r.get_si(), mm.get_si());
    unsigned long k = static_cast<unsigned long>(F.weight);
    return aT / (Rat(pow_int(pl * pm, k)) * aS);
}

}  // namespace sk2
