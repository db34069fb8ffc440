#pragma once

#include <vector>

#include "sk2/rational.hpp"

namespace sk2 {

// Truncated q-expansion with exact rational coefficients, indices 0..precision.
class QSeries {
public:
    explicit QSeries(long precision) : c_(static_cast<size_t>(precision) + 1) {
        if (precision < 0) throw std::invalid_argument("QSeries: negative precision");
    }

    long precision() const { return static_cast<long>(c_.size()) - 1; }

    const Rat& operator[](long n) const {
        if (n < 0 || n > precision())
            throw PrecisionError("QSeries: coefficient beyond precision " +
                                 std::to_string(precision()));
        return c_[static_cast<size_t>(n)];
    }
    Rat& at(long n) { return c_[static_cast<size_t>(n)]; }

    // Product truncated at min(trunc, precision sum constraints). Uses an
    // integer fast path when both factors have integral coefficients.
    QSeries mul(const QSeries& o, long trunc) const;

    QSeries add(const QSeries& o) const;
    QSeries scale(const Rat& s) const;
    bool is_integral() const;

private:
    std::vector<Rat> c_;
};

// Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.
QSeries eisenstein(int k, long precision);

// Discriminant cusp form: q prod (1-q^n)^24, via three squarings of the
// sparse cube prod(1-q^n)^3 = sum_k (-1)^k (2k+1) q^{k(k+1)/2}.
QSeries delta(long precision);

// Integer-coefficient Hecke eigenform in a one-dimensional cusp space.
struct EllipticEigenform {
    int weight = 0;
    std::vector<Int> a;  // a[0] = 0, a[1] = 1

    long precision() const { return static_cast<long>(a.size()) - 1; }
    const Int& coeff(long n) const {
        if (n < 1 || n > precision())
            throw PrecisionError("EllipticEigenform: n beyond precision");
        return a[static_cast<size_t>(n)];
    }
    // lambda(p) = a(p) / p^{(weight-1)/2}, reported as a double.
    double normalized(long p) const;
};

// Weights 18, 22, 26: Delta*E6, Delta*E4*E6, Delta*E4^2*E6.
EllipticEigenform newform_onedim(int k, long precision);

// Weight-38 two-dimensional cusp space: T(2) data on the monomial basis
// {Delta E4^2 E6^3, Delta E4^5 E6}; a_{T(2)g}(n) = a_g(2n) + 2^37 a_g(n/2).
struct S38Eigen {
    Rat m[2][2];    // T(2) matrix on the monomial basis (columns = images)
    std::vector<Int> g1, g2;  // monomial basis coefficients, index 0 unused
    Int trace;      // of T(2), integral
    Int det;
    Int disc;       // trace^2 - 4 det > 0
    Int core;       // squarefree part of disc
    Int scale;      // disc = scale^2 * core
    QuadExt a2_plus() const;   // (trace + scale*sqrt(core)) / 2
    QuadExt a2_minus() const;
    // Coefficients of the normalized eigenform with a(2) = a2 (a(1) = 1).
    std::vector<QuadExt> eigenform(const QuadExt& a2, long precision) const;
};
S38Eigen eigenbasis_s38();

}  // namespace sk2
