#include "sk2/arthur.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sk2/arith.hpp"
#include "sk2/errors.hpp"

namespace sk2 {

namespace {

bool is_character_disc(long d) {
    if (d == 1) return true;
    if (d == 0 || (((d % 4) + 4) % 4 != 0 && ((d % 4) + 4) % 4 != 1)) return false;
    DiscFactor df = factor_discriminant(d);
    return df.d == d && df.f == 1;
}

void require_character(long d, const char* what) {
    if (!is_character_disc(d))
        throw std::invalid_argument(std::string(what) + ": not a fundamental discriminant");
}

// a_f(p) / p^{(w-1)/2} = (a_f(p) / p^{w/2}) sqrt(p); w is even for every
// stream used here.
Rat stream_y(const EllipticEigenform& f, long p) {
    if (f.weight % 2 != 0) throw std::invalid_argument("lambda_p: odd-weight stream");
    return Rat(f.coeff(p)) / Rat(pow_int(p, static_cast<unsigned long>(f.weight / 2)));
}

int character_value(long d, long p, const char* what) {
    int v = splitting_symbol(d, p);
    if (d != 1 && v == 0) throw std::domain_error(std::string(what) + ": ramified prime");
    return v;
}

}  // namespace

ArthurSpec general_spec(std::shared_ptr<const EllipticEigenform> f, std::string id) {
    if (!f) throw std::invalid_argument("general_spec: null stream");
    ArthurSpec s;
    s.kind = PacketKind::General;
    s.f1 = std::move(f);
    s.id1 = std::move(id);
    return s;
}

ArthurSpec yoshida_spec(std::shared_ptr<const EllipticEigenform> f1, std::string id1,
                        std::shared_ptr<const EllipticEigenform> f2, std::string id2) {
    if (!f1 || !f2) throw std::invalid_argument("yoshida_spec: null stream");
    ArthurSpec s;
    s.kind = PacketKind::Yoshida;
    s.f1 = std::move(f1);
    s.id1 = std::move(id1);
    s.f2 = std::move(f2);
    s.id2 = std::move(id2);
    return s;
}

ArthurSpec sk_spec(std::shared_ptr<const EllipticEigenform> f, std::string id, long chi0) {
    if (!f) throw std::invalid_argument("sk_spec: null stream");
    require_character(chi0, "sk_spec");
    ArthurSpec s;
    s.kind = PacketKind::SaitoKurokawa;
    s.f1 = std::move(f);
    s.id1 = std::move(id);
    s.chi0 = chi0;
    return s;
}

ArthurSpec soudry_spec(std::shared_ptr<const EllipticEigenform> f, std::string id) {
    if (!f) throw std::invalid_argument("soudry_spec: null stream");
    ArthurSpec s;
    s.kind = PacketKind::Soudry;
    s.f1 = std::move(f);
    s.id1 = std::move(id);
    return s;
}

ArthurSpec howe_ps_spec(long chi1, long chi2) {
    require_character(chi1, "howe_ps_spec");
    require_character(chi2, "howe_ps_spec");
    if (chi1 == chi2) throw std::invalid_argument("howe_ps_spec: characters must be distinct");
    ArthurSpec s;
    s.kind = PacketKind::HowePS;
    s.chi1 = chi1;
    s.chi2 = chi2;
    return s;
}

HalfPow lambda_p(const ArthurSpec& spec, long p) {
    const Rat half_sum = Rat(p + 1, p);  // (p^{1/2} + p^{-1/2}) / sqrt(p)
    switch (spec.kind) {
        case PacketKind::General:
            return {p, Rat(0), stream_y(*spec.f1, p)};
        case PacketKind::Yoshida:
            return {p, Rat(0), stream_y(*spec.f1, p) + stream_y(*spec.f2, p)};
        case PacketKind::SaitoKurokawa: {
            int chi = character_value(spec.chi0, p, "lambda_p");
            return {p, Rat(0), stream_y(*spec.f1, p) + Rat(chi) * half_sum};
        }
        case PacketKind::Soudry:
            // (sqrt(p) + 1/sqrt(p)) * y0 sqrt(p) = (p + 1) y0, rational
            return {p, Rat(p + 1) * stream_y(*spec.f1, p), Rat(0)};
        case PacketKind::HowePS: {
            int c1 = character_value(spec.chi1, p, "lambda_p");
            int c2 = character_value(spec.chi2, p, "lambda_p");
            return {p, Rat(0), Rat(c1 + c2) * half_sum};
        }
    }
    throw InternalError("lambda_p: unknown packet kind");
}

std::vector<Int> sk_eta_stream(const EllipticEigenform& f, int k, long mmax) {
    if (mmax < 1) throw std::invalid_argument("sk_eta_stream: mmax < 1");
    if (f.weight != 2 * k - 2) throw std::invalid_argument("sk_eta_stream: weight must be 2k-2");
    if (f.precision() < mmax) throw PrecisionError("sk_eta_stream: stream precision too short");
    std::vector<Int> eta(static_cast<size_t>(mmax) + 1, Int(0));
    eta[1] = 1;
    std::map<long, std::vector<Int>> local;
    for (long p : primes_upto(mmax)) {
        Int ap = f.coeff(p);
        Int A = pow_int(p, static_cast<unsigned long>(k - 1));
        Int B = pow_int(p, static_cast<unsigned long>(k - 2));
        Int Q = A * A / p;  // p^{2k-3}
        // denominator (1 - a_p x + Q x^2)(1 - A x)(1 - B x)
        Int d1 = -ap - A - B;
        Int d2 = Q + A * B + ap * (A + B);
        Int d3 = -Q * (A + B) - ap * A * B;
        Int d4 = Q * A * B;
        Int n2 = -(B * B);  // numerator 1 - p^{2k-4} x^2
        long jmax = 0;
        for (long q = 1; q <= mmax / p; q *= p) ++jmax;
        std::vector<Int> loc(static_cast<size_t>(jmax) + 1);
        const Int d[5] = {Int(1), d1, d2, d3, d4};
        for (long j = 0; j <= jmax; ++j) {
            Int v = j == 0 ? Int(1) : (j == 2 ? n2 : Int(0));
            for (long i = 1; i <= std::min<long>(j, 4); ++i)
                v -= d[i] * loc[static_cast<size_t>(j - i)];
            loc[static_cast<size_t>(j)] = v;
        }
        if (jmax >= 1 && loc[1] != ap + A + B)
            throw InternalError("sk_eta_stream: local recurrence inconsistent at j = 1");
        local.emplace(p, std::move(loc));
    }
    for (long m = 2; m <= mmax; ++m) {
        long p = m;
        for (long q = 2; q * q <= m; ++q)
            if (m % q == 0) {
                p = q;
                break;
            }
        long v = 0, rest = m;
        while (rest % p == 0) {
            rest /= p;
            ++v;
        }
        eta[static_cast<size_t>(m)] =
            local.at(p)[static_cast<size_t>(v)] * eta[static_cast<size_t>(rest)];
    }
    return eta;
}

namespace {

void require_combo(const ComboSpec& R) {
    if (R.terms.empty()) throw std::invalid_argument("combo: empty combination");
    Rat total(0);
    for (const ComboTerm& t : R.terms) total += t.r;
    if (total == 0) throw std::invalid_argument("combo: sum of coefficients must be nonzero");
}

}  // namespace

ComboCase combo_classify(const ComboSpec& R) {
    require_combo(R);
    std::map<std::string, Rat> agg;
    for (const ComboTerm& t : R.terms) {
        switch (t.spec.kind) {
            case PacketKind::SaitoKurokawa:
                agg["chi:" + std::to_string(t.spec.chi0)] += t.r;
                break;
            case PacketKind::Soudry:
                agg["f:" + t.spec.id1] += t.r;
                break;
            case PacketKind::HowePS:
                agg["chi:" + std::to_string(t.spec.chi1)] += t.r;
                agg["chi:" + std::to_string(t.spec.chi2)] += t.r;
                break;
            case PacketKind::General:
            case PacketKind::Yoshida:
                break;
        }
    }
    for (const auto& [key, sum] : agg)
        if (sum != 0) return ComboCase::Case2;
    return ComboCase::Case1;
}

HalfPow combo_value(const ComboSpec& R, long p) {
    require_combo(R);
    HalfPow acc(p, Rat(0), Rat(0));
    for (const ComboTerm& t : R.terms) acc += lambda_p(t.spec, p) * t.r;
    return acc;
}

std::vector<std::pair<long, double>> combo_stream(const ComboSpec& R, long pmax) {
    require_combo(R);
    auto ramified = [&](long p) {
        for (const ComboTerm& t : R.terms) {
            if (t.spec.kind == PacketKind::SaitoKurokawa && t.spec.chi0 != 1 &&
                splitting_symbol(t.spec.chi0, p) == 0)
                return true;
            if (t.spec.kind == PacketKind::HowePS &&
                (splitting_symbol(t.spec.chi1, p) == 0 || splitting_symbol(t.spec.chi2, p) == 0))
                return true;
        }
        return false;
    };
    std::vector<std::pair<long, double>> out;
    for (long p : primes_upto(pmax)) {
        if (ramified(p)) continue;
        out.emplace_back(p, combo_value(R, p).to_double());
    }
    return out;
}

std::vector<SelbergRow> selberg_sums(const std::vector<std::pair<long, double>>& stream, long a,
                                     long M, double e, const std::vector<long>& xgrid) {
    if (M < 1 || a < 1) throw std::invalid_argument("selberg_sums: need a, M >= 1");
    if (std::gcd(a, M) != 1) throw std::invalid_argument("selberg_sums: need gcd(a, M) = 1");
    if (e != 1.0 && e != 1.5 && e != 2.0)
        throw std::invalid_argument("selberg_sums: exponent must be 1, 3/2, or 2");
    for (size_t i = 0; i < xgrid.size(); ++i)
        if (xgrid[i] < 3 || (i > 0 && xgrid[i] <= xgrid[i - 1]))
            throw std::invalid_argument("selberg_sums: xgrid must be ascending, each >= 3");
    long phi = 0;
    for (long t = 1; t <= M; ++t)
        if (std::gcd(t, M) == 1) ++phi;
    std::vector<std::pair<long, double>> sorted = stream;
    std::sort(sorted.begin(), sorted.end());
    std::vector<SelbergRow> rows;
    double sum = 0;
    size_t i = 0;
    for (long x : xgrid) {
        for (; i < sorted.size() && sorted[i].first <= x; ++i) {
            long p = sorted[i].first;
            if (p % M != ((a % M) + M) % M) continue;
            sum += sorted[i].second / std::pow(static_cast<double>(p), e);
        }
        SelbergRow row;
        row.x = x;
        row.sum = sum;
        row.loglog = std::log(std::log(static_cast<double>(x)));
        row.drift = sum - row.loglog / static_cast<double>(phi);
        rows.push_back(row);
    }
    return rows;
}

long count_sign_changes(const std::vector<std::pair<long, double>>& stream, long a, long M) {
    if (M < 1 || std::gcd(a, M) != 1)
        throw std::invalid_argument("count_sign_changes: need gcd(a, M) = 1");
    std::vector<std::pair<long, double>> sorted = stream;
    std::sort(sorted.begin(), sorted.end());
    long changes = 0;
    int last = 0;
    for (const auto& [p, v] : sorted) {
        if (p % M != ((a % M) + M) % M) continue;
        int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace sk2
