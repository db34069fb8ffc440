#include "sk2/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sk2 {

int kronecker(long d, long n) {
    if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
    if ((d & 1L) == 0 && (n & 1L) == 0) return 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (d < 0) sign = -sign;
    }
    int t = 0;
    while ((n & 1L) == 0) {
        n >>= 1;
        ++t;
    }
    if (t & 1) {
        long dm8 = ((d % 8) + 8) % 8;
        if (dm8 == 3 || dm8 == 5) sign = -sign;
    }
    // n odd positive: Jacobi symbol via reciprocity
    long a = ((d % n) + n) % n;
    while (a != 0) {
        t = 0;
        while ((a & 1L) == 0) {
            a >>= 1;
            ++t;
        }
        if ((t & 1) && (n % 8 == 3 || n % 8 == 5)) sign = -sign;
        if ((a & 3L) == 3 && (n & 3L) == 3) sign = -sign;
        long tmp = n % a;
        n = a;
        a = tmp;
    }
    return (n == 1) ? sign : 0;
}

std::vector<std::pair<long, int>> factorize(long n) {
    if (n == 0) throw std::invalid_argument("factorize: zero");
    if (n < 0) n = -n;
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<long> divisors(long n) {
    std::vector<long> ds{1};
    for (auto [p, e] : factorize(n)) {
        size_t sz = ds.size();
        long pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

int moebius(long n) {
    auto f = factorize(n);
    for (auto [p, e] : f)
        if (e > 1) return 0;
    return (f.size() & 1) ? -1 : 1;
}

Int divisor_sigma(long n, int k) {
    Int s = 1;
    for (auto [p, e] : factorize(n)) {
        Int term = 0, pk = pow_int(p, static_cast<unsigned long>(k)), pw = 1;
        for (int i = 0; i <= e; ++i) {
            term += pw;
            pw *= pk;
        }
        s *= term;
    }
    return s;
}

std::vector<long> primes_upto(long n) {
    std::vector<bool> sieve(static_cast<size_t>(std::max(n + 1, 2L)), true);
    sieve[0] = sieve[1] = false;
    for (long i = 2; i * i <= n; ++i)
        if (sieve[static_cast<size_t>(i)])
            for (long j = i * i; j <= n; j += i) sieve[static_cast<size_t>(j)] = false;
    std::vector<long> out;
    for (long i = 2; i <= n; ++i)
        if (sieve[static_cast<size_t>(i)]) out.push_back(i);
    return out;
}

DiscFactor factor_discriminant(long D) {
    if (D == 0) throw std::invalid_argument("factor_discriminant: D = 0");
    long r = ((D % 4) + 4) % 4;
    if (r != 0 && r != 1) throw std::invalid_argument("factor_discriminant: D != 0,1 mod 4");
    long core = (D < 0) ? -1 : 1;
    long f = 1;
    for (auto [p, e] : factorize(D)) {
        for (int i = 0; i < e / 2; ++i) f *= p;
        if (e & 1) core *= p;
    }
    if (((core % 4) + 4) % 4 == 1) return {core, f};
    // core = 2, 3 mod 4: the fundamental discriminant is 4 * core
    if (f % 2 != 0) throw InternalError("factor_discriminant: parity");
    return {4 * core, f / 2};
}

int splitting_symbol(long d, long p) { return kronecker(d, p); }

namespace {
std::vector<Rat>& bernoulli_cache() {
    static std::vector<Rat> cache{Rat(1)};
    return cache;
}
}  // namespace

const Rat& bernoulli(int m) {
    auto& cache = bernoulli_cache();
    while (static_cast<int>(cache.size()) <= m) {
        int k = static_cast<int>(cache.size());
        // sum_{j=0}^{k} binom(k+1, j) B_j = 0
        Rat acc(0);
        Int binom = 1;  // binom(k+1, j) built incrementally
        for (int j = 0; j < k; ++j) {
            acc += Rat(binom) * cache[static_cast<size_t>(j)];
            binom = binom * (k + 1 - j) / (j + 1);
        }
        cache.push_back(-acc / Rat(binom));  // binom(k+1, k) = k+1
    }
    return cache[static_cast<size_t>(m)];
}

Rat bernoulli_poly(int r, const Rat& x) {
    // B_r(x) = sum_j binom(r, j) B_j x^{r-j}, evaluated by Horner in x
    Rat acc(0);
    Int binom = 1;
    std::vector<Rat> coeff(static_cast<size_t>(r) + 1);
    for (int j = 0; j <= r; ++j) {
        coeff[static_cast<size_t>(j)] = Rat(binom) * bernoulli(j);
        if (j < r) binom = binom * (r - j) / (j + 1);
    }
    for (int j = 0; j <= r; ++j) acc = acc * x + coeff[static_cast<size_t>(j)];
    return acc;
}

Rat gen_bernoulli(int r, long d) {
    const long ad = d < 0 ? -d : d;
    // |d|^r B_r(a/|d|) = P(a) / q with P integral; build P's coefficients:
    // P(a) = sum_j binom(r, j) (B_j q) |d|^j a^{r-j}
    Int q = 1;
    for (int j = 0; j <= r; ++j) {
        Int den = bernoulli(j).get_den();
        q = q / gcd(q, den) * den;  // lcm
    }
    std::vector<Int> P(static_cast<size_t>(r) + 1);  // P[j] multiplies a^{r-j}
    Int binom = 1, dpow = 1;
    for (int j = 0; j <= r; ++j) {
        Rat c = Rat(binom) * bernoulli(j) * Rat(q) * Rat(dpow);
        if (c.get_den() != 1) throw InternalError("gen_bernoulli: non-integral scaled coeff");
        P[static_cast<size_t>(j)] = c.get_num();
        if (j < r) binom = binom * (r - j) / (j + 1);
        dpow *= ad;
    }
    Int sum = 0, pa;
    for (long a = 1; a <= ad; ++a) {
        int chi = kronecker(d, a);
        if (chi == 0) continue;
        pa = P[0];
        for (int j = 1; j <= r; ++j) pa = pa * a + P[static_cast<size_t>(j)];
        if (chi > 0)
            sum += pa;
        else
            sum -= pa;
    }
    // B_{r,chi} = |d|^{r-1} sum_a chi(a) B_r(a/|d|) = sum / (q * |d|)
    return make_rat(sum, q * ad);
}

namespace {
Rat cohen_from_parts(int r, long d, long f) {
    Rat lval = -gen_bernoulli(r, d) / r;  // L(1-r, chi_d)
    Rat s(0);
    for (long e : divisors(f)) {
        int mu = moebius(e);
        if (mu == 0) continue;
        int chi = kronecker(d, e);
        if (chi == 0) continue;
        Rat term = Rat(mu * chi) * Rat(pow_int(e, static_cast<unsigned long>(r - 1))) *
                   Rat(divisor_sigma(f / e, 2 * r - 1));
        s += term;
    }
    return lval * s;
}
}  // namespace

Rat cohen_h(int r, long N) {
    if (r < 1 || N < 0) throw std::invalid_argument("cohen_h: need r >= 1, N >= 0");
    if (N == 0) return -bernoulli(2 * r) / (2 * r);  // zeta(1 - 2r)
    long D = (r % 2 == 0) ? N : -N;
    if (((D % 4) + 4) % 4 > 1) return Rat(0);
    auto [d, f] = factor_discriminant(D);
    return cohen_from_parts(r, d, f);
}

std::vector<Rat> cohen_table(int r, long maxN) {
    std::vector<Rat> out(static_cast<size_t>(maxN) + 1);
    out[0] = -bernoulli(2 * r) / (2 * r);
    std::map<long, Rat> lcache;  // L(1-r, chi_d) per fundamental d
    for (long N = 1; N <= maxN; ++N) {
        long D = (r % 2 == 0) ? N : -N;
        if (((D % 4) + 4) % 4 > 1) continue;
        auto [d, f] = factor_discriminant(D);
        auto it = lcache.find(d);
        if (it == lcache.end()) it = lcache.emplace(d, -gen_bernoulli(r, d) / r).first;
        Rat s(0);
        for (long e : divisors(f)) {
            int mu = moebius(e);
            if (mu == 0) continue;
            int chi = kronecker(d, e);
            if (chi == 0) continue;
            s += Rat(mu * chi) * Rat(pow_int(e, static_cast<unsigned long>(r - 1))) *
                 Rat(divisor_sigma(f / e, 2 * r - 1));
        }
        out[static_cast<size_t>(N)] = it->second * s;
    }
    return out;
}

Rat hurwitz(long N) {
    if (N < 0) throw std::invalid_argument("hurwitz: N < 0");
    if (N == 0) return Rat(-1, 12);
    if (N % 4 == 1 || N % 4 == 2) return Rat(0);
    Rat total(0);
    for (long b = N & 1L; b * b * 3 <= N; b += 2) {
        if ((b * b + N) % 4 != 0) continue;
        long ac = (b * b + N) / 4;
        for (long a = std::max(b, 1L); a * a <= ac; ++a) {
            if (ac % a != 0) continue;
            long c = ac / a;
            Rat w(1);
            if (a == b && b == c)
                w = Rat(1, 3);
            else if (b == 0 && a == c)
                w = Rat(1, 2);
            int classes = (0 < b && b < a && a < c) ? 2 : 1;  // (a, -b, c) also reduced
            total += w * classes;
        }
    }
    return total;
}

}  // namespace sk2
