#include "sk2/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "sk2/arith.hpp"
#include "sk2/cache.hpp"
#include "sk2/errors.hpp"

namespace sk2 {

namespace {

using Clock = std::chrono::steady_clock;

struct SuiteTimer {
    VerificationReport& rep;
    Clock::time_point t0 = Clock::now();
    explicit SuiteTimer(VerificationReport& r) : rep(r) {}
    ~SuiteTimer() {
        rep.runtime_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    }
};

void check(VerificationReport& rep, bool ok, const std::string& case_id,
           const std::string& expected, const std::string& got) {
    ++rep.cases;
    if (!ok) {
        ++rep.failures;
        rep.details.push_back(case_id + ": expected " + expected + ", got " + got);
    }
}

void info(VerificationReport& rep, const std::string& line) {
    rep.details.push_back("info: " + line);
}

std::string rstr(const Rat& x) { return x.get_str(); }

std::string dstr(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string key_str(const HalfIntMatrix& T) {
    return "(" + std::to_string(T.n) + "," + std::to_string(T.r) + "," + std::to_string(T.m) + ")";
}

}  // namespace

Int kohnen_eta(const EllipticEigenform& f, int k, long d, long p) {
    int chi = splitting_symbol(d, p);
    return pow_int(p, static_cast<unsigned long>(k - 1)) -
           Int(chi) * pow_int(p, static_cast<unsigned long>(k - 2)) + f.coeff(p);
}

Int radial_prime_power(const EllipticEigenform& f, int k, long d, long p, long j) {
    if (j < 0) throw std::invalid_argument("radial_prime_power: j < 0");
    // c_t = C(d p^{2t}) / C(d) along the discriminant ray:
    // c_1 = a_f(p) - chi_d(p) p^{k-2}, then the unramified two-term recursion
    const Int ap = f.coeff(p);
    const Int pk2 = pow_int(p, static_cast<unsigned long>(k - 2));
    const Int p2k3 = pow_int(p, static_cast<unsigned long>(2 * k - 3));
    std::vector<Int> c(static_cast<size_t>(j) + 1);
    c[0] = 1;
    if (j >= 1) c[1] = ap - Int(splitting_symbol(d, p)) * pk2;
    for (long t = 2; t <= j; ++t)
        c[static_cast<size_t>(t)] =
            ap * c[static_cast<size_t>(t - 1)] - p2k3 * c[static_cast<size_t>(t - 2)];
    // a(p^j T0)/a(T0) = sum_i p^{i(k-1)} c_{j-i}, from the divisor sum over
    // the content p^j
    Int total = 0;
    Int pw = 1;
    const Int pk1 = pow_int(p, static_cast<unsigned long>(k - 1));
    for (long i = 0; i <= j; ++i) {
        total += pw * c[static_cast<size_t>(j - i)];
        pw *= pk1;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Workspace

Workspace::Workspace(VerifyConfig cfg) : cfg_(std::move(cfg)) {
    if (!cfg_.cache_dir.empty()) std::filesystem::create_directories(cfg_.cache_dir);
}

const SiegelExpansion& Workspace::siegel_artifact(const std::string& name, int weight,
                                                  long detmax4, long box, bool cusp,
                                                  const std::function<SiegelExpansion()>& build) {
    auto it = siegel_.find(name);
    if (it != siegel_.end()) return it->second;
    std::filesystem::path file;
    if (!cfg_.cache_dir.empty()) {
        file = std::filesystem::path(cfg_.cache_dir) / (name + ".siegel");
        if (std::filesystem::exists(file)) {
            SiegelExpansion F = read_siegel_cache(file);
            if (F.weight == weight && F.detmax4 == detmax4 && F.box == box &&
                F.has_singular == !cusp) {
                events_.push_back(name + "=cached");
                return siegel_.emplace(name, std::move(F)).first->second;
            }
        }
    }
    SiegelExpansion F = build();
    events_.push_back(name + "=built");
    if (!file.empty()) write_siegel_cache(F, file);
    return siegel_.emplace(name, std::move(F)).first->second;
}

std::shared_ptr<const EllipticEigenform> Workspace::elliptic(int w) {
    if (w != 18 && w != 22) throw std::invalid_argument("Workspace::elliptic: w must be 18 or 22");
    auto it = elliptic_.find(w);
    if (it != elliptic_.end()) return it->second;
    const std::string name = "f" + std::to_string(w);
    std::filesystem::path file;
    if (!cfg_.cache_dir.empty()) {
        file = std::filesystem::path(cfg_.cache_dir) / (name + ".qseries");
        if (std::filesystem::exists(file)) {
            QSeriesFile qf = read_qseries_cache(file);
            if (qf.label == name && qf.weight == w &&
                static_cast<long>(qf.coeffs.size()) - 1 >= cfg_.xmax) {
                auto f = std::make_shared<EllipticEigenform>();
                f->weight = w;
                f->a.reserve(qf.coeffs.size());
                for (const Rat& c : qf.coeffs) {
                    if (c.get_den() != 1) throw CacheError("cache: non-integral eigenform row");
                    f->a.push_back(c.get_num());
                }
                events_.push_back(name + "=cached");
                return elliptic_.emplace(w, std::move(f)).first->second;
            }
        }
    }
    auto f = std::make_shared<EllipticEigenform>(newform_onedim(w, cfg_.xmax));
    events_.push_back(name + "=built");
    if (!file.empty()) {
        QSeriesFile qf;
        qf.label = name;
        qf.weight = w;
        for (const Int& a : f->a) qf.coeffs.emplace_back(a);
        write_qseries_cache(qf, file);
    }
    return elliptic_.emplace(w, std::move(f)).first->second;
}

const std::vector<Int>& Workspace::tau() {
    if (!tau_.empty()) return tau_;
    std::filesystem::path file;
    if (!cfg_.cache_dir.empty()) {
        file = std::filesystem::path(cfg_.cache_dir) / "delta.qseries";
        if (std::filesystem::exists(file)) {
            QSeriesFile qf = read_qseries_cache(file);
            if (qf.label == "delta" && qf.weight == 12 &&
                static_cast<long>(qf.coeffs.size()) - 1 >= cfg_.xmax) {
                for (const Rat& c : qf.coeffs) {
                    if (c.get_den() != 1) throw CacheError("cache: non-integral delta row");
                    tau_.push_back(c.get_num());
                }
                events_.push_back("delta=cached");
                return tau_;
            }
        }
    }
    QSeries d = delta(cfg_.xmax);
    tau_.reserve(static_cast<size_t>(cfg_.xmax) + 1);
    for (long n = 0; n <= cfg_.xmax; ++n) tau_.push_back(d[n].get_num());
    events_.push_back("delta=built");
    if (!file.empty()) {
        QSeriesFile qf;
        qf.label = "delta";
        qf.weight = 12;
        for (const Int& a : tau_) qf.coeffs.emplace_back(a);
        write_qseries_cache(qf, file);
    }
    return tau_;
}

const SiegelExpansion& Workspace::lift(int k) {
    if (k != 10 && k != 12) throw std::invalid_argument("Workspace::lift: k must be 10 or 12");
    long d4 = cfg_.lift_detmax4;
    return siegel_artifact("l" + std::to_string(k), k, d4, -1, true, [k, d4]() {
        return sk_lift(cusp_form_10_12(k, d4), d4);
    });
}

const SiegelExpansion& Workspace::eisenstein2(int k) {
    if (k != 4 && k != 6)
        throw std::invalid_argument("Workspace::eisenstein2: k must be 4 or 6");
    long d4 = cfg_.prod_detmax4;
    return siegel_artifact("e" + std::to_string(k), k, d4, -1, false,
                           [k, d4]() { return siegel_eisenstein2(k, d4); });
}

const std::vector<SiegelExpansion>& Workspace::basis20() {
    if (!basis20_.empty()) return basis20_;
    const char* names[3] = {"b20_1", "b20_2", "b20_3"};
    if (!cfg_.cache_dir.empty()) {
        std::vector<SiegelExpansion> loaded;
        for (const char* name : names) {
            std::filesystem::path file =
                std::filesystem::path(cfg_.cache_dir) / (std::string(name) + ".siegel");
            if (!std::filesystem::exists(file)) break;
            SiegelExpansion F = read_siegel_cache(file);
            if (F.weight != 20 || F.detmax4 != cfg_.prod_detmax4 || F.box != cfg_.prod_box ||
                F.has_singular)
                break;
            loaded.push_back(std::move(F));
        }
        if (loaded.size() == 3) {
            for (const char* name : names) events_.push_back(std::string(name) + "=cached");
            basis20_ = std::move(loaded);
            return basis20_;
        }
    }
    basis20_ = weight20_basis(cfg_.prod_detmax4, cfg_.prod_box);
    for (size_t i = 0; i < 3; ++i) {
        events_.push_back(std::string(names[i]) + "=built");
        if (!cfg_.cache_dir.empty())
            write_siegel_cache(basis20_[i], std::filesystem::path(cfg_.cache_dir) /
                                                (std::string(names[i]) + ".siegel"));
    }
    return basis20_;
}

// ---------------------------------------------------------------------------
// Suites

VerificationReport verify_cross_oracle(Workspace& ws) {
    VerificationReport rep;
    rep.suite = "cross_oracle";
    SuiteTimer timer(rep);
    for (long n = 0; n <= 200; ++n) {
        Rat a = cohen_h(1, n), b = hurwitz(n);
        check(rep, a == b, "class-number oracle N=" + std::to_string(n), rstr(b), rstr(a));
    }
    // independent discriminant-form oracle: direct expansion of
    // q prod_{n<=50} (1 - q^n)^24 by repeated polynomial multiplication
    const long N = 50;
    std::vector<Int> prod(static_cast<size_t>(N) + 1, Int(0));
    prod[0] = 1;
    for (long n = 1; n <= N; ++n)
        for (int rep24 = 0; rep24 < 24; ++rep24)
            for (long i = N; i >= n; --i) prod[static_cast<size_t>(i)] -=
                prod[static_cast<size_t>(i - n)];
    QSeries d = delta(N);
    check(rep, d[0] == 0, "delta constant term", "0", rstr(d[0]));
    for (long m = 1; m <= N; ++m)
        check(rep, d[m] == Rat(prod[static_cast<size_t>(m - 1)]),
              "delta oracle n=" + std::to_string(m), prod[static_cast<size_t>(m - 1)].get_str(),
              rstr(d[m]));
    (void)ws;
    return rep;
}

VerificationReport verify_radial(Workspace& ws) {
    VerificationReport rep;
    rep.suite = "radial";
    SuiteTimer timer(rep);
    const std::vector<long> primes = primes_upto(ws.cfg().radial_pmax);
    for (int k : {10, 12}) {
        const SiegelExpansion& F = ws.lift(k);
        auto f = ws.elliptic(2 * k - 2);
        std::vector<Int> eta = sk_eta_stream(*f, k, ws.cfg().radial_pmax);
        const std::pair<HalfIntMatrix, long> seeds[2] = {{{1, 1, 1}, -3}, {{1, 0, 1}, -4}};
        for (const auto& [seed, d] : seeds) {
            Rat a0 = F.coeff(seed);
            std::string tag = "k=" + std::to_string(k) + " d=" + std::to_string(d);
            check(rep, a0 != 0, "seed coefficient " + tag, "nonzero", rstr(a0));
            if (a0 == 0) continue;
            for (long p : primes) {
                Rat apT = F.coeff(p * seed.n, p * seed.r, p * seed.m);
                Int formula = kohnen_eta(*f, k, d, p);
                check(rep, apT == a0 * Rat(formula),
                      "radial " + tag + " p=" + std::to_string(p), rstr(a0 * Rat(formula)),
                      rstr(apT));
                if (splitting_symbol(d, p) == -1)
                    check(rep, apT == a0 * Rat(eta[static_cast<size_t>(p)]),
                          "inert eigenvalue " + tag + " p=" + std::to_string(p),
                          rstr(a0 * Rat(eta[static_cast<size_t>(p)])), rstr(apT));
            }
        }
    }
    return rep;
}

VerificationReport verify_skkey(Workspace& ws) {
    VerificationReport rep;
    rep.suite = "skkey";
    SuiteTimer timer(rep);
    const std::vector<HalfIntMatrix> keys = canonical_keys(ws.cfg().group_det4);
    for (int k : {10, 12}) {
        const SiegelExpansion& F = ws.lift(k);
        std::map<std::pair<long, long>, std::pair<Rat, HalfIntMatrix>> groups;
        long classes = 0;
        for (const HalfIntMatrix& key : keys) {
            Rat a = F.coeff(key);
            auto [it, fresh] =
                groups.try_emplace({key.det4(), key.content()}, std::make_pair(a, key));
            if (fresh) {
                ++classes;
                continue;
            }
            check(rep, a == it->second.first,
                  "grouping k=" + std::to_string(k) + " " + key_str(key) + " vs " +
                      key_str(it->second.second),
                  rstr(it->second.first), rstr(a));
        }
        info(rep, "k=" + std::to_string(k) + " keys=" + std::to_string(keys.size()) +
                      " classes=" + std::to_string(classes));
    }
    return rep;
}

VerificationReport verify_witt(Workspace& ws) {
    VerificationReport rep;
    rep.suite = "witt";
    SuiteTimer timer(rep);
    for (int k : {4, 6}) {
        const SiegelExpansion& E = ws.eisenstein2(k);
        std::string tag = "k=" + std::to_string(k);
        long N = static_cast<long>(E.rank1.size()) - 1;
        QSeries ek = eisenstein(k, N);
        QSeries phi = phi_operator(E, N);
        for (long n = 0; n <= N; ++n)
            check(rep, phi[n] == ek[n], "degree-lowering " + tag + " n=" + std::to_string(n),
                  rstr(ek[n]), rstr(phi[n]));
        long wmax = ws.cfg().witt_max;
        QSeries ew = eisenstein(k, wmax);
        for (long n = 0; n <= wmax; ++n)
            for (long m = 0; m <= wmax; ++m) {
                Rat lhs = witt_pullback(E, n, m);
                Rat rhs = ew[n] * ew[m];
                check(rep, lhs == rhs,
                      "diagonal restriction " + tag + " (" + std::to_string(n) + "," +
                          std::to_string(m) + ")",
                      rstr(rhs), rstr(lhs));
            }
    }
    return rep;
}

VerificationReport verify_hecke_oracle(Workspace& ws) {
    VerificationReport rep;
    rep.suite = "hecke_oracle";
    SuiteTimer timer(rep);
    for (long p : {2L, 3L, 5L}) {
        long expected = p * p * p + p * p + p + 1;
        long got = static_cast<long>(coset_reps(p).reps.size());
        check(rep, got == expected, "coset count p=" + std::to_string(p),
              std::to_string(expected), std::to_string(got));
    }
    for (int k : {10, 12}) {
        auto f = ws.elliptic(2 * k - 2);
        std::vector<Int> eta = sk_eta_stream(*f, k, 3);
        const SiegelExpansion& F = ws.lift(k);
        for (long p : {2L, 3L}) {
            SiegelExpansion TpF = apply_tp(F, p);
            Rat ev(eta[static_cast<size_t>(p)]);
            long mismatches = 0;
            for (const auto& [key, b] : TpF.coeffs) {
                ++rep.cases;
                if (b != ev * F.coeff(key)) {
                    ++rep.failures;
                    ++mismatches;
                    if (mismatches <= 5)
                        rep.details.push_back("eigen k=" + std::to_string(k) +
                                              " p=" + std::to_string(p) + " " + key_str(key) +
                                              ": expected " + rstr(ev * F.coeff(key)) + ", got " +
                                              rstr(b));
                }
            }
            info(rep, "k=" + std::to_string(k) + " p=" + std::to_string(p) + " eta=" +
                          eta[static_cast<size_t>(p)].get_str() +
                          " region_keys=" + std::to_string(TpF.coeffs.size()));
        }
    }
    return rep;
}

VerificationReport verify_nonlift20(Workspace& ws) {
    VerificationReport rep;
    rep.suite = "nonlift20";
    SuiteTimer timer(rep);
    const std::vector<SiegelExpansion>& basis = ws.basis20();
    NonliftReport nr;
    ++rep.cases;
    try {
        nr = nonlift20_from_basis(basis);
    } catch (const VerificationError& e) {
        ++rep.failures;
        rep.details.push_back(std::string("diagonalization: ") + e.what());
        return rep;
    }
    // the action matrix splits as (x - eta2) times the quadratic whose roots
    // are the two weight-38 eigenvalues shifted by 2^19 + 2^18
    S38Eigen s38 = eigenbasis_s38();
    const Int c = pow_int(2, 19) + pow_int(2, 18);
    Rat Q = Rat(s38.trace + 2 * c);
    Rat R = Rat(s38.det + c * s38.trace + c * c);
    const auto& M = nr.m2;
    Rat c2 = M[0][0] + M[1][1] + M[2][2];
    Rat c1 = M[0][0] * M[1][1] - M[0][1] * M[1][0] + M[0][0] * M[2][2] - M[0][2] * M[2][0] +
             M[1][1] * M[2][2] - M[1][2] * M[2][1];
    Rat c0 = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
             M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
             M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    check(rep, c2 == Q + nr.eta2, "paired trace identity", rstr(Q + nr.eta2), rstr(c2));
    check(rep, c1 == R + nr.eta2 * Q, "paired middle identity", rstr(R + nr.eta2 * Q), rstr(c1));
    check(rep, c0 == nr.eta2 * R, "paired determinant identity", rstr(nr.eta2 * R), rstr(c0));
    check(rep, nr.eta2 * nr.eta2 - Q * nr.eta2 + R != 0, "eigenvalue separation", "nonzero",
          "0");
    info(rep, "eta2=" + rstr(nr.eta2) + " eta3=" + rstr(nr.eta3));
    info(rep, "paired_plus=" + dstr(nr.paired_plus.to_double()) +
                  " paired_minus=" + dstr(nr.paired_minus.to_double()));
    // radial identity at an inert prime on a fundamental seed
    check(rep, splitting_symbol(-4, 3) == -1, "3 inert at d=-4", "-1",
          std::to_string(splitting_symbol(-4, 3)));
    Rat aT0 = nr.F.coeff(1, 0, 1);
    check(rep, aT0 != 0, "nonlift seed coefficient", "nonzero", rstr(aT0));
    Rat a3T0 = nr.F.coeff(3, 0, 3);
    check(rep, a3T0 == nr.eta3 * aT0, "nonlift radial p=3", rstr(nr.eta3 * aT0), rstr(a3T0));
    // commutation, first on action matrices ...
    std::vector<std::vector<Rat>> M3 = tp_matrix({&basis[0], &basis[1], &basis[2]}, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat ab(0), ba(0);
            for (int t = 0; t < 3; ++t) {
                ab += M[static_cast<size_t>(i)][static_cast<size_t>(t)] *
                      M3[static_cast<size_t>(t)][static_cast<size_t>(j)];
                ba += M3[static_cast<size_t>(i)][static_cast<size_t>(t)] *
                      M[static_cast<size_t>(t)][static_cast<size_t>(j)];
            }
            check(rep, ab == ba,
                  "matrix commutation (" + std::to_string(i) + "," + std::to_string(j) + ")",
                  rstr(ab), rstr(ba));
        }
    // ... then coefficientwise through both operator orders
    SiegelExpansion c23 = apply_tp(apply_tp(basis[0], 2), 3);
    SiegelExpansion c32 = apply_tp(apply_tp(basis[0], 3), 2);
    for (const auto& [key, v] : c23.coeffs)
        check(rep, v == c32.coeff(key), "chained commutation " + key_str(key),
              rstr(c32.coeff(key)), rstr(v));
    return rep;
}

VerificationReport verify_bessel_bounds(Workspace& ws) {
    VerificationReport rep;
    rep.suite = "bessel_bounds";
    SuiteTimer timer(rep);
    for (int k : {10, 12}) {
        const SiegelExpansion& F = ws.lift(k);
        for (long d : {-3L, -4L, -15L}) {
            for (const HalfIntMatrix& S : class_representatives(d)) {
                std::string tag = "k=" + std::to_string(k) + " d=" + std::to_string(d) + " S=" +
                                  key_str(S);
                Rat aS = F.coeff(S);
                check(rep, aS != 0, "seed " + tag, "nonzero", rstr(aS));
                if (aS == 0) continue;
                for (long p : {2L, 3L, 5L})
                    for (long ell = 0;; ++ell) {
                        Int scale_l = pow_int(p, static_cast<unsigned long>(2 * ell));
                        if (scale_l * S.det4() > ws.cfg().lift_detmax4) break;
                        for (long m = 0;; ++m) {
                            Int scale =
                                pow_int(p, static_cast<unsigned long>(2 * ell + 2 * m));
                            if (scale * S.det4() > ws.cfg().lift_detmax4) break;
                            if (ell == 0 && m == 0) continue;
                            Rat ratio = empirical_ratio(F, S, p, ell, m);
                            Rat bound = iib_spherical_bound_sq({p, ell, m});
                            check(rep, ratio * ratio < bound,
                                  "bound " + tag + " p=" + std::to_string(p) + " cell=(" +
                                      std::to_string(ell) + "," + std::to_string(m) + ")",
                                  "<" + rstr(bound), rstr(ratio * ratio));
                        }
                    }
            }
        }
    }
    return rep;
}

VerificationReport verify_dk(Workspace& ws) {
    VerificationReport rep;
    rep.suite = "dk";
    SuiteTimer timer(rep);
    const int k = 10;
    const SiegelExpansion& F = ws.lift(k);
    auto f = ws.elliptic(2 * k - 2);
    // windowed maxima of a(T)^2 / det(T)^{k-1} over two adjacent determinant
    // windows [hi/4, hi/2] and (hi/2, hi]
    const long hi = ws.cfg().group_det4, mid = hi / 2, lo = hi / 4;
    Rat max1(0), max2(0);
    const Rat four_pow(pow_int(4, static_cast<unsigned long>(k - 1)));
    for (const HalfIntMatrix& key : canonical_keys(hi)) {
        long d4 = key.det4();
        if (d4 < lo) continue;
        Rat a = F.coeff(key);
        Rat ratio_sq = a * a * four_pow / Rat(pow_int(d4, static_cast<unsigned long>(k - 1)));
        if (d4 <= mid)
            max1 = std::max(max1, ratio_sq);
        else
            max2 = std::max(max2, ratio_sq);
    }
    check(rep, max1 != 0 && max2 != 0, "window maxima nonzero", "nonzero",
          rstr(max1) + " / " + rstr(max2));
    check(rep, max1 <= 4 * max2 && max2 <= 4 * max1, "window ratio within factor 2",
          "each <= 4x the other",
          dstr(std::sqrt(max1.get_d())) + " vs " + dstr(std::sqrt(max2.get_d())));
    info(rep, "window [" + std::to_string(lo) + "," + std::to_string(mid) + "] max=" +
                  dstr(std::sqrt(max1.get_d())) + " window (" + std::to_string(mid) + "," +
                  std::to_string(hi) + "] max=" + dstr(std::sqrt(max2.get_d())));
    // normalized radial sequence a(2^j T0) / 2^{j(k-1)} stays in [1/4, 1]
    const HalfIntMatrix seed{1, 1, 1};
    const Rat a0 = F.coeff(seed);
    for (long j = 1; j <= 12; ++j) {
        Int num = radial_prime_power(*f, k, -3, 2, j);
        Rat q = Rat(num) / Rat(pow_int(2, static_cast<unsigned long>(9 * j)));
        check(rep, Rat(1, 4) <= q && q <= 1, "radial window j=" + std::to_string(j),
              "in [1/4, 1]", rstr(q));
        long scale = 1L << j;
        if (3 * scale * scale <= ws.cfg().lift_detmax4) {
            Rat direct = F.coeff(scale, scale, scale);
            check(rep, direct == a0 * Rat(num), "radial cross-check j=" + std::to_string(j),
                  rstr(a0 * Rat(num)), rstr(direct));
        }
    }
    return rep;
}

VerificationReport verify_sign_stability(Workspace& ws) {
    VerificationReport rep;
    rep.suite = "sign_stability";
    SuiteTimer timer(rep);
    const long d = -3;
    for (int k : {10, 12}) {
        auto f = ws.elliptic(2 * k - 2);
        long threshold = 1;
        for (long p : primes_upto(ws.cfg().sign_pmax)) {
            Int v = kohnen_eta(*f, k, d, p);
            int s = sgn(v);
            if (s != 1) threshold = p;
            if (p >= 7) {
                int chi = splitting_symbol(d, p);
                Int dominance = pow_int(p, static_cast<unsigned long>(k - 1)) -
                                Int(chi) * pow_int(p, static_cast<unsigned long>(k - 2)) -
                                abs(f->coeff(p));
                check(rep, dominance > 0, "dominance k=" + std::to_string(k) + " p=" +
                                              std::to_string(p),
                      ">0", dominance.get_str());
                check(rep, s == 1, "sign k=" + std::to_string(k) + " p=" + std::to_string(p),
                      "+1", std::to_string(s));
            }
        }
        check(rep, threshold <= 7, "threshold k=" + std::to_string(k), "<=7",
              std::to_string(threshold));
        info(rep, "k=" + std::to_string(k) + " empirical constant-sign threshold C=" +
                      std::to_string(threshold));
    }
    return rep;
}

VerificationReport verify_selberg_ap(Workspace& ws) {
    VerificationReport rep;
    rep.suite = "selberg_ap";
    SuiteTimer timer(rep);
    const std::vector<Int>& tau = ws.tau();
    std::vector<std::pair<long, double>> lam, lam_sq;
    for (long p : primes_upto(ws.cfg().xmax)) {
        double v = tau[static_cast<size_t>(p)].get_d() / std::pow(static_cast<double>(p), 5.5);
        lam.emplace_back(p, v);
        lam_sq.emplace_back(p, v * v);
    }
    long c1 = count_sign_changes(lam, 1, 4);
    long c3 = count_sign_changes(lam, 3, 4);
    check(rep, c1 >= 1, "sign changes in 1 mod 4", ">=1", std::to_string(c1));
    check(rep, c3 >= 1, "sign changes in 3 mod 4", ">=1", std::to_string(c3));
    info(rep, "sign changes: 1 mod 4 -> " + std::to_string(c1) + ", 3 mod 4 -> " +
                  std::to_string(c3));
    std::vector<long> grid;
    for (long x = 100; x <= ws.cfg().xmax; x *= 10) grid.push_back(x);
    std::vector<SelbergRow> rows = selberg_sums(lam_sq, 1, 1, 1.0, grid);
    double tv = 0;
    for (size_t i = 1; i < rows.size(); ++i) tv += std::abs(rows[i].drift - rows[i - 1].drift);
    check(rep, tv <= 1.5, "drift total variation", "<=1.5", dstr(tv));
    for (const SelbergRow& row : rows)
        info(rep, "X=" + std::to_string(row.x) + " sum=" + dstr(row.sum) + " loglog=" +
                      dstr(row.loglog) + " drift=" + dstr(row.drift));
    return rep;
}

VerificationReport verify_cap_trichotomy(Workspace& ws) {
    VerificationReport rep;
    rep.suite = "cap_trichotomy";
    SuiteTimer timer(rep);
    auto f18 = ws.elliptic(18);
    ArthurSpec hps = howe_ps_spec(-4, -3);
    ArthurSpec sk_chi = sk_spec(f18, "f18", -3);
    ArthurSpec sk_triv = sk_spec(f18, "f18", 1);
    for (long p : primes_upto(ws.cfg().cap_pmax)) {
        int c1 = splitting_symbol(-4, p), c2 = splitting_symbol(-3, p);
        if (c1 != 0 && c2 != 0) {
            HalfPow v = lambda_p(hps, p);
            int expect = c1 + c2 > 0 ? 1 : (c1 + c2 < 0 ? -1 : 0);
            check(rep, v.sign() == expect, "two-character sign p=" + std::to_string(p),
                  std::to_string(expect), std::to_string(v.sign()));
            check(rep, v.x == 0 && v.y == Rat(c1 + c2) * Rat(p + 1, p),
                  "two-character value p=" + std::to_string(p),
                  rstr(Rat(c1 + c2) * Rat(p + 1, p)), rstr(v.y));
        }
        if (c2 != 0) {
            HalfPow v = lambda_p(sk_chi, p);
            check(rep, v.sign() == c2, "character sign p=" + std::to_string(p),
                  std::to_string(c2), std::to_string(v.sign()));
        }
        HalfPow v = lambda_p(sk_triv, p);
        check(rep, v.sign() == 1, "trivial-character positivity p=" + std::to_string(p), "+1",
              std::to_string(v.sign()));
    }
    return rep;
}

VerificationReport verify_combo(Workspace& ws) {
    VerificationReport rep;
    rep.suite = "combo";
    SuiteTimer timer(rep);
    auto f18 = ws.elliptic(18);
    auto f22 = ws.elliptic(22);
    ComboSpec pure{{{Rat(1), general_spec(f18, "f18")}}};
    ComboSpec sk_triv{{{Rat(1), sk_spec(f18, "f18", 1)}}};
    ComboSpec engineered{{{Rat(1), sk_spec(f18, "f18", -3)},
                          {Rat(-1), howe_ps_spec(-3, -4)},
                          {Rat(1), sk_spec(f22, "f22", -4)}}};
    auto case_str = [](ComboCase c) { return c == ComboCase::Case1 ? "Case1" : "Case2"; };
    check(rep, combo_classify(pure) == ComboCase::Case1, "classify single tempered stream",
          "Case1", case_str(combo_classify(pure)));
    check(rep, combo_classify(sk_triv) == ComboCase::Case2, "classify trivial-character lift",
          "Case2", case_str(combo_classify(sk_triv)));
    check(rep, combo_classify(engineered) == ComboCase::Case1, "classify cancelling combination",
          "Case1", case_str(combo_classify(engineered)));
    // growth envelopes: bounded for the two Case1 specs, sqrt(p) for Case2
    auto abs_le = [](const HalfPow& v, const Rat& bound) {
        HalfPow hi = v, lo = v;
        hi.x = bound - hi.x;
        hi.y = -v.y;
        lo.x += bound;
        return hi.sign() >= 0 && lo.sign() >= 0;
    };
    Rat max_y(0);
    for (long p : primes_upto(ws.cfg().cap_pmax)) {
        HalfPow v = combo_value(pure, p);
        check(rep, abs_le(v, Rat(2)), "tempered envelope p=" + std::to_string(p), "|v|<=2",
              dstr(v.to_double()));
        if (p != 2 && p != 3) {
            HalfPow w = combo_value(engineered, p);
            check(rep, abs_le(w, Rat(4)), "cancelling envelope p=" + std::to_string(p),
                  "|v|<=4", dstr(w.to_double()));
        }
        HalfPow u = combo_value(sk_triv, p);
        bool rational_slope = u.x == 0;
        Rat ay = u.y >= 0 ? u.y : Rat(-u.y);
        check(rep, rational_slope && ay <= Rat(7, 2),
              "sqrt growth envelope p=" + std::to_string(p), "|v|/sqrt(p) <= 7/2", rstr(ay));
        max_y = std::max(max_y, ay);
    }
    info(rep, "max |a_R(p)| / sqrt(p) over the Case2 spec: " + rstr(max_y));
    return rep;
}

std::vector<VerificationReport> run_all(Workspace& ws) {
    using Suite = VerificationReport (*)(Workspace&);
    const std::pair<const char*, Suite> suites[] = {
        {"cross_oracle", verify_cross_oracle},
        {"radial", verify_radial},
        {"skkey", verify_skkey},
        {"witt", verify_witt},
        {"hecke_oracle", verify_hecke_oracle},
        {"nonlift20", verify_nonlift20},
        {"bessel_bounds", verify_bessel_bounds},
        {"dk", verify_dk},
        {"sign_stability", verify_sign_stability},
        {"selberg_ap", verify_selberg_ap},
        {"cap_trichotomy", verify_cap_trichotomy},
        {"combo", verify_combo},
    };
    std::vector<VerificationReport> reports;
    for (const auto& [name, suite] : suites) {
        try {
            reports.push_back(suite(ws));
        } catch (const std::exception& e) {
            VerificationReport rep;
            rep.suite = name;
            rep.cases = 1;
            rep.failures = 1;
            rep.details.push_back(std::string("error: ") + e.what());
            reports.push_back(std::move(rep));
        }
    }
    return reports;
}

}  // namespace sk2
