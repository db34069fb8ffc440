// Command line front end: builds and caches exact expansions, queries
// coefficients and Hecke data, emits CSV/JSON tables, and runs the
// verification suites. Exit codes: 0 ok, 2 verification failure,
// 3 precision shortfall, 4 bad input or unreadable file.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sk2/arith.hpp"
#include "sk2/cache.hpp"
#include "sk2/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sk2;

int guarded(const std::function<int()>& fn) {
    try {
        return fn();
    } catch (const PrecisionError& e) {
        std::fprintf(stderr, "precision error: %s\n", e.what());
        return 3;
    } catch (const VerificationError& e) {
        std::fprintf(stderr, "verification failure: %s\n", e.what());
        return 2;
    } catch (const InternalError& e) {
        std::fprintf(stderr, "internal check failed: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
}

std::string dstr(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// Write to the given path (binary, so output is byte-identical across
// platforms) or to stdout when the path is empty.
void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

HalfIntMatrix parse_matrix(const std::string& s) {
    long n = 0, r = 0, m = 0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "%ld,%ld,%ld%c", &n, &r, &m, &tail) != 3)
        throw std::invalid_argument("matrix must be given as n,r,m");
    return {n, r, m};
}

Rat parse_rat_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) {
        Rat r;
        if (mpq_set_str(r.get_mpq_t(), j.get<std::string>().c_str(), 10) != 0 ||
            r.get_den() == 0)
            throw std::invalid_argument("bad rational literal: " + j.get<std::string>());
        r.canonicalize();
        return r;
    }
    throw std::invalid_argument("rational must be an integer or a \"p/q\" string");
}

// One-dimensional integer eigenform streams by weight, shared across a
// command invocation.
struct StreamPool {
    long precision = 0;
    std::map<int, std::shared_ptr<const EllipticEigenform>> pool;

    std::shared_ptr<const EllipticEigenform> get(int w) {
        auto it = pool.find(w);
        if (it != pool.end()) return it->second;
        auto f = std::make_shared<EllipticEigenform>();
        if (w == 12) {
            QSeries d = delta(precision);
            f->weight = 12;
            for (long n = 0; n <= precision; ++n) f->a.push_back(d[n].get_num());
        } else if (w == 18 || w == 22 || w == 26) {
            *f = newform_onedim(w, precision);
        } else {
            throw std::invalid_argument("no one-dimensional eigenform stream at weight " +
                                        std::to_string(w));
        }
        pool.emplace(w, f);
        return f;
    }
};

ArthurSpec parse_arthur_spec(const json& j, StreamPool& streams) {
    const std::string kind = j.at("kind").get<std::string>();
    auto stream_of = [&](const json& w) {
        int weight = w.get<int>();
        return std::make_pair(streams.get(weight), "f" + std::to_string(weight));
    };
    if (kind == "general") {
        auto [f, id] = stream_of(j.at("weight"));
        return general_spec(f, id);
    }
    if (kind == "yoshida") {
        const json& w = j.at("weight");
        if (!w.is_array() || w.size() != 2)
            throw std::invalid_argument("yoshida requires weight: [w1, w2]");
        auto [f1, id1] = stream_of(w[0]);
        auto [f2, id2] = stream_of(w[1]);
        if (id1 == id2) throw std::invalid_argument("yoshida requires two distinct streams");
        return yoshida_spec(f1, id1, f2, id2);
    }
    if (kind == "sk") {
        auto [f, id] = stream_of(j.at("weight"));
        long chi0 = j.contains("chi0") ? j.at("chi0").get<long>() : 1;
        return sk_spec(f, id, chi0);
    }
    if (kind == "soudry") {
        auto [f, id] = stream_of(j.at("weight"));
        return soudry_spec(f, id);
    }
    if (kind == "howe_ps") {
        const json& chi = j.at("chi");
        if (!chi.is_array() || chi.size() != 2)
            throw std::invalid_argument("howe_ps requires chi: [d1, d2]");
        return howe_ps_spec(chi[0].get<long>(), chi[1].get<long>());
    }
    throw std::invalid_argument("unknown packet kind: " + kind);
}

ComboSpec parse_combo_spec(const json& j, StreamPool& streams) {
    ComboSpec R;
    if (j.at("kind").get<std::string>() == "combo") {
        for (const json& term : j.at("combo")) {
            if (!term.is_array() || term.size() != 2)
                throw std::invalid_argument("combo entries must be [r, spec] pairs");
            R.terms.push_back({parse_rat_json(term[0]), parse_arthur_spec(term[1], streams)});
        }
    } else {
        R.terms.push_back({Rat(1), parse_arthur_spec(j, streams)});
    }
    return R;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    return json::parse(in);
}

// Config file for verification runs: any VerifyConfig field by name, plus
// the aliases detmax4 (lift region), pmax (sign scan), and out_dir.
struct RunConfig {
    VerifyConfig v;
    std::string out_dir;
};

RunConfig parse_run_config(const std::string& path) {
    RunConfig rc;
    if (path.empty()) return rc;
    json j = load_json_file(path);
    for (const auto& [key, val] : j.items()) {
        if (key == "lift_detmax4" || key == "detmax4")
            rc.v.lift_detmax4 = val.get<long>();
        else if (key == "group_det4")
            rc.v.group_det4 = val.get<long>();
        else if (key == "prod_detmax4")
            rc.v.prod_detmax4 = val.get<long>();
        else if (key == "prod_box")
            rc.v.prod_box = val.get<long>();
        else if (key == "witt_max")
            rc.v.witt_max = val.get<long>();
        else if (key == "radial_pmax")
            rc.v.radial_pmax = val.get<long>();
        else if (key == "sign_pmax" || key == "pmax")
            rc.v.sign_pmax = val.get<long>();
        else if (key == "xmax")
            rc.v.xmax = val.get<long>();
        else if (key == "cap_pmax")
            rc.v.cap_pmax = val.get<long>();
        else if (key == "cache_dir")
            rc.v.cache_dir = val.get<std::string>();
        else if (key == "out_dir" || key == "output_dir")
            rc.out_dir = val.get<std::string>();
        else
            throw std::invalid_argument("unknown config key: " + key);
    }
    return rc;
}

std::string report_text(const std::vector<VerificationReport>& reps) {
    std::ostringstream os;
    long cases = 0, failures = 0;
    for (const VerificationReport& r : reps) {
        char line[128];
        std::snprintf(line, sizeof line, "%-16s %s  cases=%ld failures=%ld  (%ld ms)\n",
                      r.suite.c_str(), r.pass() ? "PASS" : "FAIL", r.cases, r.failures,
                      r.runtime_ms);
        os << line;
        for (const std::string& d : r.details) os << "    " << d << "\n";
        cases += r.cases;
        failures += r.failures;
    }
    os << "TOTAL suites=" << reps.size() << " cases=" << cases << " failures=" << failures
       << "\n";
    return os.str();
}

// Persisted reports exclude runtime so repeated runs are byte-identical.
json report_json(const std::vector<VerificationReport>& reps) {
    json arr = json::array();
    for (const VerificationReport& r : reps) {
        json one;
        one["suite"] = r.suite;
        one["cases"] = r.cases;
        one["failures"] = r.failures;
        one["details"] = r.details;
        arr.push_back(std::move(one));
    }
    return arr;
}

std::string report_csv(const std::vector<VerificationReport>& reps) {
    std::ostringstream os;
    os << "suite,cases,failures\n";
    for (const VerificationReport& r : reps)
        os << r.suite << "," << r.cases << "," << r.failures << "\n";
    return os.str();
}

bool all_pass(const std::vector<VerificationReport>& reps) {
    for (const VerificationReport& r : reps)
        if (!r.pass()) return false;
    return true;
}

using SuiteFn = VerificationReport (*)(Workspace&);

const std::map<std::string, SuiteFn>& suite_table() {
    static const std::map<std::string, SuiteFn> table = {
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
    return table;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact Fourier expansions, Hecke eigenvalues, and verification suites for\n"
        "degree-2 Siegel forms of lift type (and the weight-20 non-lift)."};
    app.require_subcommand(1);

    std::string g_config, g_cache;
    bool g_json = false, g_csv = false, g_seedless = false;
    app.add_option("--config", g_config,
                   "JSON config for verification runs (fields of the default config by name; "
                   "aliases detmax4, pmax, out_dir)");
    app.add_option("--cache-dir", g_cache, "directory for hashed artifact caches");
    app.add_flag("--json", g_json, "JSON output where supported");
    app.add_flag("--csv", g_csv, "CSV output where supported (the default)");
    app.add_flag("--seedless", g_seedless,
                 "reserved: every computation is already deterministic, no RNG anywhere");

    int rc = 0;

    // elliptic: dump a one-dimensional eigenform stream
    {
        auto* sub = app.add_subcommand("elliptic", "integer eigenform q-expansion by weight");
        static int w = 18;
        static long prec = 100;
        static std::string out;
        sub->add_option("--weight", w, "12, 18, 22, or 26")->required();
        sub->add_option("--precision", prec, "largest index n")->required();
        sub->add_option("--out", out, "write a qseries-v1 cache file instead of dumping");
        sub->callback([&]() {
            rc = guarded([&]() {
                StreamPool streams{prec, {}};
                auto f = streams.get(w);
                std::string label = (w == 12) ? "delta" : "f" + std::to_string(w);
                if (!out.empty()) {
                    QSeriesFile qf;
                    qf.label = label;
                    qf.weight = w;
                    for (const Int& a : f->a) qf.coeffs.emplace_back(a);
                    write_qseries_cache(qf, out);
                    std::printf("wrote %s: label=%s weight=%d precision=%ld\n", out.c_str(),
                                label.c_str(), w, prec);
                    return 0;
                }
                if (g_json) {
                    json j;
                    j["label"] = label;
                    j["weight"] = w;
                    j["precision"] = prec;
                    json coeffs = json::array();
                    for (const Int& a : f->a) coeffs.push_back(a.get_str());
                    j["coeffs"] = std::move(coeffs);
                    emit("", j.dump(2) + "\n");
                } else {
                    std::ostringstream os;
                    os << "n,num,den\n";
                    for (long n = 0; n <= prec; ++n)
                        os << n << "," << f->a[static_cast<size_t>(n)].get_str() << ",1\n";
                    emit("", os.str());
                }
                return 0;
            });
        });
    }

    // cohen: class-number-type values H(r, N)
    {
        auto* sub = app.add_subcommand("cohen", "table of H(r, N) values");
        static int r = 1;
        static long nmax = 100;
        sub->add_option("--r", r, "co-index r >= 1")->required();
        sub->add_option("--n-max", nmax, "largest N")->required();
        sub->callback([&]() {
            rc = guarded([&]() {
                if (r < 1 || nmax < 0) throw std::invalid_argument("need r >= 1 and n-max >= 0");
                std::ostringstream os;
                os << "N,num,den\n";
                for (long n = 0; n <= nmax; ++n) {
                    Rat h = cohen_h(r, n);
                    os << n << "," << h.get_num().get_str() << "," << h.get_den().get_str()
                       << "\n";
                }
                emit("", os.str());
                return 0;
            });
        });
    }

    // jacobi: index-1 cusp form coefficients by discriminant
    {
        auto* sub = app.add_subcommand("jacobi", "index-1 Jacobi cusp form, C(D) table");
        static int w = 10;
        static long maxd = 100;
        sub->add_option("--weight", w, "10 or 12")->required()->check(CLI::IsMember({10, 12}));
        sub->add_option("--max-d", maxd, "largest discriminant D")->required();
        sub->callback([&]() {
            rc = guarded([&]() {
                JacobiIndex1Form phi = cusp_form_10_12(w, maxd);
                std::ostringstream os;
                os << "D,num,den\n";
                for (long d = 0; d <= maxd; ++d) {
                    Rat c = phi.coeff_d(d);
                    os << d << "," << c.get_num().get_str() << "," << c.get_den().get_str()
                       << "\n";
                }
                emit("", os.str());
                return 0;
            });
        });
    }

    // lift: build and cache a full expansion
    {
        auto* sub = app.add_subcommand("lift", "build the lift of the weight-k Jacobi cusp form");
        static int w = 10;
        static long detmax4 = 1000;
        static std::string out;
        sub->add_option("--weight", w, "10 or 12")->required()->check(CLI::IsMember({10, 12}));
        sub->add_option("--detmax4", detmax4, "completeness bound on 4 det T")->required();
        sub->add_option("--out", out, "siegel-v1 cache file")->required();
        sub->callback([&]() {
            rc = guarded([&]() {
                SiegelExpansion F = sk_lift(cusp_form_10_12(w, detmax4), detmax4);
                write_siegel_cache(F, out);
                std::printf("wrote %s: weight=%d detmax4=%ld keys=%zu\n", out.c_str(), F.weight,
                            F.detmax4, F.coeffs.size());
                return 0;
            });
        });
    }

    // coeff: query one coefficient from a cache file
    {
        auto* sub = app.add_subcommand("coeff", "a(T) from a cached expansion");
        static std::string in, matrix;
        sub->add_option("--in", in, "siegel-v1 cache file")->required();
        sub->add_option("--matrix", matrix, "T as n,r,m")->required();
        sub->callback([&]() {
            rc = guarded([&]() {
                SiegelExpansion F = read_siegel_cache(in);
                HalfIntMatrix T = parse_matrix(matrix);
                if (!T.is_psd())
                    throw std::invalid_argument("matrix must be positive semidefinite");
                Rat a = F.coeff(T);
                if (g_json) {
                    json j;
                    j["n"] = T.n;
                    j["r"] = T.r;
                    j["m"] = T.m;
                    j["det4"] = T.det4();
                    j["num"] = a.get_num().get_str();
                    j["den"] = a.get_den().get_str();
                    emit("", j.dump(2) + "\n");
                } else {
                    emit("", a.get_str() + "\n");
                }
                return 0;
            });
        });
    }

    // quad decompose: content / fundamental-discriminant splitting
    {
        auto* quad = app.add_subcommand("quad", "binary quadratic form utilities");
        quad->require_subcommand(1);
        auto* sub = quad->add_subcommand(
            "decompose", "disc T = d L^2 M^2 with d fundamental; prints {L, M, d, class_rep}");
        static long n = 1, r = 1, m = 1;
        sub->add_option("--n", n)->required();
        sub->add_option("--r", r)->required();
        sub->add_option("--m", m)->required();
        sub->callback([&]() {
            rc = guarded([&]() {
                HalfIntMatrix T{n, r, m};
                if (!T.is_pd()) throw std::invalid_argument("matrix must be positive definite");
                Decomposition dec = decompose(T);
                json j;
                j["n"] = T.n;
                j["r"] = T.r;
                j["m"] = T.m;
                j["disc"] = T.disc();
                j["L"] = dec.L;
                j["M"] = dec.M;
                j["d"] = dec.d;
                j["class_rep"] = {{"n", dec.s_c.n}, {"r", dec.s_c.r}, {"m", dec.s_c.m}};
                emit("", j.dump(2) + "\n");
                return 0;
            });
        });
    }

    // hecke: apply T(p) to a cached expansion
    {
        auto* sub = app.add_subcommand("hecke", "apply T(p) to a cached expansion");
        static std::string in, out;
        static long p = 2;
        static bool expect_eigen = false;
        sub->add_option("--in", in, "siegel-v1 cache file")->required();
        sub->add_option("--p", p, "prime")->required();
        sub->add_option("--out", out, "cache file for the transformed expansion");
        sub->add_flag("--expect-eigen", expect_eigen,
                      "assert the input is an eigenform and print the eigenvalue");
        sub->callback([&]() {
            rc = guarded([&]() {
                SiegelExpansion F = read_siegel_cache(in);
                if (expect_eigen)
                    std::printf("eigenvalue=%s\n", eigenvalue(F, p).get_str().c_str());
                SiegelExpansion G = apply_tp(F, p);
                if (!out.empty()) {
                    write_siegel_cache(G, out);
                    std::printf("wrote %s: weight=%d detmax4=%ld box=%ld keys=%zu\n", out.c_str(),
                                G.weight, G.detmax4, G.box, G.coeffs.size());
                } else if (!expect_eigen) {
                    std::printf("applied T(%ld): weight=%d detmax4=%ld box=%ld keys=%zu\n", p,
                                G.weight, G.detmax4, G.box, G.coeffs.size());
                }
                return 0;
            });
        });
    }

    // nonlift20: diagonalize the weight-20 product space
    {
        auto* sub = app.add_subcommand(
            "nonlift20", "weight-20 non-lift eigenform: eigenvalues and first coefficients");
        static long p = 3, detmax4 = 576;
        sub->add_option("--p", p, "prime for the radial check (inert at d = -4)");
        sub->add_option("--detmax4", detmax4, "completeness bound, 4 box^2");
        sub->callback([&]() {
            rc = guarded([&]() {
                long box = isqrt_floor(detmax4 / 4);
                NonliftReport nr = nonlift20(detmax4, box);
                if (splitting_symbol(-4, p) != -1)
                    throw std::invalid_argument(
                        "radial check prime must be inert at d = -4 (p = 3 mod 4)");
                if (p > box || 4 * p * p > detmax4)
                    throw std::invalid_argument("radial check prime outside the region");
                Rat evp = (p == 2)   ? nr.eta2
                          : (p == 3) ? nr.eta3
                                     : eigenvalue(nr.F, p);
                bool radial_ok = nr.F.coeff(p, 0, p) == evp * nr.F.coeff(1, 0, 1);
                json j;
                j["eta2"] = nr.eta2.get_str();
                j["eta3"] = nr.eta3.get_str();
                j["paired_eigenvalues"] = {dstr(nr.paired_plus.to_double()),
                                           dstr(nr.paired_minus.to_double())};
                json coeffs = json::array();
                size_t count = 0;
                for (const HalfIntMatrix& key : canonical_keys(detmax4, box)) {
                    if (++count > 8) break;
                    coeffs.push_back(json::array(
                        {key.n, key.r, key.m, nr.F.coeff(key).get_str()}));
                }
                j["first_coeffs"] = std::move(coeffs);
                j["radial_prime"] = p;
                j["radial_check"] = radial_ok ? "pass" : "fail";
                emit("", j.dump(2) + "\n");
                return radial_ok ? 0 : 2;
            });
        });
    }

    // bessel: empirical ratios against the spherical bound
    {
        auto* sub = app.add_subcommand(
            "bessel", "lift coefficient ratios on a prime cell grid vs the spherical bound");
        static int w = 10;
        static long p = 2, disc = -4, lmax = 2, mmax = 2;
        static std::string in;
        sub->add_option("--weight", w, "10 or 12")->required()->check(CLI::IsMember({10, 12}));
        sub->add_option("--p", p, "prime")->required();
        sub->add_option("--disc", disc, "fundamental discriminant < 0")->required();
        sub->add_option("--lmax", lmax, "largest l");
        sub->add_option("--mmax", mmax, "largest m");
        sub->add_option("--in", in, "reuse a cached lift instead of building one");
        sub->callback([&]() {
            rc = guarded([&]() {
                if (disc >= 0 || factor_discriminant(disc).f != 1)
                    throw std::invalid_argument("disc must be a negative fundamental discriminant");
                Int needed = Int(-disc) * pow_int(p, static_cast<unsigned long>(2 * (lmax + mmax)));
                SiegelExpansion F;
                if (!in.empty()) {
                    F = read_siegel_cache(in);
                    if (F.weight != w) throw std::invalid_argument("cached lift has wrong weight");
                    if (needed > F.detmax4)
                        throw PrecisionError("cached lift region too small; need detmax4 = " +
                                             needed.get_str());
                } else {
                    if (needed > 30000)
                        throw std::invalid_argument(
                            "cell grid needs detmax4 = " + needed.get_str() +
                            "; build a lift separately and pass it with --in");
                    long d4 = needed.get_si();
                    F = sk_lift(cusp_form_10_12(w, d4), d4);
                }
                HalfIntMatrix S{0, 0, 0};
                bool found = false;
                for (const HalfIntMatrix& rep : class_representatives(disc))
                    if (F.coeff(rep) != 0) {
                        S = rep;
                        found = true;
                        break;
                    }
                if (!found)
                    throw VerificationError("no class representative with nonzero coefficient");
                std::ostringstream os;
                os << "l,m,ratio_num,ratio_den,bound_sq_num,bound_sq_den,pass\n";
                bool all_ok = true;
                for (long l = 0; l <= lmax; ++l)
                    for (long m = 0; m <= mmax; ++m) {
                        Rat ratio = empirical_ratio(F, S, p, l, m);
                        Rat bound = iib_spherical_bound_sq({p, l, m});
                        Rat sq = ratio * ratio;
                        // (0,0) sits on the boundary with equality by design
                        bool ok = (l == 0 && m == 0) ? sq <= bound : sq < bound;
                        all_ok = all_ok && ok;
                        os << l << "," << m << "," << ratio.get_num().get_str() << ","
                           << ratio.get_den().get_str() << "," << bound.get_num().get_str()
                           << "," << bound.get_den().get_str() << "," << (ok ? 1 : 0) << "\n";
                    }
                emit("", os.str());
                return all_ok ? 0 : 2;
            });
        });
    }

    // dk-table: size ratios with the refined normalization
    {
        auto* sub = app.add_subcommand(
            "dk-table", "coefficient size table: raw and content-refined ratios, "
                        "window maxima, radial series");
        static int w = 10;
        static long detmax4 = 800, jmax = 12;
        static std::string in, out;
        sub->add_option("--weight", w, "10 or 12")->required()->check(CLI::IsMember({10, 12}));
        sub->add_option("--detmax4", detmax4, "table range on 4 det T");
        sub->add_option("--radial-jmax", jmax, "radial series length");
        sub->add_option("--in", in, "reuse a cached lift instead of building one");
        sub->add_option("--out", out, "write the table to a file");
        sub->callback([&]() {
            rc = guarded([&]() {
                SiegelExpansion F;
                if (!in.empty()) {
                    F = read_siegel_cache(in);
                    if (F.weight != w) throw std::invalid_argument("cached lift has wrong weight");
                    if (detmax4 > F.detmax4)
                        throw PrecisionError("cached lift region too small for the table range");
                } else {
                    F = sk_lift(cusp_form_10_12(w, detmax4), detmax4);
                }
                EllipticEigenform f = newform_onedim(2 * w - 2, 100);
                const double half = (w - 1) / 2.0;
                std::ostringstream os;
                os << "n,r,m,det4,L,M,d,a_num,a_den,ratio_dk,ratio_refined\n";
                std::map<long, std::pair<double, double>> windows;  // lo -> maxima
                for (const HalfIntMatrix& key : canonical_keys(detmax4)) {
                    Rat a = F.coeff(key);
                    Decomposition dec = decompose(key);
                    double absa = std::abs(a.get_d());
                    double ratio_dk = absa / std::pow(key.det4() / 4.0, half);
                    double ratio_refined =
                        absa / (std::pow(static_cast<double>(dec.L), w - 1.0) *
                                std::pow(static_cast<double>(dec.M), w - 1.5) *
                                std::pow(static_cast<double>(-dec.d), half));
                    os << key.n << "," << key.r << "," << key.m << "," << key.det4() << ","
                       << dec.L << "," << dec.M << "," << dec.d << ","
                       << a.get_num().get_str() << "," << a.get_den().get_str() << ","
                       << dstr(ratio_dk) << "," << dstr(ratio_refined) << "\n";
                    long lo = 2;
                    while (2 * lo <= key.det4()) lo *= 2;
                    auto& mx = windows[lo];
                    mx.first = std::max(mx.first, ratio_dk);
                    mx.second = std::max(mx.second, ratio_refined);
                }
                for (const auto& [lo, mx] : windows)
                    os << "# window," << lo << "," << 2 * lo - 1 << "," << dstr(mx.first) << ","
                       << dstr(mx.second) << "\n";
                // radial series on the d = -3 ray at p = 2, normalized by p^{j(k-1)}
                for (long j = 1; j <= jmax; ++j) {
                    Int v = radial_prime_power(f, w, -3, 2, j);
                    Rat q = make_rat(v, pow_int(2, static_cast<unsigned long>(j * (w - 1))));
                    os << "# radial,2," << j << "," << v.get_str() << "," << dstr(q.get_d())
                       << "\n";
                }
                emit(out, os.str());
                return 0;
            });
        });
    }

    // scan signs: eigenvalue sign stream over an arithmetic progression
    {
        auto* scan = app.add_subcommand("scan", "prime-indexed eigenvalue scans");
        scan->require_subcommand(1);
        auto* sub = scan->add_subcommand(
            "signs", "exact sign stream of a packet or combination over primes in an AP");
        static std::string specfile;
        static long modulus = 1, residue = 0, xmax = 1000;
        sub->add_option("--spec", specfile, "packet spec JSON")->required();
        sub->add_option("--modulus", modulus, "AP modulus M");
        sub->add_option("--residue", residue, "AP residue A");
        sub->add_option("--xmax", xmax, "largest prime");
        sub->callback([&]() {
            rc = guarded([&]() {
                if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
                json spec = load_json_file(specfile);
                StreamPool streams{xmax, {}};
                ComboSpec R = parse_combo_spec(spec, streams);
                const char* cs = combo_classify(R) == ComboCase::Case1 ? "Case1" : "Case2";
                std::ostringstream os;
                os << "p,value,sign\n";
                std::vector<std::pair<long, double>> values;
                long skipped = 0;
                for (long p : primes_upto(xmax)) {
                    if (((p % modulus) + modulus) % modulus != ((residue % modulus) + modulus) % modulus)
                        continue;
                    try {
                        HalfPow v = combo_value(R, p);
                        os << p << "," << dstr(v.to_double()) << "," << v.sign() << "\n";
                        values.emplace_back(p, v.to_double());
                    } catch (const std::domain_error&) {
                        ++skipped;
                    }
                }
                os << "# case," << cs << "\n";
                os << "# sign_changes," << count_sign_changes(values, residue, modulus) << "\n";
                os << "# ramified_skipped," << skipped << "\n";
                emit("", os.str());
                return 0;
            });
        });
    }

    // verify: one suite (or all) against the default config
    {
        auto* sub = app.add_subcommand("verify", "run one verification suite");
        static std::string suite;
        sub->add_option("--suite", suite, "suite name, or 'all'")->required();
        sub->callback([&]() {
            rc = guarded([&]() {
                RunConfig rcfg = parse_run_config(g_config);
                if (!g_cache.empty()) rcfg.v.cache_dir = g_cache;
                Workspace ws(rcfg.v);
                std::vector<VerificationReport> reps;
                if (suite == "all") {
                    reps = run_all(ws);
                } else {
                    auto it = suite_table().find(suite);
                    if (it == suite_table().end())
                        throw std::invalid_argument("unknown suite: " + suite);
                    reps.push_back(it->second(ws));
                }
                if (g_json)
                    emit("", report_json(reps).dump(2) + "\n");
                else
                    emit("", report_text(reps));
                return all_pass(reps) ? 0 : 2;
            });
        });
    }

    // run-all: every suite, optional persisted reports
    {
        auto* sub = app.add_subcommand("run-all", "run every verification suite in order");
        static std::string out_dir;
        sub->add_option("--out-dir", out_dir, "write report.json and report.csv here");
        sub->callback([&]() {
            rc = guarded([&]() {
                RunConfig rcfg = parse_run_config(g_config);
                if (!g_cache.empty()) rcfg.v.cache_dir = g_cache;
                if (!out_dir.empty()) rcfg.out_dir = out_dir;
                Workspace ws(rcfg.v);
                std::vector<VerificationReport> reps = run_all(ws);
                emit("", report_text(reps));
                for (const std::string& ev : ws.build_events())
                    std::printf("artifact %s\n", ev.c_str());
                if (!rcfg.out_dir.empty()) {
                    std::filesystem::create_directories(rcfg.out_dir);
                    emit((std::filesystem::path(rcfg.out_dir) / "report.json").string(),
                         report_json(reps).dump(2) + "\n");
                    emit((std::filesystem::path(rcfg.out_dir) / "report.csv").string(),
                         report_csv(reps));
                }
                return all_pass(reps) ? 0 : 2;
            });
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 4;
    }
    (void)g_csv;
    (void)g_seedless;
    return rc;
}
