#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "sk2/cache.hpp"
#include "sk2/errors.hpp"
#include "sk2/verify.hpp"

using namespace sk2;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "sk2_verify_test" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

VerifyConfig small_config(const std::string& cache_dir = {}) {
    VerifyConfig cfg;
    cfg.lift_detmax4 = 400;
    cfg.group_det4 = 200;
    cfg.prod_detmax4 = 256;
    cfg.prod_box = 8;
    cfg.witt_max = 4;
    cfg.radial_pmax = 7;
    cfg.sign_pmax = 2000;
    cfg.xmax = 2000;
    cfg.cap_pmax = 200;
    cfg.cache_dir = cache_dir;
    return cfg;
}

bool has_event(const Workspace& ws, const std::string& ev) {
    const auto& events = ws.build_events();
    return std::find(events.begin(), events.end(), ev) != events.end();
}

// edits the payload of a cache file and recomputes the content hash
void edit_payload(const fs::path& path, const std::function<void(std::string&)>& edit) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    size_t nl = text.find('\n');
    REQUIRE(nl != std::string::npos);
    std::string header = text.substr(0, nl);
    std::string payload = text.substr(nl + 1);
    edit(payload);
    size_t hpos = header.rfind("hash=");
    REQUIRE(hpos != std::string::npos);
    header = header.substr(0, hpos) + "hash=" + fnv1a64(payload);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << header << "\n" << payload;
}

}  // namespace

TEST_CASE("prime radial factor: closed form and recursion agree") {
    EllipticEigenform f18 = newform_onedim(18, 60);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        for (long d : {-3L, -4L}) {
            CAPTURE(p);
            CAPTURE(d);
            CHECK_EQ(radial_prime_power(f18, 10, d, p, 0), Int(1));
            CHECK_EQ(radial_prime_power(f18, 10, d, p, 1), kohnen_eta(f18, 10, d, p));
        }
    }
    CHECK_EQ(kohnen_eta(f18, 10, -3, 2), Int(240));
    CHECK_EQ(kohnen_eta(f18, 10, -4, 3), Int(21960));
    CHECK_THROWS_AS(radial_prime_power(f18, 10, -3, 2, -1), std::invalid_argument);
}

TEST_CASE("prime-power radial factors match lift coefficients") {
    EllipticEigenform f18 = newform_onedim(18, 60);
    SiegelExpansion l10 = sk_lift(cusp_form_10_12(10, 200), 200);
    // seed (1,1,1) of discriminant -3 scaled by 2, 4, and 6
    Rat base = l10.coeff(1, 1, 1);
    CHECK_EQ(l10.coeff(2, 2, 2) / base, Rat(radial_prime_power(f18, 10, -3, 2, 1)));
    CHECK_EQ(l10.coeff(4, 4, 4) / base, Rat(radial_prime_power(f18, 10, -3, 2, 2)));
    Rat at6 = l10.coeff(6, 6, 6) / base;
    Rat expect6 = Rat(radial_prime_power(f18, 10, -3, 2, 1) * radial_prime_power(f18, 10, -3, 3, 1));
    CHECK_EQ(at6, expect6);
    // seed (1,0,1) of discriminant -4 scaled by 3
    CHECK_EQ(l10.coeff(3, 0, 3) / l10.coeff(1, 0, 1), Rat(radial_prime_power(f18, 10, -4, 3, 1)));
}

TEST_CASE("workspace builds, caches, and revalidates artifacts") {
    fs::path dir = fresh_dir("events");
    VerifyConfig cfg = small_config(dir.string());

    Workspace ws1(cfg);
    ws1.lift(10);
    ws1.elliptic(18);
    CHECK(has_event(ws1, "l10=built"));
    CHECK(has_event(ws1, "f18=built"));
    CHECK(fs::exists(dir / "l10.siegel"));
    CHECK(fs::exists(dir / "f18.qseries"));

    Workspace ws2(cfg);
    ws2.lift(10);
    ws2.elliptic(18);
    CHECK(has_event(ws2, "l10=cached"));
    CHECK(has_event(ws2, "f18=cached"));

    // a larger region invalidates the siegel artifact
    VerifyConfig bigger = cfg;
    bigger.lift_detmax4 = 500;
    Workspace ws3(bigger);
    ws3.lift(10);
    CHECK(has_event(ws3, "l10=built"));

    // a shorter elliptic stream is served from the longer cached one
    VerifyConfig shorter = cfg;
    shorter.xmax = 1000;
    Workspace ws4(shorter);
    ws4.elliptic(18);
    CHECK(has_event(ws4, "f18=cached"));

    VerifyConfig longer = cfg;
    longer.xmax = 3000;
    Workspace ws5(longer);
    ws5.elliptic(18);
    CHECK(has_event(ws5, "f18=built"));

    // in-memory workspaces reuse without touching the filesystem
    Workspace mem(small_config());
    mem.lift(10);
    mem.lift(10);
    CHECK_EQ(std::count(mem.build_events().begin(), mem.build_events().end(), "l10=built"), 1);
}

TEST_CASE("raw cache corruption surfaces as a cache error") {
    fs::path dir = fresh_dir("rawtamper");
    VerifyConfig cfg = small_config(dir.string());
    Workspace ws1(cfg);
    ws1.lift(10);

    fs::path path = dir / "l10.siegel";
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    size_t pos = text.rfind("-240");
    REQUIRE(pos != std::string::npos);
    text[pos + 1] = '1';
    std::ofstream(path, std::ios::binary | std::ios::trunc) << text;

    Workspace ws2(cfg);
    CHECK_THROWS_AS(ws2.lift(10), CacheError);
}

TEST_CASE("rehashed corruption is caught by the verification suites") {
    fs::path dir = fresh_dir("rehash");
    VerifyConfig cfg = small_config(dir.string());
    Workspace ws1(cfg);
    ws1.lift(10);

    // (1,1,4) and (2,1,2) share discriminant and content, so the grouping
    // suite must see through a consistent single-coefficient edit
    edit_payload(dir / "l10.siegel", [](std::string& payload) {
        size_t pos = payload.find("1 1 4 -240 1");
        REQUIRE(pos != std::string::npos);
        payload.replace(pos, 12, "1 1 4 -239 1");
    });

    Workspace ws2(cfg);
    CHECK_EQ(ws2.lift(10).coeff(1, 1, 4), Rat(-239));
    VerificationReport rep = verify_skkey(ws2);
    CHECK_FALSE(rep.pass());
    CHECK_GT(rep.failures, 0);
}

TEST_CASE("every suite passes on a reduced configuration") {
    Workspace ws(small_config());
    std::vector<VerificationReport> reports = run_all(ws);
    REQUIRE_EQ(reports.size(), 12);
    long failures = 0;
    for (const VerificationReport& rep : reports) {
        CAPTURE(rep.suite);
        CHECK(rep.pass());
        CHECK_GT(rep.cases, 0);
        failures += rep.failures;
        for (const std::string& line : rep.details)
            if (rep.pass()) CHECK_EQ(line.rfind("info:", 0), 0);
    }
    CHECK_EQ(failures, 0);
    // suite names are unique
    std::vector<std::string> names;
    for (const VerificationReport& rep : reports) names.push_back(rep.suite);
    std::sort(names.begin(), names.end());
    CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
}
