// Full-scale acceptance run: every verification suite at the default desk
// configuration, each against a wall-clock budget. One line per criterion.
#include <chrono>
#include <cstdio>
#include <vector>

#include "sk2/verify.hpp"

using namespace sk2;

namespace {

struct Criterion {
    int number;
    const char* name;
    VerificationReport (*suite)(Workspace&);
    long budget_s;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "prime radial identity on lifts", verify_radial, 60},
        {2, "coefficients constant on discriminant-content classes", verify_skkey, 60},
        {3, "eisenstein diagonal restriction", verify_witt, 120},
        {4, "hecke action matches the eigenvalue stream", verify_hecke_oracle, 300},
        {5, "weight-20 diagonalization and non-lift eigenvector", verify_nonlift20, 600},
        {6, "spherical bessel bound compliance", verify_bessel_bounds, 60},
        {7, "size windows and radial interval", verify_dk, 60},
        {8, "eventual sign stability", verify_sign_stability, 60},
        {9, "progression sign changes and drift", verify_selberg_ap, 300},
        {10, "character-driven sign trichotomy", verify_cap_trichotomy, 10},
        {11, "class-number and discriminant-form oracles", verify_cross_oracle, 10},
        {12, "combination classifier and envelopes", verify_combo, 10},
    };

    Workspace ws;  // default configuration, in-memory artifacts
    int failed = 0;
    long total_cases = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        VerificationReport rep;
        bool threw = false;
        std::string what;
        try {
            rep = c.suite(ws);
        } catch (const std::exception& e) {
            threw = true;
            what = e.what();
        }
        long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        bool in_budget = ms <= c.budget_s * 1000;
        bool ok = !threw && rep.pass() && in_budget;
        std::printf("%s criterion %d: %s (cases=%ld, %ld ms <= %ld s)\n", ok ? "PASS" : "FAIL",
                    c.number, c.name, rep.cases, ms, c.budget_s);
        if (threw) std::printf("    error: %s\n", what.c_str());
        if (!threw && !rep.pass())
            for (const std::string& line : rep.details)
                if (line.rfind("info:", 0) != 0) std::printf("    %s\n", line.c_str());
        if (!in_budget) std::printf("    budget exceeded\n");
        if (!ok) ++failed;
        total_cases += rep.cases;
    }
    std::printf("%d/12 criteria passed, %ld cases checked\n", 12 - failed, total_cases);
    return failed == 0 ? 0 : 1;
}
