#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sk2/arthur.hpp"
#include "sk2/bessel.hpp"
#include "sk2/heckeop.hpp"

namespace sk2 {

// Outcome of one verification suite. details holds one line per failed
// case ("case: expected E, got G") plus deterministic informational lines
// prefixed "info:". runtime_ms is never part of persisted payloads.
struct VerificationReport {
    std::string suite;
    long cases = 0;
    long failures = 0;
    std::vector<std::string> details;
    long runtime_ms = 0;
    bool pass() const { return failures == 0; }
};

// Desk-scale sizes for the full verification run. The defaults satisfy
// every suite's needs: lift_detmax4 = 8836 = 4 * 47^2 covers prime radials
// to p = 47 on seeds of determinant 1.
struct VerifyConfig {
    long lift_detmax4 = 8836;
    long group_det4 = 800;    // grouping identity range
    long prod_detmax4 = 576;  // weight-20 product region, 4 * box^2
    long prod_box = 12;
    long witt_max = 8;        // diagonal-restriction range
    long radial_pmax = 47;
    long sign_pmax = 10000;
    long xmax = 10000;  // prime-sum scans and elliptic precision
    long cap_pmax = 1000;
    std::string cache_dir;  // empty: in-memory only
};

// Lazily built artifacts shared across suites, with optional disk cache.
// Cached files are re-validated on load (content hash + declared region);
// files whose parameters do not match the config are rebuilt.
class Workspace {
public:
    explicit Workspace(VerifyConfig cfg = {});

    const VerifyConfig& cfg() const { return cfg_; }

    // Elliptic eigenform streams at precision xmax; w in {18, 22}.
    std::shared_ptr<const EllipticEigenform> elliptic(int w);
    // Coefficients of the weight-12 discriminant form through xmax.
    const std::vector<Int>& tau();
    // Lifts at lift_detmax4; k in {10, 12}.
    const SiegelExpansion& lift(int k);
    // Degree-2 Eisenstein series at prod_detmax4; k in {4, 6}.
    const SiegelExpansion& eisenstein2(int k);
    // Weight-20 product basis on (prod_detmax4, prod_box).
    const std::vector<SiegelExpansion>& basis20();

    // "name=built" / "name=cached" in build order.
    const std::vector<std::string>& build_events() const { return events_; }

private:
    const SiegelExpansion& siegel_artifact(const std::string& name, int weight, long detmax4,
                                           long box, bool cusp,
                                           const std::function<SiegelExpansion()>& build);

    VerifyConfig cfg_;
    std::map<std::string, SiegelExpansion> siegel_;
    std::map<int, std::shared_ptr<const EllipticEigenform>> elliptic_;
    std::vector<SiegelExpansion> basis20_;
    std::vector<Int> tau_;
    std::vector<std::string> events_;
};

// a(p T0) / a(T0) for the lift of weight k on a fundamental seed of
// discriminant d: p^{k-1} - chi_d(p) p^{k-2} + a_f(p).
Int kohnen_eta(const EllipticEigenform& f, int k, long d, long p);

// a(p^j T0) / a(T0), via the half-integral-weight Hecke recursion on the
// seed's discriminant ray; j = 1 reduces to kohnen_eta.
Int radial_prime_power(const EllipticEigenform& f, int k, long d, long p, long j);

// The verification suites, one per acceptance area.
VerificationReport verify_cross_oracle(Workspace& ws);     // class-number + discriminant-form oracles
VerificationReport verify_radial(Workspace& ws);           // prime radial identity on lifts
VerificationReport verify_skkey(Workspace& ws);            // (discriminant, content) grouping
VerificationReport verify_witt(Workspace& ws);             // Eisenstein diagonal restriction
VerificationReport verify_hecke_oracle(Workspace& ws);     // T(p) on lifts + coset counts
VerificationReport verify_nonlift20(Workspace& ws);        // weight-20 diagonalization
VerificationReport verify_bessel_bounds(Workspace& ws);    // spherical bound compliance
VerificationReport verify_dk(Workspace& ws);               // size windows + radial interval
VerificationReport verify_sign_stability(Workspace& ws);   // eventual constant sign
VerificationReport verify_selberg_ap(Workspace& ws);       // AP sign changes + drift
VerificationReport verify_cap_trichotomy(Workspace& ws);   // character-driven sign laws
VerificationReport verify_combo(Workspace& ws);            // combination classifier + envelopes

// Every suite in dependency order.
std::vector<VerificationReport> run_all(Workspace& ws);

}  // namespace sk2
