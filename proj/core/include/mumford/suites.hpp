#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mumford {

struct CheckResult {
    std::string name;
    std::string detail;
    int points = 0;
    std::string max_residual = "0";
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::string to_json() const;
    std::string to_text() const;
};

// One suite per acceptance criterion; the CLI verbs and the acceptance
// binary share these.
SuiteReport suite_cohomology_tables(int gmax = 6);
SuiteReport suite_strata(int gmax = 6);
SuiteReport suite_q_euler(int gmax = 6);
SuiteReport suite_invariance(std::uint64_t seed = 0, int points = 20);
SuiteReport suite_commutativity(std::uint64_t seed = 0, int points = 20);
SuiteReport suite_map_identities(std::uint64_t seed = 0, int points = 20);
SuiteReport suite_fiber(std::uint64_t seed = 0, int points = 20);
SuiteReport suite_conservation(std::uint64_t seed = 0);
SuiteReport suite_closed_forms(std::uint64_t seed = 0);
SuiteReport suite_theta(std::uint64_t seed = 0);

std::vector<SuiteReport> run_all_suites(std::uint64_t seed = 0);

/// Gauge-sweep experiment for the even-period lift: reports whether the
/// invariant pair (Tr, det) and b0 move as the gauge varies.
struct GaugeSweepRow {
    std::string gauge;
    std::string trace;
    std::string det;
    std::string b0;
};
std::vector<GaugeSweepRow> sweep_gauge(std::uint64_t seed, int g, int samples);

}  // namespace mumford
