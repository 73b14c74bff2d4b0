#pragma once

#include "bmcover/json_io.hpp"

#include <string>
#include <vector>

namespace bmcover {

/// One verification check. REQUIRED checks are mathematically forced
/// (oracle-internal invariants, the printed monodromy, the family closures
/// being unknots); a failure means the build is broken. EXPECTED checks
/// compare the oracle against printed closed forms that may carry typos;
/// mismatches are warnings carrying the full diff.
struct VerifyCheck {
    enum class Tier { required, expected };

    std::string name;
    Tier tier = Tier::required;
    bool pass = false;
    std::string summary;
    Json payload; // details: case counts, diffs, offending tuples

    const char* tier_name() const { return tier == Tier::required ? "required" : "expected"; }
};

struct VerifyOptions {
    // covering grids (m is the half strand count)
    int m_max = 5;
    long long k_max = 5;
    // gamma closed-form sweep
    int n_max = 10;
    long long gamma_k_max = 5;
    // phi/psi/omega closed-form sweeps
    int closed_m_max = 5;
    long long closed_k_max = 4;
    // oracle-internal structure grid
    int grid_m_max = 6;
    long long grid_k_max = 5;
    // unknot evidence sweep (m here is the braid strand count of B_{m,k})
    int unknot_m_max = 8;
    long long unknot_k_max = 4;
    // randomized property checks
    int random_pairs = 200;
};

VerifyCheck check_omega40_printed();
VerifyCheck check_charpoly40();
VerifyCheck check_gamma_closed(const VerifyOptions& opt);
VerifyCheck check_monodromy_grid(const VerifyOptions& opt);
VerifyCheck check_unknot_evidence(const VerifyOptions& opt);
VerifyCheck check_burau_small();
VerifyCheck check_markov_invariance(const VerifyOptions& opt);
VerifyCheck check_functoriality(const VerifyOptions& opt);
VerifyCheck check_sw_identities();
VerifyCheck check_dd_formula(const VerifyOptions& opt);
VerifyCheck check_linking_formula(const VerifyOptions& opt);
VerifyCheck check_closed_family(ClosedFamily family, const VerifyOptions& opt);
VerifyCheck check_e1_distinctness(const VerifyOptions& opt);

/// Run the named verification set: one of gamma|phi|psi|omega|dd|linking|
/// unknots|all.
std::vector<VerifyCheck> run_verify(const std::string& which, const VerifyOptions& opt);

bool any_required_failure(const std::vector<VerifyCheck>& checks);
int expected_mismatch_count(const std::vector<VerifyCheck>& checks);

} // namespace bmcover
