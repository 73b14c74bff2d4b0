// Acceptance suite: one line per criterion. REQUIRED criteria are
// mathematically forced and fail the run; EXPECTED criteria compare the
// oracle against printed closed forms and downgrade to warnings with full
// diffs. Everything is exact integer arithmetic, so every tolerance is
// equality.

#include "bmcover/alexander.hpp"
#include "bmcover/cover.hpp"
#include "bmcover/json_io.hpp"
#include "bmcover/sw_calc.hpp"
#include "bmcover/verify.hpp"

#include <cstdio>
#include <string>
#include <vector>

using namespace bmcover;

namespace {

struct Line {
    int criterion;
    bool required;
    bool pass;    // criterion satisfied (for expected: no unexplained failure)
    bool warn;    // expected-tier mismatch surfaced
    std::string text;
    std::vector<std::string> details;
};

std::vector<Line> g_lines;

void report(int criterion, bool required, const VerifyCheck& check,
            std::vector<std::string> details = {}) {
    Line l;
    l.criterion = criterion;
    l.required = required;
    l.pass = required ? check.pass : true;
    l.warn = !required && !check.pass;
    l.text = check.summary;
    l.details = std::move(details);
    g_lines.push_back(std::move(l));
}

std::string diff_lines(const DiscrepancyReport& rep) {
    std::string out;
    for (const auto& c : rep.cases) {
        if (!c.supported || c.equal) continue;
        out += "    " + rep.family + " at";
        for (const auto& [name, value] : c.params)
            out += " " + name + "=" + std::to_string(value);
        out += ":";
        for (const auto& [r, col] : c.diff_positions) {
            out += " (" + std::to_string(r) + "," + std::to_string(col) + ") printed " +
                   to_decimal(c.closed->at(r - 1, col - 1)) + " vs oracle " +
                   to_decimal(c.oracle->at(r - 1, col - 1)) + ";";
        }
        out += "\n";
    }
    return out;
}

} // namespace

int main() {
    VerifyOptions opt;
    opt.m_max = 5;
    opt.k_max = 5;
    opt.n_max = 10;
    opt.gamma_k_max = 5;
    opt.closed_m_max = 5;
    opt.closed_k_max = 4;
    opt.grid_m_max = 6;
    opt.grid_k_max = 5;
    opt.unknot_m_max = 8;
    opt.unknot_k_max = 4;
    opt.random_pairs = 200;

    report(1, true, check_omega40_printed());
    report(2, true, check_charpoly40());

    {
        VerifyCheck gamma = check_gamma_closed(opt);
        // the two hand-derived cases named by the criterion
        const IntMatrix base = homology_monodromy(gamma_word(2, 4));
        const bool hand = gamma_power_closed(4, 1) == mat_pow(base, 1) &&
                          gamma_power_closed(4, 2) == mat_pow(base, 2);
        if (!hand) {
            gamma.pass = false;
            gamma.summary = "hand-derived n=4 twist powers disagree";
        }
        report(3, true, gamma);
    }

    report(4, true, check_monodromy_grid(opt));
    report(5, true, check_unknot_evidence(opt));
    report(6, true, check_burau_small());
    report(7, true, check_markov_invariance(opt));
    report(8, true, check_functoriality(opt));
    report(9, true, check_sw_identities());
    report(10, false, check_dd_formula(opt));
    report(11, false, check_linking_formula(opt));

    {
        // closed-form sweeps on m in [3,5], k in [0,4]
        CompareRanges r;
        r.m_min = 3;
        r.m_max = 5;
        r.k_max = 4;
        const DiscrepancyReport phi = compare_closed_vs_oracle(ClosedFamily::phi, r);
        const DiscrepancyReport psi = compare_closed_vs_oracle(ClosedFamily::psi, r);
        const DiscrepancyReport omega = compare_closed_vs_oracle(ClosedFamily::omega, r);
        const int mism = phi.mismatch_count() + psi.mismatch_count() + omega.mismatch_count();
        Line l;
        l.criterion = 12;
        l.required = false;
        l.pass = true;
        l.warn = mism > 0;
        if (mism == 0) {
            l.text = "printed closed forms equal their word-product oracles";
        } else {
            l.text = "printed closed forms differ from the word oracle in " +
                     std::to_string(mism) + " cases (phi " +
                     std::to_string(phi.mismatch_count()) + ", psi " +
                     std::to_string(psi.mismatch_count()) + ", omega " +
                     std::to_string(omega.mismatch_count()) + "); full diffs follow";
            for (const auto* rep : {&phi, &psi, &omega}) {
                const std::string d = diff_lines(*rep);
                if (!d.empty()) l.details.push_back(d);
            }
        }
        g_lines.push_back(std::move(l));
    }

    report(13, false, check_e1_distinctness(opt));

    int required_failures = 0;
    int warnings = 0;
    for (const auto& l : g_lines) {
        const char* status = l.required ? (l.pass ? "PASS" : "FAIL") : (l.warn ? "WARN" : "PASS");
        if (l.required && !l.pass) ++required_failures;
        if (l.warn) ++warnings;
        std::printf("criterion %02d [%s] %s  %s\n", l.criterion,
                    l.required ? "REQUIRED" : "EXPECTED", status, l.text.c_str());
        for (const auto& d : l.details) std::fputs(d.c_str(), stdout);
    }
    std::printf("acceptance: %d required failures, %d expected warnings\n", required_failures,
                warnings);
    return required_failures == 0 ? 0 : 1;
}
