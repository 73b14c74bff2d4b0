#pragma once

#include "bmcover/braid.hpp"
#include "bmcover/int_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bmcover {

/// Homology action of the Dehn twist lifted from beta_j in the double
/// branched cover: rank n-1 matrix I + J (sign +1) or I - J (sign -1), where
/// row j of J has +1 in column j-1 and -1 in column j+1. Since J^2 = 0 the two
/// signs are mutually inverse.
IntMatrix dehn_twist_matrix(int strands, int j, int sign);

/// Product of twist matrices over the letters of w, first letter leftmost.
IntMatrix homology_monodromy(const BraidWord& w);

/// Closed form for the k-th power of the Gamma_{n-2} twist product on n
/// strands. Even n transcribes the printed block form (the alternating
/// pattern anchored at the last block row); odd n is the derived variant
/// validated against the mat_pow oracle.
IntMatrix gamma_power_closed(int n, long long k);

/// Printed closed form for Phi_{2m,k} (2m >= 6), transcribed literally,
/// including the suspect "2k-11" entry. The comparison report is where any
/// difference from the word-product oracle surfaces.
IntMatrix phi_closed(int m2, long long k);

/// Printed closed form for Psi_{2m} (2m >= 6).
IntMatrix psi_closed(int m2);

/// Printed closed form for the monodromy Omega_{2m,k} (2m >= 6), transcribed
/// literally from a(k) = 140k^2-64k-10, b(k) = -80k^2+54k+8,
/// c(k) = 300k^2-156k-25 and the numeric tail rows.
IntMatrix omega_closed(int m2, long long k);

enum class ClosedFamily { gamma, phi, psi, omega };

std::optional<ClosedFamily> closed_family_from_name(const std::string& name);
const char* closed_family_name(ClosedFamily f);

struct CompareCase {
    std::vector<std::pair<std::string, long long>> params;
    bool supported = true;
    std::string note;       // set when the tuple is rejected
    bool equal = false;
    std::optional<IntMatrix> closed;
    std::optional<IntMatrix> oracle;
    std::vector<std::pair<int, int>> diff_positions; // 1-based
};

struct DiscrepancyReport {
    std::string family;
    std::vector<CompareCase> cases;

    int mismatch_count() const;
    int rejected_count() const;
};

/// Sweep ranges for compare_closed_vs_oracle. gamma uses [n_min,n_max] x
/// [k_min,k_max]; phi/omega use m in [m_min,m_max] (strand count 2m) x
/// [0,k_max]; psi ignores the k range. Out-of-domain tuples are recorded as
/// rejected cases, not errors.
struct CompareRanges {
    int n_min = 4, n_max = 10;
    long long k_min = -5, k_max = 5;
    int m_min = 2, m_max = 5;
};

/// Computes closed form and word-product oracle for every tuple in the grid
/// and records equality (entrywise diff positions when unequal). Tuples are
/// evaluated concurrently; the report order is the deterministic grid order.
DiscrepancyReport compare_closed_vs_oracle(ClosedFamily family, const CompareRanges& ranges);

} // namespace bmcover
