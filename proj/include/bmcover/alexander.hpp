#pragma once

#include "bmcover/braid.hpp"
#include "bmcover/poly_matrix.hpp"

#include <string>

namespace bmcover {

/// Reduced Burau matrix of w, rank strands-1 over Z[t,1/t]. The generator
/// beta_j sends e_{j-1} -> e_{j-1} + t e_j, e_j -> -t e_j,
/// e_{j+1} -> e_j + e_{j+1} (column convention); inverse letters use the exact
/// inverse matrix; first letter is the leftmost factor.
PolyMatrix reduced_burau_of_word(const BraidWord& w);

/// Single Burau generator matrix (sign -1 for the inverse).
PolyMatrix burau_generator(int strands, int j, int sign);

/// Alexander polynomial of the closure, up to units: the unit-normalized q
/// with q * (1 + t + ... + t^{n-1}) = +-t^a * det(burau(w) - I). Returns the
/// zero polynomial when the determinant vanishes (split closures).
LaurentPoly alexander_of_closure(const BraidWord& w);

enum class UnknotVerdict { consistent_with_unknot, not_unknot, inconclusive_multicomponent };

const char* unknot_verdict_name(UnknotVerdict v);

struct UnknotEvidence {
    std::string word_id;
    int component_count = 0;
    LaurentPoly alexander; // unit-normalized (zero stays zero)
    UnknotVerdict verdict = UnknotVerdict::inconclusive_multicomponent;
};

/// Necessary-condition certificate: a single-component closure with trivial
/// Alexander polynomial is consistent with the unknot; a single component
/// with nontrivial polynomial is certainly knotted.
UnknotEvidence unknot_evidence(const BraidWord& w, std::string word_id = "");

struct CoveringLinkInvariant {
    int m = 2;
    long long k = 0;
    LaurentPoly char_poly;         // monic char poly of the covering monodromy
    LaurentPoly reduced_alexander; // unit-normalized quotient by (t - 1)
    Int linking_eval;              // reduced_alexander(1)
};

/// Full covering-link pipeline for L_{2m,k}: word-product monodromy, its
/// characteristic polynomial, exact division by (t - 1), unit normalization,
/// evaluation at 1.
CoveringLinkInvariant covering_invariants(int m, long long k);

/// Printed closed form for the reduced Alexander polynomial of L_{2m,k}.
LaurentPoly theorem_dd(int m, long long k);

/// Printed linking-number formula: the predicted value of -reduced_alexander(1),
/// (4m+132)k^2 - (12m+150)k + (9m+36).
Int linking_formula(int m, long long k);

} // namespace bmcover
