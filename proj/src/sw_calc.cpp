#include "bmcover/sw_calc.hpp"

#include "bmcover/alexander.hpp"

namespace bmcover {

SWExpr sw_link_surgery(const LaurentPoly& delta_sym, const std::vector<PieceDescriptor>& pieces) {
    if (pieces.empty()) throw DomainError(Errc::bad_index, "need at least one piece");
    if (!(delta_sym == delta_sym.reciprocal_substitution()))
        throw DomainError(Errc::non_reciprocal, "delta is not symmetric");

    SWExpr out;
    // t-exponent e becomes s-exponent 2e
    for (const auto& [e, c] : delta_sym.terms()) out.p.set_coeff(2 * e, c);

    LaurentPoly s_factor;
    s_factor.set_coeff(1, 1);
    s_factor.set_coeff(-1, -1); // s - 1/s
    for (const auto& piece : pieces) {
        if (piece.is_e1) continue; // SW_E(1) * (s - 1/s) is defined to be 1
        out.p = out.p * piece.sw.p * s_factor;
    }
    return out;
}

Int total_sw(const SWExpr& e) { return evaluate_at_one(e.p); }

const char* distinguish_verdict_name(DistinguishVerdict v) {
    switch (v) {
    case DistinguishVerdict::distinct: return "distinct";
    case DistinguishVerdict::not_distinct: return "not_distinct";
    case DistinguishVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

DistinguishVerdict distinguish(int m, long long i, long long j, bool sw_nonzero) {
    if (!sw_nonzero) return DistinguishVerdict::inconclusive;
    const LaurentPoly a = covering_invariants(m, i).reduced_alexander;
    const LaurentPoly b = covering_invariants(m, j).reduced_alexander;
    // covering_invariants already unit-normalizes, so plain equality is
    // equality up to units
    return a == b ? DistinguishVerdict::not_distinct : DistinguishVerdict::distinct;
}

Int e1_family_invariant(int m, long long k) {
    const LaurentPoly dd = covering_invariants(m, k).reduced_alexander;
    return total_sw(sw_link_surgery(symmetrize(dd), {PieceDescriptor::e1(), PieceDescriptor::e1()}));
}

FiberData covering_fiber_data(int m2) {
    if (m2 < 4 || m2 % 2 != 0)
        throw DomainError(Errc::bad_index,
                          "even strand count 2m >= 4 required, got " + std::to_string(m2));
    FiberData fd;
    fd.fiber_genus = m2 / 2 - 1;
    fd.boundary_components = 2;
    fd.h1_rank = m2 - 1;
    fd.lefschetz_fiber_genus = m2 - 1;
    return fd;
}

} // namespace bmcover
