#include "bmcover/alexander.hpp"

#include "bmcover/cover.hpp"
#include "bmcover/int_matrix.hpp"

namespace bmcover {

PolyMatrix burau_generator(int strands, int j, int sign) {
    if (strands < 2) throw DomainError(Errc::bad_index, "need at least 2 strands");
    if (j < 1 || j > strands - 1)
        throw DomainError(Errc::bad_index, "generator index " + std::to_string(j));
    const int r = strands - 1;
    PolyMatrix m = PolyMatrix::identity(r);
    const int c = j - 1;
    if (sign > 0) {
        m.at(c, c) = LaurentPoly::monomial(1, -1); // -t
        if (c >= 1) m.at(c, c - 1) = LaurentPoly::monomial(1, 1);
        if (c + 1 < r) m.at(c, c + 1) = LaurentPoly(1);
    } else {
        m.at(c, c) = LaurentPoly::monomial(-1, -1); // -1/t
        if (c >= 1) m.at(c, c - 1) = LaurentPoly(1);
        if (c + 1 < r) m.at(c, c + 1) = LaurentPoly::monomial(-1, 1);
    }
    return m;
}

namespace {

// Right-multiply by a Burau generator in place. The generator differs from
// the identity only in row j-1, so only columns j-2, j-1, j change; they are
// combinations of the old column j-1.
void apply_burau(PolyMatrix& m, int j, int sign) {
    const int r = m.rank;
    const int c = j - 1;
    const LaurentPoly t = LaurentPoly::monomial(1, 1);
    const LaurentPoly tinv = LaurentPoly::monomial(-1, 1);
    for (int i = 0; i < r; ++i) {
        const LaurentPoly old = m.at(i, c);
        if (old.is_zero()) continue;
        if (sign > 0) {
            if (c >= 1) m.at(i, c - 1) += old * t;
            m.at(i, c) = old * LaurentPoly::monomial(1, -1);
            if (c + 1 < r) m.at(i, c + 1) += old;
        } else {
            if (c >= 1) m.at(i, c - 1) += old;
            m.at(i, c) = old * LaurentPoly::monomial(-1, -1);
            if (c + 1 < r) m.at(i, c + 1) += old * tinv;
        }
    }
}

} // namespace

PolyMatrix reduced_burau_of_word(const BraidWord& w) {
    if (w.strands < 2) throw DomainError(Errc::bad_index, "need at least 2 strands");
    PolyMatrix m = PolyMatrix::identity(w.strands - 1);
    for (int l : w.letters) apply_burau(m, l < 0 ? -l : l, l < 0 ? -1 : 1);
    return m;
}

LaurentPoly alexander_of_closure(const BraidWord& w) {
    if (w.letters.empty()) throw DomainError(Errc::empty_word, "closure of the empty word");
    const int n = w.strands;
    PolyMatrix b = reduced_burau_of_word(w);
    for (int i = 0; i < b.rank; ++i) b.at(i, i) -= LaurentPoly(1);
    const LaurentPoly d = pm_det(b);
    if (d.is_zero()) return {};
    LaurentPoly ones;
    for (int e = 0; e < n; ++e) ones.set_coeff(e, 1);
    return normalize_unit(divide_exact(d, ones));
}

const char* unknot_verdict_name(UnknotVerdict v) {
    switch (v) {
    case UnknotVerdict::consistent_with_unknot: return "consistent_with_unknot";
    case UnknotVerdict::not_unknot: return "not_unknot";
    case UnknotVerdict::inconclusive_multicomponent: return "inconclusive_multicomponent";
    }
    return "?";
}

UnknotEvidence unknot_evidence(const BraidWord& w, std::string word_id) {
    UnknotEvidence ev;
    ev.word_id = word_id.empty() ? format_braid_word(w) : std::move(word_id);
    ev.component_count = closure_component_count(w);
    ev.alexander = alexander_of_closure(w);
    if (ev.component_count != 1)
        ev.verdict = UnknotVerdict::inconclusive_multicomponent;
    else if (ev.alexander.is_one())
        ev.verdict = UnknotVerdict::consistent_with_unknot;
    else
        ev.verdict = UnknotVerdict::not_unknot;
    return ev;
}

CoveringLinkInvariant covering_invariants(int m, long long k) {
    if (m < 2) throw DomainError(Errc::bad_index, "covering links need m >= 2");
    if (k < 0) throw DomainError(Errc::bad_index, "covering links need k >= 0");
    CoveringLinkInvariant inv;
    inv.m = m;
    inv.k = k;
    inv.char_poly = char_poly(homology_monodromy(b_family(2 * m, k)));
    const LaurentPoly t_minus_1 = LaurentPoly::variable() - LaurentPoly(1);
    inv.reduced_alexander = normalize_unit(divide_exact(inv.char_poly, t_minus_1));
    inv.linking_eval = evaluate_at_one(inv.reduced_alexander);
    return inv;
}

LaurentPoly theorem_dd(int m, long long k) {
    if (m < 2) throw DomainError(Errc::bad_index, "stated for m >= 2");
    if (k < 0) throw DomainError(Errc::bad_index, "stated for k >= 0");
    LaurentPoly p;
    if (m == 2) {
        p.set_coeff(2, 1);
        p.set_coeff(1, -(140 * Int(k) * k - 174 * k + 56));
        p.set_coeff(0, 1);
        return p;
    }
    p.set_coeff(2 * m - 2, 1);
    p.set_coeff(0, 1);
    const Int odd_ends = 140 * Int(k) * k - 222 * k + 92;
    p.set_coeff(2 * m - 3, -odd_ends);
    p.set_coeff(1, -odd_ends);
    const Int even_mid = 136 * Int(k) * k - 258 * k + 119;
    for (long long j = 1; j <= m - 2; ++j) p.set_coeff(2 * j, p.coeff(2 * j) + even_mid);
    const Int odd_mid = 140 * Int(k) * k - 270 * k + 128;
    for (long long j = 1; j <= m - 3; ++j) p.set_coeff(2 * j + 1, p.coeff(2 * j + 1) - odd_mid);
    return p;
}

Int linking_formula(int m, long long k) {
    if (m < 2) throw DomainError(Errc::bad_index, "stated for m >= 2");
    if (k < 0) throw DomainError(Errc::bad_index, "stated for k >= 0");
    return (4 * m + 132) * Int(k) * k - (12 * m + 150) * k + (9 * m + 36);
}

} // namespace bmcover
