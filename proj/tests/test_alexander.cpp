#include "bmcover/alexander.hpp"

#include "bmcover/cover.hpp"
#include "bmcover/int_matrix.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace bmcover;
using testutil::lp;

namespace {

PolyMatrix burau_by_explicit_product(const BraidWord& w) {
    PolyMatrix m = PolyMatrix::identity(w.strands - 1);
    for (int l : w.letters)
        m = pm_mul_serial(m, burau_generator(w.strands, l < 0 ? -l : l, l < 0 ? -1 : 1));
    return m;
}

IntMatrix burau_at_minus_one(const BraidWord& w) {
    const PolyMatrix b = reduced_burau_of_word(w);
    IntMatrix out(b.rank);
    for (int i = 0; i < b.rank; ++i)
        for (int j = 0; j < b.rank; ++j) {
            Int v = 0;
            for (const auto& [e, c] : b.at(i, j).terms()) v += (e % 2 == 0) ? c : -c;
            out.at(i, j) = v;
        }
    return out;
}

} // namespace

TEST_CASE("burau generators") {
    const PolyMatrix b1 = reduced_burau_of_word(BraidWord(2, {1}));
    CHECK(b1.rank == 1);
    CHECK(b1.at(0, 0) == lp({{1, -1}}));
    CHECK(reduced_burau_of_word(BraidWord(5, {})) == PolyMatrix::identity(4));
    for (int j = 1; j <= 4; ++j)
        CHECK(pm_mul(burau_generator(5, j, 1), burau_generator(5, j, -1)) ==
              PolyMatrix::identity(4));
    CHECK_THROWS_AS(burau_generator(4, 4, 1), DomainError);
}

TEST_CASE("burau kernel equals explicit product; braid relations hold") {
    testutil::Rng rng(0x5eed40);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = static_cast<int>(rng.range(2, 6));
        const BraidWord w = testutil::random_word(rng, n, static_cast<int>(rng.range(0, 16)));
        CHECK(reduced_burau_of_word(w) == burau_by_explicit_product(w));
    }
    CHECK(reduced_burau_of_word(BraidWord(4, {1, 2, 1})) ==
          reduced_burau_of_word(BraidWord(4, {2, 1, 2})));
    CHECK(reduced_burau_of_word(BraidWord(4, {1, 3})) ==
          reduced_burau_of_word(BraidWord(4, {3, 1})));
}

TEST_CASE("parallel poly product equals serial reference") {
    testutil::Rng rng(0x5eed41);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 7;
        const PolyMatrix a = reduced_burau_of_word(testutil::random_word(rng, n, 20));
        const PolyMatrix b = reduced_burau_of_word(testutil::random_word(rng, n, 20));
        const PolyMatrix ref = pm_mul_serial(a, b);
        CHECK(pm_mul_parallel(a, b) == ref);
        CHECK(pm_mul(a, b) == ref);
    }
}

TEST_CASE("burau at t = -1 is the homology monodromy after the sign flip") {
    // frozen basis change: conjugation by S = diag((-1)^i), which is its own
    // inverse; pinned during development and asserted here on random words
    testutil::Rng rng(0x5eed42);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = static_cast<int>(rng.range(2, 7));
        const BraidWord w = testutil::random_word(rng, n, static_cast<int>(rng.range(0, 18)));
        IntMatrix s(n - 1);
        for (int i = 0; i < n - 1; ++i) s.at(i, i) = (i % 2 == 0) ? -1 : 1;
        const IntMatrix conj = mat_mul(mat_mul(s, burau_at_minus_one(w)), s);
        CHECK(conj == homology_monodromy(w));
    }
}

TEST_CASE("alexander polynomial of closures") {
    CHECK(alexander_of_closure(BraidWord(2, {1})) == LaurentPoly(1));
    CHECK(alexander_of_closure(BraidWord(2, {1, 1, 1})) == lp({{2, 1}, {1, -1}, {0, 1}}));
    CHECK(alexander_of_closure(BraidWord(3, {1, -2, 1, -2})) == lp({{2, 1}, {1, -3}, {0, 1}}));
    CHECK(alexander_of_closure(b_family(4, 0)) == LaurentPoly(1));
    CHECK(alexander_of_closure(BraidWord(2, {1, -1})).is_zero()); // split 2-component unlink
    CHECK_THROWS_AS(alexander_of_closure(BraidWord(3, {})), DomainError);
}

TEST_CASE("markov conjugation invariance") {
    testutil::Rng rng(0x5eed43);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = static_cast<int>(rng.range(2, 6));
        const BraidWord w = testutil::random_word(rng, n, static_cast<int>(rng.range(1, 16)));
        const BraidWord u = testutil::random_word(rng, n, static_cast<int>(rng.range(0, 8)));
        const BraidWord conj = concat(concat(u, w), invert(u));
        if (conj.letters.empty()) continue;
        CHECK(alexander_of_closure(conj) == alexander_of_closure(w));
    }
}

TEST_CASE("exchange move preserves the closure alexander polynomial") {
    testutil::Rng rng(0x5eed44);
    for (int trial = 0; trial < 12; ++trial) {
        const int m = static_cast<int>(rng.range(4, 6));
        // random admissible decomposition: generators strictly below m-1
        std::vector<int> phi_letters, psi_letters;
        const int lp_ = static_cast<int>(rng.range(0, 6));
        const int lq_ = static_cast<int>(rng.range(0, 6));
        for (int i = 0; i < lp_; ++i) {
            const int g = static_cast<int>(rng.range(1, m - 2));
            phi_letters.push_back(rng.below(2) ? g : -g);
        }
        for (int i = 0; i < lq_; ++i) {
            const int g = static_cast<int>(rng.range(1, m - 2));
            psi_letters.push_back(rng.below(2) ? g : -g);
        }
        const BraidWord phi(m, phi_letters), psi(m, psi_letters);
        BraidWord base = concat(concat(concat(phi, BraidWord(m, {m - 1})), psi),
                                BraidWord(m, {-(m - 1)}));
        const BraidWord moved = bm_step(phi, psi, m);
        CHECK(alexander_of_closure(moved) == alexander_of_closure(base));
    }
}

TEST_CASE("unknot evidence") {
    for (int m = 4; m <= 6; ++m)
        for (long long k = 0; k <= 2; ++k) {
            const UnknotEvidence ev = unknot_evidence(b_family(m, k));
            CHECK(ev.component_count == 1);
            CHECK(ev.verdict == UnknotVerdict::consistent_with_unknot);
        }

    const UnknotEvidence trefoil = unknot_evidence(BraidWord(2, {1, 1, 1}));
    CHECK(trefoil.component_count == 1);
    CHECK(trefoil.verdict == UnknotVerdict::not_unknot);
    CHECK(trefoil.alexander == lp({{2, 1}, {1, -1}, {0, 1}}));

    const UnknotEvidence multi = unknot_evidence(BraidWord(4, {2}));
    CHECK(multi.component_count == 3);
    CHECK(multi.verdict == UnknotVerdict::inconclusive_multicomponent);
}

TEST_CASE("covering invariants pipeline") {
    const CoveringLinkInvariant i20 = covering_invariants(2, 0);
    CHECK(i20.char_poly == lp({{3, 1}, {2, -57}, {1, 57}, {0, -1}}));
    CHECK(i20.reduced_alexander == lp({{2, 1}, {1, -56}, {0, 1}}));
    CHECK(i20.linking_eval == -54);

    const CoveringLinkInvariant i21 = covering_invariants(2, 1);
    CHECK(i21.reduced_alexander == lp({{2, 1}, {1, -22}, {0, 1}}));
    CHECK(i21.linking_eval == -20);

    CHECK(covering_invariants(3, 0).linking_eval == -63);

    CHECK_THROWS_AS(covering_invariants(1, 0), DomainError);
    CHECK_THROWS_AS(covering_invariants(2, -1), DomainError);
}

TEST_CASE("covering invariants satisfy the division relation on a grid") {
    const LaurentPoly t_minus_1 = LaurentPoly::variable() - LaurentPoly(1);
    for (int m = 2; m <= 4; ++m)
        for (long long k = 0; k <= 2; ++k) {
            const CoveringLinkInvariant inv = covering_invariants(m, k);
            CHECK(normalize_unit(inv.reduced_alexander * t_minus_1) ==
                  normalize_unit(inv.char_poly));
            CHECK(is_palindromic(inv.reduced_alexander) == Palindromy::palindromic);
            CHECK(is_palindromic(inv.char_poly) == Palindromy::antipalindromic);
            CHECK(inv.char_poly.highest_exp() == 2 * m - 1);
        }
}

TEST_CASE("printed reduced-alexander formulas") {
    CHECK(theorem_dd(2, 0) == lp({{2, 1}, {1, -56}, {0, 1}}));
    CHECK(theorem_dd(3, 0) == lp({{4, 1}, {3, -92}, {2, 119}, {1, -92}, {0, 1}}));
    CHECK(theorem_dd(3, 1) == lp({{4, 1}, {3, -10}, {2, -3}, {1, -10}, {0, 1}}));
    CHECK_THROWS_AS(theorem_dd(1, 0), DomainError);

    for (int m = 2; m <= 6; ++m)
        for (long long k = 0; k <= 4; ++k) {
            const LaurentPoly p = theorem_dd(m, k);
            CHECK(is_palindromic(p) == Palindromy::palindromic);
            CHECK(p.coeff(0) == 1);
            CHECK(p.coeff(2 * m - 2) == 1);
        }
}

TEST_CASE("printed linking formula") {
    CHECK(linking_formula(2, 0) == 54);
    CHECK(linking_formula(2, 1) == 20);
    CHECK(linking_formula(3, 1) == 21);
    CHECK_THROWS_AS(linking_formula(2, -1), DomainError);
}

TEST_CASE("oracle matches the printed formulas on a small grid") {
    for (int m = 2; m <= 4; ++m)
        for (long long k = 0; k <= 2; ++k) {
            const CoveringLinkInvariant inv = covering_invariants(m, k);
            CHECK(inv.reduced_alexander == normalize_unit(theorem_dd(m, k)));
            CHECK(inv.linking_eval + linking_formula(m, k) == 0);
        }
}
