#pragma once

#include "bmcover/errors.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bmcover {

/// Word in the braid group on `strands` strands. Letter +j is the elementary
/// transposition beta_j (strand j over strand j+1), -j its inverse. Words are
/// never auto-reduced; free_reduce() is an explicit canonicalization.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int strands_, std::vector<int> letters_);

    std::size_t length() const { return letters.size(); }
    bool operator==(const BraidWord& rhs) const = default;
};

/// Parse the braid-word DSL. Grammar:
///   expr   := atom ( ('.' | WS+) atom )*
///   atom   := item ( '^' sint )?
///   item   := sint | ident '(' sint (',' sint)* ')' | '(' expr ')'
///   sint   := '-'? [0-9]+
///   ident  := 'B' | 'Gamma' | 'Phi' | 'Psi'
/// A bare integer is a generator letter; '^n' with n < 0 inverts then repeats;
/// macros expand to the family words. '.' and whitespace are interchangeable.
BraidWord parse_braid_word(std::string_view text, int strands);

/// Inverse of parse: letters joined with '.'.
std::string format_braid_word(const BraidWord& w);

BraidWord invert(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord power(const BraidWord& w, long long k);
/// Cancel adjacent (x, -x) pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

/// Gamma_r = r.(r-1)...2.1.1.2...(r-1).r on `strands` strands (r <= strands-1).
BraidWord gamma_word(int r, int strands);

/// (Phi_m, Psi_m) on m strands, m >= 4. Base case Phi_4 = -2.-2.1.-2,
/// Psi_4 = 2.2.2.-1.2; recursion Phi_{m+1} = (m-2).(m-1).Phi_m.(m-1)^-1,
/// Psi_{m+1} = (m-1)^-1.Psi_m.(m-1).
std::pair<BraidWord, BraidWord> phi_psi_words(int m);

/// B_{m,k} = Gamma_{m-2}^-k . Phi_m . Gamma_{m-2}^k . (m-1) . Psi_m . (m-1)^-1.
BraidWord b_family(int m, long long k);

/// One exchange move: Phi.(m-1).Psi.(m-1)^-1 ->
/// Gamma_{m-2}^-1.Phi.Gamma_{m-2}.(m-1).Psi.(m-1)^-1. Inputs must use only
/// generators below m-1 (BadDecomposition otherwise).
BraidWord bm_step(const BraidWord& phi, const BraidWord& psi, int m);

/// Permutation of strand positions; images[i] is the end position of the
/// strand starting at position i+1 (1-based values).
struct StrandPermutation {
    int strands = 1;
    std::vector<int> images;
};

StrandPermutation underlying_permutation(const BraidWord& w);
int cycle_count(const StrandPermutation& p);
int closure_component_count(const BraidWord& w);
long long exponent_sum(const BraidWord& w);

/// Freely reduced word in the free group on mu_1..mu_n; letter sign encodes
/// inversion.
struct FreeWord {
    std::vector<int> letters;
    bool operator==(const FreeWord& rhs) const = default;
};

FreeWord free_mul(const FreeWord& a, const FreeWord& b);
FreeWord free_inverse(const FreeWord& a);

/// Image of mu_i under the automorphism of F(mu_1..mu_n) induced by w:
/// beta_j maps mu_j -> mu_j mu_{j+1} mu_j^-1 and mu_{j+1} -> mu_j, letters
/// applied first-to-last. Result is freely reduced.
FreeWord artin_action(const BraidWord& w, int i);

/// pi_1 presentation of the fibered complement: generators mu_1..mu_n, s, t;
/// relators [s,mu_i], [s,t], and t mu_i t^-1 phi(mu_i)^-1. Tokens are
/// "mu3", "mu3^-1", "s", "s^-1", "t", "t^-1".
struct Pi1Presentation {
    int strands = 1;
    std::vector<std::string> generators;
    std::vector<std::vector<std::string>> relators;
};

Pi1Presentation pi1_presentation(const BraidWord& w);

} // namespace bmcover
