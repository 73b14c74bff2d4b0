#include "bmcover/laurent.hpp"

#include <sstream>

namespace bmcover {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::parse_error: return "ParseError";
    case Errc::macro_arity: return "MacroArity";
    case Errc::strand_range: return "StrandRange";
    case Errc::strand_mismatch: return "StrandMismatch";
    case Errc::bad_index: return "BadIndex";
    case Errc::bad_decomposition: return "BadDecomposition";
    case Errc::rank_mismatch: return "RankMismatch";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::non_exact_division: return "NonExactDivision";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::non_reciprocal: return "NonReciprocal";
    case Errc::empty_word: return "EmptyWord";
    }
    return "UnknownError";
}

LaurentPoly::LaurentPoly(Int constant) {
    if (constant != 0) terms_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::monomial(long long exp, Int coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exp] = std::move(coeff);
    return p;
}

LaurentPoly LaurentPoly::variable() { return monomial(1, 1); }

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Int LaurentPoly::coeff(long long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::set_coeff(long long exp, Int c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = std::move(c);
}

long long LaurentPoly::lowest_exp() const {
    if (terms_.empty()) throw DomainError(Errc::zero_polynomial, "lowest_exp of zero polynomial");
    return terms_.begin()->first;
}

long long LaurentPoly::highest_exp() const {
    if (terms_.empty()) throw DomainError(Errc::zero_polynomial, "highest_exp of zero polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    out += rhs;
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    out -= rhs;
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_) {
            Int& slot = out.terms_[e1 + e2];
            slot += c1 * c2;
        }
    for (auto it = out.terms_.begin(); it != out.terms_.end();)
        it = (it->second == 0) ? out.terms_.erase(it) : std::next(it);
    return out;
}

LaurentPoly LaurentPoly::scalar_mul(const Int& c) const {
    LaurentPoly out;
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_[e] = v * c;
    return out;
}

LaurentPoly LaurentPoly::shift_exponent(long long d) const {
    LaurentPoly out;
    for (const auto& [e, v] : terms_) out.terms_[e + d] = v;
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly acc(1);
    LaurentPoly base = *this;
    while (k) {
        if (k & 1) acc *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return acc;
}

LaurentPoly LaurentPoly::reciprocal_substitution() const {
    LaurentPoly out;
    for (const auto& [e, v] : terms_) out.terms_[-e] = v;
    return out;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest degree first, the way the polynomials are printed in the sources
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        const bool unit_coeff = (a == 1) && e != 0;
        if (!unit_coeff) os << a.str();
        if (e != 0) {
            if (!unit_coeff) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw DomainError(Errc::non_exact_division, "division by zero polynomial");
    if (num.is_zero()) return {};

    // Shift both operands to ordinary polynomials, divide, shift back.
    const long long nlo = num.lowest_exp();
    const long long dlo = den.lowest_exp();
    LaurentPoly rem = num.shift_exponent(-nlo);
    const LaurentPoly d = den.shift_exponent(-dlo);
    const long long ddeg = d.highest_exp();
    const Int dlead = d.coeff(ddeg);

    LaurentPoly q;
    while (!rem.is_zero()) {
        const long long rdeg = rem.highest_exp();
        if (rdeg < ddeg)
            throw DomainError(Errc::non_exact_division, "nonzero remainder");
        const Int rlead = rem.coeff(rdeg);
        if (rlead % dlead != 0)
            throw DomainError(Errc::non_exact_division, "leading coefficient not divisible");
        const Int qc = rlead / dlead;
        const long long qe = rdeg - ddeg;
        q.set_coeff(qe, qc);
        rem -= d.shift_exponent(qe).scalar_mul(qc);
    }
    return q.shift_exponent(nlo - dlo);
}

Int evaluate_at_one(const LaurentPoly& p) {
    Int s = 0;
    for (const auto& [e, c] : p.terms()) s += c;
    return s;
}

LaurentPoly normalize_unit(const LaurentPoly& p) {
    if (p.is_zero()) throw DomainError(Errc::zero_polynomial, "normalize_unit of zero polynomial");
    const long long lo = p.lowest_exp();
    LaurentPoly q = p.shift_exponent(-lo);
    if (q.coeff(0) < 0) q = -q;
    return q;
}

Palindromy is_palindromic(const LaurentPoly& p) {
    if (p.is_zero()) throw DomainError(Errc::zero_polynomial, "palindromy of zero polynomial");
    const long long span = p.span();
    // t^span * p(1/t), compared literally against +-p
    const LaurentPoly refl = p.reciprocal_substitution().shift_exponent(span);
    if (refl == p) return Palindromy::palindromic;
    if (refl == -p) return Palindromy::antipalindromic;
    return Palindromy::none;
}

LaurentPoly symmetrize(const LaurentPoly& p) {
    if (p.is_zero()) throw DomainError(Errc::zero_polynomial, "symmetrize of zero polynomial");
    const LaurentPoly q = normalize_unit(p);
    if (q.span() % 2 != 0 || is_palindromic(q) != Palindromy::palindromic)
        throw DomainError(Errc::non_reciprocal, "not palindromic of even degree");
    return q.shift_exponent(-q.span() / 2);
}

const char* palindromy_name(Palindromy p) {
    switch (p) {
    case Palindromy::palindromic: return "palindromic";
    case Palindromy::antipalindromic: return "antipalindromic";
    case Palindromy::none: return "none";
    }
    return "none";
}

} // namespace bmcover
