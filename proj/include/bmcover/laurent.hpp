#pragma once

#include "bmcover/bigint.hpp"
#include "bmcover/errors.hpp"

#include <map>
#include <string>

namespace bmcover {

/// Univariate Laurent polynomial over the integers. Terms map exponent to a
/// nonzero coefficient; the zero polynomial is the empty map. The variable
/// name is display-only ("t" for Alexander polynomials, "s" for the formal
/// Seiberg-Witten variable).
class LaurentPoly {
public:
    using Terms = std::map<long long, Int>;

    LaurentPoly() = default;
    explicit LaurentPoly(Int constant);
    static LaurentPoly monomial(long long exp, Int coeff);
    static LaurentPoly variable(); // t

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    /// Coefficient of t^exp (zero if absent).
    Int coeff(long long exp) const;
    void set_coeff(long long exp, Int c);

    long long lowest_exp() const;  // ZeroPolynomial on 0
    long long highest_exp() const; // ZeroPolynomial on 0
    long long span() const { return highest_exp() - lowest_exp(); }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }
    bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }

    LaurentPoly scalar_mul(const Int& c) const;
    /// Multiply by t^d.
    LaurentPoly shift_exponent(long long d) const;
    LaurentPoly pow(unsigned k) const;

    /// Substitute t := t^-1 (exponent negation).
    LaurentPoly reciprocal_substitution() const;

    std::string str(const std::string& var = "t") const;

private:
    Terms terms_;
};

/// Exact quotient num/den in the Laurent ring; NonExactDivision when den does
/// not divide num.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

/// Sum of all coefficients (= p(1)).
Int evaluate_at_one(const LaurentPoly& p);

/// Canonical representative of p up to units +-t^d: lowest exponent 0, lowest
/// coefficient positive. ZeroPolynomial on 0.
LaurentPoly normalize_unit(const LaurentPoly& p);

/// Center a palindromic polynomial: t^-d * normalize_unit(p) with span 2d, so
/// the result equals its own reciprocal term-for-term. NonReciprocal when
/// normalize_unit(p) is not palindromic of even span.
LaurentPoly symmetrize(const LaurentPoly& p);

enum class Palindromy { palindromic, antipalindromic, none };

/// Reciprocity test: compares t^span * p(1/t) against +-p literally (no unit
/// normalization, exponent supports must agree). ZeroPolynomial on 0.
Palindromy is_palindromic(const LaurentPoly& p);

const char* palindromy_name(Palindromy p);

} // namespace bmcover
