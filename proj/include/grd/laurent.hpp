#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grd/algebra.hpp"
#include "grd/factor.hpp"

namespace grd {

// Sparse Laurent polynomial over Q in variables y_p indexed by primes, the
// image of a parity component under the prime-exponent embedding of the
// positive rationals. An integral domain; monomials are exactly the units.
class LaurentPoly {
public:
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly constant(const Rational& c) { return monomial(c, ExponentVector::one()); }
    static LaurentPoly monomial(const Rational& coeff, const ExponentVector& exponents);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ExponentVector, Rational>& terms() const { return terms_; }
    Rational coeff(const ExponentVector& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const ExponentVector& e, const Rational& c);

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(const Rational& c) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Sorted primes occurring in the support.
    std::vector<std::uint64_t> basis() const;

    // e.g. "2*y2^-1*y3 - 6*y2^-1"; "0" when empty.
    std::string to_string() const;

private:
    std::map<ExponentVector, Rational> terms_;
};

// (coefficient, point) when p = c * y^{vec(r)} with c != 0; nullopt otherwise.
// These are exactly the trivial units of the parity component.
std::optional<std::pair<Rational, Rational>> is_monomial(const LaurentPoly& p);

// Prime-exponent image of a positive part: each support point r > 0 maps to
// the monomial of its prime factorization, keeping the coefficient.
LaurentPoly laurent_embed(const PositivePart& p);

// Exact single-divisor division. Both arguments are shifted by monomials into
// the polynomial subring and divided under graded-lexicographic order; a zero
// remainder is equivalent to divisibility. Throws DomainError on a zero divisor.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& numerator, const LaurentPoly& divisor);

// Independent oracle: solves divisor * q = numerator as an exact linear system
// over candidate supports in the componentwise Newton-range difference of the
// operands, padded by `bound`. Agrees with exact_divide whenever the true
// quotient fits the padded box.
std::optional<LaurentPoly> divides_brute(const LaurentPoly& numerator, const LaurentPoly& divisor,
                                         unsigned bound);

// Grammar: poly := ["-"] term (("+"|"-") term)* ;
// term := rational ("*" var)* | var ("*" var)* ; var := "y" prime ["^" integer].
LaurentPoly parse_laurent(std::string_view text);

}  // namespace grd
