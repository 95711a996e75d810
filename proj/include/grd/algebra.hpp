#pragma once

#include <map>
#include <string>

#include "grd/scheme.hpp"

namespace grd {

// Element sum A_r x_r of the group algebra of the multiplicative group of
// nonzero rationals, taken modulo the node-0 ideal: no x_0 term exists and
// multiplication follows x_r x_s = x_{rs}.
class AlgebraElement {
public:
    static AlgebraElement zero() { return AlgebraElement(); }
    static AlgebraElement unit() { return basis(Rational(1)); }
    static AlgebraElement sigma() { return basis(Rational(-1)); }
    static AlgebraElement basis(const Rational& r);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Rational, Rational>& terms() const { return terms_; }
    Rational coeff(const Rational& r) const {
        auto it = terms_.find(r);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Rational& node, const Rational& coeff);

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    AlgebraElement scaled(const Rational& c) const;

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    // Sum of "c*x[r]" pieces, nodes descending; "0" when empty.
    std::string to_string() const;

private:
    std::map<Rational, Rational> terms_;  // node (nonzero) -> coefficient (nonzero)
};

// Drops the node-0 term of the scheme. Throws DomainError when nothing is left.
AlgebraElement to_algebra(const DiffScheme& s);

// Image of e*alpha (resp. d*alpha) under the isomorphism e_r -> x_r of the
// parity component onto the group algebra of positive rationals: the
// coefficient at r > 0 is A_r + A_{-r} (even) or A_r - A_{-r} (odd).
struct PositivePart {
    std::map<Rational, Rational> terms;  // positive point -> coefficient
    Parity parity = Parity::even;

    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const PositivePart& a, const PositivePart& b) {
        return a.parity == b.parity && a.terms == b.terms;
    }

    std::string to_string() const;  // "c*e[r]" / "c*d[r]" pieces
};

PositivePart parity_project(const AlgebraElement& a, Parity parity);

// Inverse map: expands c e_r = c (x_r + x_{-r})/2, c d_r = c (x_r - x_{-r})/2.
AlgebraElement embed_positive_part(const PositivePart& p);

}  // namespace grd
