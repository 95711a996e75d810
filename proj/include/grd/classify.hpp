#pragma once

#include <optional>
#include <string>
#include <utility>

#include "grd/laurent.hpp"
#include "grd/scheme.hpp"

namespace grd {

enum class Reason {
    ok,
    order_gap,
    even_part_not_divisible,
    odd_part_not_divisible,
    zero_vs_nonzero_component,
};

std::string to_string(Reason r);

// One side of an implication certificate: the Laurent quotient carrying the
// consequent's parity component into the ideal of the antecedent's, or the tag
// that the consequent's component is zero.
struct CertificateSide {
    bool zero_component = false;
    LaurentPoly quotient;

    std::string to_string() const {
        return zero_component ? "zero-component" : quotient.to_string();
    }
};

struct ImplicationVerdict {
    bool holds = false;
    Reason reason = Reason::ok;
    std::optional<std::size_t> order;  // common order; empty on an order gap
    // (epsilon side, epsilon-prime side), present when the implication holds.
    std::optional<std::pair<CertificateSide, CertificateSide>> certificate;
};

// Constants of the equivalence identity: the epsilon parts differ by the
// scaling with dilation s (scalar forced to s^-n), the epsilon-prime parts by
// the scalar-dilate (A, r). A and r are absent when both epsilon-prime
// components vanish.
struct EquivalenceConstants {
    Rational s;
    std::optional<Rational> A;
    std::optional<Rational> r;
};

struct EquivalenceVerdict {
    bool holds = false;
    Reason reason = Reason::ok;
    std::optional<std::size_t> order;
    std::optional<EquivalenceConstants> constants;  // present when holds
};

// Antecedent-differentiability implies consequent-differentiability iff the
// orders agree and each parity component of the consequent lies in the
// principal ideal of the antecedent's matching component. Throws DomainError
// unless both schemes are generalized Riemann differences.
ImplicationVerdict implies(const DiffScheme& antecedent, const DiffScheme& consequent);

// Equivalence: equal orders and per-parity monomial (trivial-unit) quotients.
EquivalenceVerdict equivalent(const DiffScheme& a, const DiffScheme& b);

struct CanonicalForm {
    DiffScheme epsilon_canon = DiffScheme::zero();
    DiffScheme epsilon_prime_canon = DiffScheme::zero();
    std::size_t order = 0;

    friend bool operator==(const CanonicalForm& x, const CanonicalForm& y) {
        return x.order == y.order && x.epsilon_canon == y.epsilon_canon &&
               x.epsilon_prime_canon == y.epsilon_prime_canon;
    }
    friend bool operator!=(const CanonicalForm& x, const CanonicalForm& y) { return !(x == y); }
};

// Orbit representative under the equivalence transformations: the epsilon part
// scaled so its largest absolute node is 1; the epsilon-prime part dilated the
// same way and normalized to coefficient 1 at node 1. Two GRDs are equivalent
// iff their canonical forms are equal.
CanonicalForm canonical_form(const DiffScheme& s);

// The recomposed scheme epsilon_canon + epsilon_prime_canon; a fixed point of
// canonical_form.
DiffScheme canonical_representative(const CanonicalForm& form);

}  // namespace grd
