#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grd/rational.hpp"

namespace grd {

struct Term {
    Rational coeff;
    Rational node;

    friend bool operator==(const Term& a, const Term& b) {
        return a.coeff == b.coeff && a.node == b.node;
    }
};

// A finite difference scheme sum A_i f(x + a_i h): nonzero coefficients on
// pairwise distinct nodes, kept canonically ordered by node descending.
// The empty scheme stands for the zero difference (it arises as a parity
// component); user-facing constructors reject it.
class DiffScheme {
public:
    static DiffScheme zero() { return DiffScheme(); }

    // Merges duplicate nodes, prunes zero coefficients, sorts nodes descending.
    static DiffScheme from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // 0 when the node is absent.
    Rational coeff_at(const Rational& node) const;

    friend bool operator==(const DiffScheme& a, const DiffScheme& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const DiffScheme& a, const DiffScheme& b) { return !(a == b); }

    // "c@a, c@a, ..." with nodes descending; "0" for the zero scheme.
    std::string to_string() const;

private:
    DiffScheme() = default;
    std::vector<Term> terms_;
};

// Grammar: scheme := term (("," | whitespace) term)* ; term := rational "@" rational.
// Rejects duplicate nodes and empty schemes with a positioned ParseError.
DiffScheme parse_scheme(std::string_view text);

// sum A_i a_i^j with 0^0 = 1.
Rational moment(const DiffScheme& s, std::size_t j);

struct GrdProfile {
    std::optional<std::size_t> first_nonzero_index;  // j0; nullopt for the zero scheme
    Rational first_moment;                           // c = moment(j0)
    bool is_grd = false;                             // c == j0!
    std::optional<std::size_t> order;                // j0, when is_grd
    std::optional<std::size_t> excess;               // m - (order + 1), when is_grd
    std::vector<Rational> moments;                   // j = 0 .. m-1
};

GrdProfile grd_profile(const DiffScheme& s);

// Nodes a_i -> a_i * r; moments scale by r^j. Throws DomainError for r = 0.
DiffScheme dilate(const DiffScheme& s, const Rational& r);

// Coefficients multiplied by c != 0.
DiffScheme scale(const DiffScheme& s, const Rational& c);

// Dilate by t and divide coefficients by t^n; maps order-n GRDs to order-n GRDs.
// Throws DomainError unless s is a GRD and t != 0.
DiffScheme scaling(const DiffScheme& s, const Rational& t);

// All nodes negated (dilate by -1).
DiffScheme reflect(const DiffScheme& s);

enum class Parity { even, odd };

inline Parity epsilon_parity(std::size_t order) { return order % 2 == 0 ? Parity::even : Parity::odd; }
inline Parity epsilon_prime_parity(std::size_t order) {
    return order % 2 == 0 ? Parity::odd : Parity::even;
}
inline Parity opposite(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }
std::string to_string(Parity p);

struct ParitySplit {
    DiffScheme even;
    DiffScheme odd;

    const DiffScheme& part(Parity p) const { return p == Parity::even ? even : odd; }
    // Component matching (resp. opposing) the parity of an order-n derivative.
    const DiffScheme& epsilon(std::size_t order) const { return part(epsilon_parity(order)); }
    const DiffScheme& epsilon_prime(std::size_t order) const {
        return part(epsilon_prime_parity(order));
    }
};

// Unique decomposition into an even plus an odd difference:
// even coefficient at b is (A_b + A_{-b})/2, odd is (A_b - A_{-b})/2.
ParitySplit parity_split(const DiffScheme& s);

struct ParityStructure {
    std::size_t order = 0;
    GrdProfile epsilon_profile;
    GrdProfile epsilon_prime_profile;  // profile of the zero scheme when the part vanishes
    bool theorem4_holds = false;
};

// For a GRD of order n: the epsilon part must be a GRD of order n and the
// epsilon-prime part zero or with first nonzero moment index > n.
// Throws DomainError for non-GRD input.
ParityStructure parity_structure(const DiffScheme& s);

// Solves the Vandermonde conditions sum A_i a_i^j = n! delta_jn (j = 0..n) on
// the given distinct nodes; free variables are zeroed, zero coefficients pruned.
DiffScheme grd_from_nodes(std::vector<Rational> nodes, std::size_t n);

// --- catalog -----------------------------------------------------------

DiffScheme riemann_scheme(unsigned n);
DiffScheme symmetric_scheme(unsigned n);
DiffScheme symmetric_centered_1();
DiffScheme theorem1_scheme(const Rational& A, const Rational& r);
DiffScheme example3iii();

// "riemann(2)", "symmetric(3)", "symmetric_centered_1", "theorem1(1,2)",
// "example3iii". Throws ParseError for unknown names or invalid parameters.
DiffScheme catalog_lookup(std::string_view text);

// Scheme literal, or a catalog reference prefixed with "catalog:".
DiffScheme resolve_scheme_input(std::string_view text);

}  // namespace grd
