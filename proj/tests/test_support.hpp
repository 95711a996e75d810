#pragma once

#include <random>
#include <set>
#include <vector>

#include "grd/classify.hpp"
#include "grd/laurent.hpp"
#include "grd/scheme.hpp"

namespace grd::testing {

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational rand_rational(Rng& rng, long max_num = 9, long max_den = 5,
                              bool nonzero = false) {
    while (true) {
        Rational r(rand_int(rng, -max_num, max_num), rand_int(rng, 1, max_den));
        if (!nonzero || !r.is_zero()) return r;
    }
}

inline Rational rand_positive_rational(Rng& rng, long max_num = 9, long max_den = 5) {
    while (true) {
        Rational r(rand_int(rng, 1, max_num), rand_int(rng, 1, max_den));
        if (!r.is_zero()) return r;
    }
}

inline std::vector<Rational> rand_distinct_nodes(Rng& rng, std::size_t count,
                                                 bool allow_zero = true) {
    std::set<Rational> nodes;
    while (nodes.size() < count) {
        Rational n = rand_rational(rng, 6, 4);
        if (!allow_zero && n.is_zero()) continue;
        nodes.insert(n);
    }
    return {nodes.begin(), nodes.end()};
}

// A GRD of the requested order whose support genuinely realizes the requested
// excess. grd_from_nodes zeroes the free variables, so the base solve lands on
// an (order+1)-node subset; adding random multiples of order-(order+1) GRDs on
// overlapping (order+2)-node slices keeps moments 0..order intact and spreads
// the support over the remaining nodes.
inline DiffScheme rand_grd(Rng& rng, std::size_t order, std::size_t excess) {
    while (true) {
        std::vector<Rational> nodes = rand_distinct_nodes(rng, order + 1 + excess);
        DiffScheme s = grd_from_nodes(nodes, order);
        for (std::size_t t = 0; t < excess; ++t) {
            std::vector<Rational> slice(nodes.begin() + static_cast<long>(t),
                                        nodes.begin() + static_cast<long>(t + order + 2));
            DiffScheme kernel = scale(grd_from_nodes(slice, order + 1),
                                      rand_rational(rng, 5, 3, true));
            std::vector<Term> ts = s.terms();
            for (const auto& term : kernel.terms()) ts.push_back(term);
            s = DiffScheme::from_terms(std::move(ts));
        }
        GrdProfile p = grd_profile(s);
        if (p.is_grd && *p.order == order && *p.excess == excess) return s;
    }
}

// A random scheme (not necessarily a GRD): random coefficients on distinct nodes.
inline DiffScheme rand_scheme(Rng& rng, std::size_t terms) {
    std::vector<Term> ts;
    for (const auto& node : rand_distinct_nodes(rng, terms))
        ts.push_back(Term{rand_rational(rng, 9, 4, true), node});
    return DiffScheme::from_terms(std::move(ts));
}

inline LaurentPoly rand_laurent(Rng& rng, unsigned max_terms = 4, int exp_range = 2) {
    static const std::uint64_t primes[3] = {2, 3, 5};
    LaurentPoly p;
    unsigned terms = static_cast<unsigned>(rand_int(rng, 1, max_terms));
    for (unsigned t = 0; t < terms; ++t) {
        ExponentVector e;
        for (std::uint64_t prime : primes)
            e.set(prime, static_cast<int>(rand_int(rng, -exp_range, exp_range)));
        p.add_term(e, rand_rational(rng, 9, 4, true));
    }
    return p;
}

inline LaurentPoly rand_laurent_nonzero(Rng& rng, unsigned max_terms = 4, int exp_range = 2) {
    while (true) {
        LaurentPoly p = rand_laurent(rng, max_terms, exp_range);
        if (!p.is_zero()) return p;
    }
}

// Combines scaled dilates of a parity component; used to build schemes that
// are implied or equivalent by construction.
inline DiffScheme combine_dilates(const DiffScheme& part,
                                  const std::vector<std::pair<Rational, Rational>>& weights) {
    std::vector<Term> ts;
    for (const auto& [coeff, point] : weights) {
        DiffScheme piece = scale(dilate(part, point), coeff);
        for (const auto& t : piece.terms()) ts.push_back(t);
    }
    return DiffScheme::from_terms(std::move(ts));
}

// A scheme equivalent to s by construction: epsilon part rescaled by sc,
// epsilon-prime part dilated by r and multiplied by A.
inline DiffScheme unit_transform(const DiffScheme& s, const Rational& sc, const Rational& A,
                                 const Rational& r) {
    std::size_t n = *grd_profile(s).order;
    ParitySplit split = parity_split(s);
    std::vector<Term> ts = scaling(split.epsilon(n), sc).terms();
    if (!split.epsilon_prime(n).is_zero()) {
        DiffScheme moved = scale(dilate(split.epsilon_prime(n), r), A);
        for (const auto& t : moved.terms()) ts.push_back(t);
    }
    return DiffScheme::from_terms(std::move(ts));
}

}  // namespace grd::testing
