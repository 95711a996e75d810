#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grd/factor.hpp"
#include "grd/quadext.hpp"
#include "grd/scheme.hpp"

namespace grd {

// Counterexample function realizing the coset-functional separation: at the
// scales s_m = p^-m (1 <= m <= scale_count, p dividing no node) the function
// reads a pure-parity multiplicative character on the node-prime lattice,
//     f(sign * g * p^-m) = tau(sign) * chi(g) * normalizer,
// and vanishes at every other point. chi is chosen so the antecedent's
// failing-parity polynomial vanishes at chi while the consequent's does not;
// that makes Delta_S f(0,h) = 0 for every h != 0 as an exact identity and
// Delta_T f(0, p^-m) = 1 at each scale.
struct WitnessFunction {
    std::uint64_t scale_prime = 2;           // p
    unsigned scale_count = 0;                // M
    unsigned window_radius = 0;              // L = 2l+1; verify grid extends to L+l
    unsigned node_norm = 0;                  // l = max exponent-vector norm of a node
    unsigned order = 0;                      // common order n
    std::vector<std::uint64_t> node_primes;  // multiplicative support of the nodes
    Parity parity = Parity::even;            // tau: sign character of f
    std::map<std::uint64_t, Rational> character;  // chi value per node prime, nonzero
    Rational normalizer = Rational(1);            // w = 1 / B_tau(chi)
    // Sample of f on the signed inner window (norm <= L - l) at any one scale;
    // derived from the character, serialized for inspection.
    std::map<std::pair<int, ExponentVector>, Rational> window_table;

    Rational character_at(const ExponentVector& g) const;
    Rational eval_rational(const Rational& t) const;
    std::string to_string() const;
};

// Exactly evaluable branch-defined test functions.
class FunctionSpec {
public:
    enum class Kind {
        power_on_rationals,
        indicator_of_rationals,
        zero_on_rationals_identity_off,
        abs_value,
        polynomial,
        witness_table,
    };

    static FunctionSpec power_on_rationals(unsigned m);
    static FunctionSpec indicator_of_rationals() { return FunctionSpec(Kind::indicator_of_rationals); }
    static FunctionSpec zero_on_rationals_identity_off() {
        return FunctionSpec(Kind::zero_on_rationals_identity_off);
    }
    static FunctionSpec abs_value() { return FunctionSpec(Kind::abs_value); }
    static FunctionSpec polynomial(std::vector<Rational> coeffs);
    static FunctionSpec witness_table(std::shared_ptr<const WitnessFunction> w);

    Kind kind() const { return kind_; }
    unsigned power() const { return power_; }
    const WitnessFunction* table() const { return table_.get(); }

    QuadExt eval(const QuadExt& x) const;
    std::string describe() const;

private:
    explicit FunctionSpec(Kind k) : kind_(k) {}
    Kind kind_;
    unsigned power_ = 0;
    std::vector<Rational> coeffs_;
    std::shared_ptr<const WitnessFunction> table_;
};

inline QuadExt eval_function(const FunctionSpec& f, const QuadExt& x) { return f.eval(x); }

// The order-gap separator x^m on Q, 0 off Q: along rational h every order-m
// GRD quotient is m! while the sqrt2 branch gives 0; order-n < m quotients
// vanish in the limit on both branches. Requires m > n >= 1.
FunctionSpec witness_order_gap(unsigned m, unsigned n);

// Builds the same-order witness for a failed implication: Delta_S f(0,h) = 0
// for every h != 0 while Delta_T f(0, p^-m) = 1 for m = 1..scales, so the
// consequent quotients are the unbounded sequence p^(n m). Throws DomainError
// when the preconditions fail and WindowCapExceeded when no rational character
// is found within the search cap.
WitnessFunction witness_same_order(const DiffScheme& antecedent, const DiffScheme& consequent,
                                   unsigned scales = 8,
                                   std::optional<unsigned> search_cap = std::nullopt);

struct WitnessCheckReport {
    bool passed = false;
    std::size_t checks_run = 0;
    std::vector<std::string> failures;  // offending h values or identities, serialized
    std::string structural_note;
};

// Re-derives the witness contract independently: the character identities
// A_tau(chi) = 0 and B_tau(chi) * w = 1 recomputed from the schemes, plus
// exhaustive grid evaluation of both differences at h = +-g' p^-m for
// norm(g') <= L + l and every scale, through the public evaluation path.
WitnessCheckReport verify_witness(const WitnessFunction& w, const DiffScheme& antecedent,
                                  const DiffScheme& consequent);

enum class Branch { rational, sqrt2, signed_alternating };

std::string to_string(Branch b);

struct ProbeSequence {
    Branch branch = Branch::rational;
    Rational ratio = Rational(1, 2);  // in (0,1)
    unsigned count = 8;               // >= 3
};

enum class ProbeOutcome { converges, diverges, oscillates, inconclusive };

std::string to_string(ProbeOutcome o);

struct ProbeSample {
    QuadExt h;
    QuadExt quotient;
};

struct ProbeReport {
    std::vector<ProbeSample> samples;
    ProbeOutcome outcome = ProbeOutcome::inconclusive;
    std::optional<QuadExt> limit;                         // converges
    std::optional<std::pair<QuadExt, QuadExt>> branches;  // oscillates
};

// Exact difference quotients Delta_s f(0, h_j) / h_j^n along h_j = ratio^j,
// sqrt2 * ratio^j, or (-1)^j ratio^j. The verdict is decided by exact sample
// patterns: a constant tail converges; two strictly alternating values
// oscillate; strictly growing magnitudes diverge; an exactly geometric decay
// (constant magnitude ratio < 1) converges to 0; anything else is inconclusive.
ProbeReport probe(const DiffScheme& s, const FunctionSpec& f, const ProbeSequence& seq);

}  // namespace grd
