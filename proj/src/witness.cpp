#include "grd/witness.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "grd/classify.hpp"
#include "grd/laurent.hpp"

namespace grd {

// --- function specs ----------------------------------------------------

FunctionSpec FunctionSpec::power_on_rationals(unsigned m) {
    FunctionSpec f(Kind::power_on_rationals);
    f.power_ = m;
    return f;
}

FunctionSpec FunctionSpec::polynomial(std::vector<Rational> coeffs) {
    FunctionSpec f(Kind::polynomial);
    f.coeffs_ = std::move(coeffs);
    return f;
}

FunctionSpec FunctionSpec::witness_table(std::shared_ptr<const WitnessFunction> w) {
    if (!w) throw DomainError("witness_table requires a witness");
    FunctionSpec f(Kind::witness_table);
    f.table_ = std::move(w);
    return f;
}

QuadExt FunctionSpec::eval(const QuadExt& x) const {
    switch (kind_) {
        case Kind::power_on_rationals:
            if (!x.is_rational()) return QuadExt();
            return QuadExt(x.rat().pow(static_cast<long>(power_)));
        case Kind::indicator_of_rationals:
            return x.is_rational() ? QuadExt(Rational(1)) : QuadExt();
        case Kind::zero_on_rationals_identity_off:
            return x.is_rational() ? QuadExt() : x;
        case Kind::abs_value:
            return x.abs();
        case Kind::polynomial: {
            QuadExt acc;
            for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
                acc = acc * x + QuadExt(*it);
            return acc;
        }
        case Kind::witness_table:
            if (!x.is_rational()) return QuadExt();
            return QuadExt(table_->eval_rational(x.rat()));
    }
    throw std::logic_error("unhandled function kind");
}

std::string FunctionSpec::describe() const {
    switch (kind_) {
        case Kind::power_on_rationals:
            return "x^" + std::to_string(power_) + " on rationals, 0 elsewhere";
        case Kind::indicator_of_rationals: return "1 on rationals, 0 elsewhere";
        case Kind::zero_on_rationals_identity_off: return "0 on rationals, x elsewhere";
        case Kind::abs_value: return "|x|";
        case Kind::polynomial: return "polynomial";
        case Kind::witness_table: return "witness table";
    }
    return "?";
}

FunctionSpec witness_order_gap(unsigned m, unsigned n) {
    if (!(m > n && n >= 1)) throw DomainError("witness_order_gap requires m > n >= 1");
    return FunctionSpec::power_on_rationals(m);
}

// --- witness evaluation --------------------------------------------------

Rational WitnessFunction::character_at(const ExponentVector& g) const {
    Rational value(1);
    for (const auto& [prime, exp] : g.entries()) {
        auto it = character.find(prime);
        if (it == character.end()) return Rational(0);  // outside the node lattice
        value *= it->second.pow(exp);
    }
    return value;
}

Rational WitnessFunction::eval_rational(const Rational& t) const {
    if (t.is_zero()) return Rational(0);
    if (parity == Parity::odd && t.sign() < 0) return -eval_rational(-t);
    ExponentVector v = factor_positive(t.abs());
    int pe = v.exponent(scale_prime);
    if (pe >= 0 || static_cast<unsigned>(-pe) > scale_count) return Rational(0);
    v.set(scale_prime, 0);
    return character_at(v) * normalizer;
}

std::string WitnessFunction::to_string() const {
    std::string out = "{p=" + std::to_string(scale_prime) + ", M=" + std::to_string(scale_count) +
                      ", L=" + std::to_string(window_radius) + ", n=" + std::to_string(order) +
                      ", parity=" + grd::to_string(parity) + ", chi={";
    bool first = true;
    for (const auto& [prime, value] : character) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(prime) + "->" + value.to_string();
    }
    out += "}, w=" + normalizer.to_string() + "}";
    return out;
}

// --- construction ------------------------------------------------------

namespace {

// All exponent vectors over `primes` with L1 norm at most `radius`.
std::vector<ExponentVector> vectors_up_to_norm(const std::vector<std::uint64_t>& primes,
                                               unsigned radius) {
    std::vector<ExponentVector> out;
    ExponentVector current;
    auto rec = [&](auto&& self, std::size_t dim, unsigned budget) -> void {
        if (dim == primes.size()) {
            out.push_back(current);
            return;
        }
        for (int e = -static_cast<int>(budget); e <= static_cast<int>(budget); ++e) {
            current.set(primes[dim], e);
            self(self, dim + 1, budget - static_cast<unsigned>(e < 0 ? -e : e));
        }
        current.set(primes[dim], 0);
    };
    rec(rec, 0, radius);
    return out;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct NodeGroup {
    std::vector<std::uint64_t> primes;  // P, sorted
    unsigned max_node_norm = 0;         // l
    std::uint64_t scale_prime = 2;      // smallest prime outside P
};

NodeGroup analyze_nodes(const DiffScheme& a, const DiffScheme& b) {
    NodeGroup g;
    std::set<std::uint64_t> primes;
    auto visit = [&](const DiffScheme& s) {
        for (const auto& t : s.terms()) {
            if (t.node.is_zero()) continue;
            ExponentVector v = factor_positive(t.node.abs());
            g.max_node_norm = std::max(g.max_node_norm, v.norm1());
            for (const auto& [p, e] : v.entries()) primes.insert(p);
        }
    };
    visit(a);
    visit(b);
    g.primes.assign(primes.begin(), primes.end());
    std::uint64_t p = 2;
    while (primes.count(p) || !is_prime_u64(p)) ++p;
    g.scale_prime = p;
    return g;
}

Rational eval_laurent(const LaurentPoly& poly, const std::map<std::uint64_t, Rational>& at) {
    Rational sum(0);
    for (const auto& [e, c] : poly.terms()) {
        Rational term = c;
        for (const auto& [prime, exp] : e.entries()) term *= at.at(prime).pow(exp);
        sum += term;
    }
    return sum;
}

// Height-ordered nonzero rationals: 1, -1, 2, -2, 1/2, -1/2, 3, -3, ...
std::vector<Rational> rational_pool(unsigned height) {
    std::vector<Rational> pool;
    for (long h = 1; h <= static_cast<long>(height); ++h) {
        auto push_pair = [&](long num, long den) {
            if (std::gcd(num, den) != 1) return;
            pool.push_back(Rational(num, den));
            pool.push_back(Rational(-num, den));
        };
        for (long den = 1; den <= h; ++den) push_pair(h, den);
        for (long num = 1; num < h; ++num) push_pair(num, h);
    }
    return pool;
}

std::vector<Bigint> divisors_of(const Bigint& value) {
    std::vector<Bigint> divs{Bigint(1L)};
    ExponentVector factors = factor_positive(Rational(value));
    for (const auto& [prime, exp] : factors.entries()) {
        std::size_t existing = divs.size();
        Bigint power(1L);
        Bigint base(0L);
        mpz_set_ui(base.raw(), prime);
        for (int e = 1; e <= exp; ++e) {
            power = power * base;
            for (std::size_t i = 0; i < existing; ++i) divs.push_back(divs[i] * power);
        }
    }
    return divs;
}

// Nonzero rational roots of a univariate Laurent polynomial, exactly, via the
// rational root theorem after clearing denominators.
std::vector<Rational> rational_roots(const std::map<int, Rational>& poly) {
    int min_exp = poly.begin()->first;
    Bigint denom_lcm(1L);
    for (const auto& [e, c] : poly) {
        Bigint d = c.denominator();
        Bigint g;
        mpz_gcd(g.raw(), denom_lcm.raw(), d.raw());
        denom_lcm = denom_lcm * d;
        mpz_divexact(denom_lcm.raw(), denom_lcm.raw(), g.raw());
    }
    std::map<int, Bigint> zpoly;
    for (const auto& [e, c] : poly) {
        Rational scaled = c * Rational(denom_lcm);
        zpoly[e - min_exp] = scaled.numerator();
    }
    const Bigint& trailing = zpoly.begin()->second;
    const Bigint& leading = zpoly.rbegin()->second;

    std::vector<Rational> candidates;
    for (const auto& u : divisors_of(trailing.abs()))
        for (const auto& v : divisors_of(leading.abs())) {
            Rational c(u, v);
            candidates.push_back(c);
            candidates.push_back(-c);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<Rational> roots;
    for (const auto& c : candidates) {
        Rational sum(0);
        for (const auto& [e, coeff] : zpoly) sum += Rational(coeff) * c.pow(e);
        if (sum.is_zero()) roots.push_back(c);
    }
    return roots;
}

struct CharacterSearch {
    Parity parity;
    std::map<std::uint64_t, Rational> character;
    Rational consequent_value;  // B_tau(chi) != 0
};

// Searches a rational point chi with A_tau(chi) = 0 and B_tau(chi) != 0 over
// all node primes, specializing all but one variable from a height-ordered
// pool and extracting exact rational roots for the last.
std::optional<CharacterSearch> find_character(const LaurentPoly& antecedent_part,
                                              const LaurentPoly& consequent_part, Parity parity,
                                              const std::vector<std::uint64_t>& all_primes,
                                              unsigned height_cap) {
    if (consequent_part.is_zero()) return std::nullopt;

    auto accept = [&](std::map<std::uint64_t, Rational> chi) -> std::optional<CharacterSearch> {
        Rational b = eval_laurent(consequent_part, chi);
        if (b.is_zero()) return std::nullopt;
        return CharacterSearch{parity, std::move(chi), std::move(b)};
    };

    std::vector<std::uint64_t> avars = antecedent_part.basis();
    std::vector<std::uint64_t> free_primes;
    for (std::uint64_t p : all_primes)
        if (std::find(avars.begin(), avars.end(), p) == avars.end()) free_primes.push_back(p);

    for (unsigned height = 1; height <= height_cap; ++height) {
        std::vector<Rational> pool = rational_pool(height);

        // Assignment of the primes that A_tau does not see; they only need to
        // keep B_tau nonzero.
        std::vector<std::size_t> free_idx(free_primes.size(), 0);
        auto next_tuple = [&](std::vector<std::size_t>& idx) {
            for (std::size_t d = 0; d < idx.size(); ++d) {
                if (++idx[d] < pool.size()) return true;
                idx[d] = 0;
            }
            return idx.empty();
        };

        bool first_free = true;
        while (true) {
            if (!first_free) {
                if (free_idx.empty() || !next_tuple(free_idx)) break;
            }
            first_free = false;
            std::map<std::uint64_t, Rational> assignment;
            for (std::size_t i = 0; i < free_primes.size(); ++i)
                assignment[free_primes[i]] = pool[free_idx[i]];

            if (antecedent_part.is_zero()) {
                // Any chi annihilates the zero part; A_tau's variable set is empty.
                if (auto found = accept(assignment)) return found;
                continue;
            }
            if (avars.empty()) return std::nullopt;  // nonzero constant never vanishes

            // Specialize all but one of A_tau's variables, solve the last exactly.
            for (std::size_t solve = 0; solve < avars.size(); ++solve) {
                std::vector<std::uint64_t> others;
                for (std::size_t i = 0; i < avars.size(); ++i)
                    if (i != solve) others.push_back(avars[i]);
                std::vector<std::size_t> oidx(others.size(), 0);
                bool first_other = true;
                while (true) {
                    if (!first_other) {
                        if (oidx.empty() || !next_tuple(oidx)) break;
                    }
                    first_other = false;
                    std::map<std::uint64_t, Rational> chi = assignment;
                    for (std::size_t i = 0; i < others.size(); ++i) chi[others[i]] = pool[oidx[i]];

                    std::map<int, Rational> univariate;
                    for (const auto& [e, c] : antecedent_part.terms()) {
                        Rational coeff = c;
                        for (const auto& [prime, exp] : e.entries()) {
                            if (prime == avars[solve]) continue;
                            coeff *= chi.at(prime).pow(exp);
                        }
                        int se = e.exponent(avars[solve]);
                        auto it = univariate.find(se);
                        if (it == univariate.end())
                            univariate[se] = coeff;
                        else {
                            it->second += coeff;
                            if (it->second.is_zero()) univariate.erase(it);
                        }
                    }
                    if (univariate.empty()) {
                        // Specialization annihilated A_tau; the solve variable is free.
                        for (const auto& value : pool) {
                            chi[avars[solve]] = value;
                            if (auto found = accept(chi)) return found;
                        }
                        continue;
                    }
                    for (const auto& root : rational_roots(univariate)) {
                        if (root.is_zero()) continue;
                        chi[avars[solve]] = root;
                        if (auto found = accept(chi)) return found;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

WitnessFunction witness_same_order(const DiffScheme& antecedent, const DiffScheme& consequent,
                                   unsigned scales, std::optional<unsigned> search_cap) {
    if (scales < 1) throw DomainError("witness needs at least one scale");
    ImplicationVerdict iv = implies(antecedent, consequent);
    if (!iv.order) throw DomainError("witness_same_order requires equal orders");
    if (iv.holds) throw DomainError("implication holds; no same-order witness exists");
    const std::size_t n = *iv.order;

    NodeGroup group = analyze_nodes(antecedent, consequent);
    AlgebraElement alpha = to_algebra(antecedent);
    AlgebraElement beta = to_algebra(consequent);

    const unsigned height_cap = std::max(2u, search_cap.value_or(6));
    std::optional<CharacterSearch> found;
    for (Parity parity : {epsilon_parity(n), epsilon_prime_parity(n)}) {
        LaurentPoly a_part = laurent_embed(parity_project(alpha, parity));
        LaurentPoly b_part = laurent_embed(parity_project(beta, parity));
        // Only a parity whose divisibility fails can carry a witness: if
        // B_tau = Q * A_tau then every zero of A_tau kills B_tau too.
        if (b_part.is_zero()) continue;
        if (!a_part.is_zero() && exact_divide(b_part, a_part)) continue;
        found = find_character(a_part, b_part, parity, group.primes, height_cap);
        if (found) break;
    }
    if (!found)
        throw WindowCapExceeded(
            "window-cap-exceeded: no rational character annihilates the antecedent component up "
            "to search height " +
            std::to_string(height_cap));

    WitnessFunction w;
    w.scale_prime = group.scale_prime;
    w.scale_count = scales;
    w.node_norm = group.max_node_norm;
    w.window_radius = 2 * group.max_node_norm + 1;
    w.order = static_cast<unsigned>(n);
    w.node_primes = group.primes;
    w.parity = found->parity;
    w.character = found->character;
    w.normalizer = found->consequent_value.inverse();
    for (const auto& g : vectors_up_to_norm(group.primes, w.window_radius - w.node_norm)) {
        Rational value = w.character_at(g) * w.normalizer;
        w.window_table.emplace(std::make_pair(+1, g), value);
        w.window_table.emplace(std::make_pair(-1, g),
                               w.parity == Parity::even ? value : -value);
    }
    return w;
}

WitnessCheckReport verify_witness(const WitnessFunction& w, const DiffScheme& antecedent,
                                  const DiffScheme& consequent) {
    WitnessCheckReport report;
    FunctionSpec f = FunctionSpec::witness_table(std::make_shared<WitnessFunction>(w));

    auto difference_at = [&](const DiffScheme& s, const Rational& h) {
        Rational sum(0);
        for (const auto& t : s.terms()) sum += t.coeff * f.eval(QuadExt(t.node * h)).rat();
        return sum;
    };

    // Character identities, recomputed from the schemes themselves: the
    // antecedent's tau-part must vanish at chi and the consequent's must give
    // back the normalizer's inverse.
    auto twisted_value = [&](const DiffScheme& s) {
        Rational sum(0);
        for (const auto& t : s.terms()) {
            if (t.node.is_zero()) continue;
            Rational chi = w.character_at(factor_positive(t.node.abs()));
            Rational tau = w.parity == Parity::odd && t.node.sign() < 0 ? Rational(-1) : Rational(1);
            sum += t.coeff * tau * chi;
        }
        return sum;
    };
    ++report.checks_run;
    if (!twisted_value(antecedent).is_zero())
        report.failures.push_back("character does not annihilate the antecedent component");
    ++report.checks_run;
    if (twisted_value(consequent) * w.normalizer != Rational(1))
        report.failures.push_back("consequent normalization is not 1");

    Rational p(static_cast<long>(w.scale_prime));
    std::vector<ExponentVector> grid =
        vectors_up_to_norm(w.node_primes, w.window_radius + w.node_norm);
    for (unsigned m = 1; m <= w.scale_count; ++m) {
        Rational scale = p.pow(-static_cast<long>(m));
        for (const auto& gprime : grid) {
            Rational base = gprime.reconstruct() * scale;
            for (int sg : {+1, -1}) {
                Rational h = sg < 0 ? -base : base;
                ++report.checks_run;
                if (!difference_at(antecedent, h).is_zero())
                    report.failures.push_back("antecedent difference nonzero at h = " +
                                              h.to_string());
            }
        }
        ++report.checks_run;
        if (difference_at(consequent, scale) != Rational(1))
            report.failures.push_back("consequent difference != 1 at h = " + scale.to_string());
    }
    report.passed = report.failures.empty();
    report.structural_note =
        "for h outside the grid: points with a prime factor outside the node primes and " +
        std::to_string(w.scale_prime) + ", or with a " + std::to_string(w.scale_prime) +
        "-exponent outside 1.." + std::to_string(w.scale_count) +
        ", evaluate to 0 under every node dilation; on the remaining lattice the verified "
        "character identity annihilates the antecedent difference at every h";
    return report;
}

// --- probes ------------------------------------------------------------

std::string to_string(Branch b) {
    switch (b) {
        case Branch::rational: return "rational";
        case Branch::sqrt2: return "sqrt2";
        case Branch::signed_alternating: return "signed_alternating";
    }
    return "?";
}

std::string to_string(ProbeOutcome o) {
    switch (o) {
        case ProbeOutcome::converges: return "converges";
        case ProbeOutcome::diverges: return "diverges";
        case ProbeOutcome::oscillates: return "oscillates";
        case ProbeOutcome::inconclusive: return "inconclusive";
    }
    return "?";
}

ProbeReport probe(const DiffScheme& s, const FunctionSpec& f, const ProbeSequence& seq) {
    GrdProfile prof = grd_profile(s);
    if (!prof.is_grd) throw DomainError("probe requires a generalized Riemann difference");
    if (seq.count < 3) throw DomainError("probe needs at least 3 samples");
    if (!(seq.ratio > Rational(0) && seq.ratio < Rational(1)))
        throw DomainError("probe ratio must lie in (0, 1)");
    const std::size_t n = *prof.order;

    ProbeReport report;
    for (unsigned j = 1; j <= seq.count; ++j) {
        Rational rj = seq.ratio.pow(static_cast<long>(j));
        QuadExt h;
        switch (seq.branch) {
            case Branch::rational: h = QuadExt(rj); break;
            case Branch::sqrt2: h = QuadExt(Rational(0), rj); break;
            case Branch::signed_alternating: h = QuadExt(j % 2 == 1 ? -rj : rj); break;
        }
        QuadExt delta;
        for (const auto& t : s.terms()) delta = delta + QuadExt(t.coeff) * f.eval(h * QuadExt(t.node));
        report.samples.push_back(ProbeSample{h, delta / h.pow(n)});
    }

    const auto& q = report.samples;
    const std::size_t count = q.size();

    // Constant tail (the first sample may be transient).
    bool constant_tail = true;
    for (std::size_t j = 2; j < count; ++j)
        if (q[j].quotient != q[1].quotient) constant_tail = false;
    if (constant_tail) {
        report.outcome = ProbeOutcome::converges;
        report.limit = q[1].quotient;
        return report;
    }

    // Exactly two alternating values.
    bool alternates = q[0].quotient != q[1].quotient;
    for (std::size_t j = 2; j < count && alternates; ++j)
        if (q[j].quotient != q[j - 2].quotient) alternates = false;
    if (alternates) {
        report.outcome = ProbeOutcome::oscillates;
        report.branches = std::make_pair(q[0].quotient, q[1].quotient);
        return report;
    }

    // Strictly growing magnitude.
    bool growing = true;
    for (std::size_t j = 1; j < count && growing; ++j)
        if (!(q[j].quotient.abs() > q[j - 1].quotient.abs())) growing = false;
    if (growing) {
        report.outcome = ProbeOutcome::diverges;
        return report;
    }

    // Exactly geometric decay: a constant magnitude ratio below 1 sends the
    // sampled sequence to 0 with no threshold involved.
    bool geometric = !q[0].quotient.is_zero() && !q[1].quotient.is_zero();
    if (geometric) {
        QuadExt ratio = q[1].quotient.abs() / q[0].quotient.abs();
        geometric = ratio < QuadExt(Rational(1));
        for (std::size_t j = 2; j < count && geometric; ++j)
            if (q[j].quotient.abs() != q[j - 1].quotient.abs() * ratio) geometric = false;
    }
    if (geometric) {
        report.outcome = ProbeOutcome::converges;
        report.limit = QuadExt();
        return report;
    }

    report.outcome = ProbeOutcome::inconclusive;
    return report;
}

}  // namespace grd
