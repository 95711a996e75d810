#include "grd/classify.hpp"

#include <stdexcept>

namespace grd {

std::string to_string(Reason r) {
    switch (r) {
        case Reason::ok: return "ok";
        case Reason::order_gap: return "order-gap";
        case Reason::even_part_not_divisible: return "even-part-not-divisible";
        case Reason::odd_part_not_divisible: return "odd-part-not-divisible";
        case Reason::zero_vs_nonzero_component: return "zero-vs-nonzero-component";
    }
    return "?";
}

namespace {

std::size_t require_grd(const DiffScheme& s, const char* role) {
    GrdProfile p = grd_profile(s);
    if (!p.is_grd)
        throw DomainError(std::string(role) + " is not a generalized Riemann difference");
    return *p.order;
}

Reason not_divisible_reason(Parity p) {
    return p == Parity::even ? Reason::even_part_not_divisible : Reason::odd_part_not_divisible;
}

}  // namespace

ImplicationVerdict implies(const DiffScheme& antecedent, const DiffScheme& consequent) {
    const std::size_t n = require_grd(antecedent, "antecedent");
    const std::size_t m = require_grd(consequent, "consequent");
    ImplicationVerdict v;
    if (n != m) {
        v.reason = Reason::order_gap;
        return v;
    }
    v.order = n;

    AlgebraElement alpha = to_algebra(antecedent);
    AlgebraElement beta = to_algebra(consequent);

    std::pair<CertificateSide, CertificateSide> cert;
    const Parity parities[2] = {epsilon_parity(n), epsilon_prime_parity(n)};
    for (int i = 0; i < 2; ++i) {
        Parity parity = parities[i];
        PositivePart from = parity_project(alpha, parity);
        PositivePart to = parity_project(beta, parity);
        CertificateSide& side = i == 0 ? cert.first : cert.second;
        if (to.is_zero()) {
            side.zero_component = true;  // 0 lies in every ideal
            continue;
        }
        if (from.is_zero()) {
            v.reason = Reason::zero_vs_nonzero_component;
            return v;
        }
        auto quotient = exact_divide(laurent_embed(to), laurent_embed(from));
        if (!quotient) {
            v.reason = not_divisible_reason(parity);
            return v;
        }
        side.quotient = std::move(*quotient);
    }
    v.holds = true;
    v.certificate = std::move(cert);
    return v;
}

EquivalenceVerdict equivalent(const DiffScheme& a, const DiffScheme& b) {
    const std::size_t n = require_grd(a, "first scheme");
    const std::size_t m = require_grd(b, "second scheme");
    EquivalenceVerdict v;
    if (n != m) {
        v.reason = Reason::order_gap;
        return v;
    }
    v.order = n;

    AlgebraElement alpha = to_algebra(a);
    AlgebraElement beta = to_algebra(b);

    // Epsilon parts: both are order-n GRD components (never zero), and the
    // quotient must be the monomial of a scaling.
    const Parity eps = epsilon_parity(n);
    PositivePart pa = parity_project(alpha, eps);
    PositivePart pb = parity_project(beta, eps);
    if (pa.is_zero() || pb.is_zero())
        throw std::logic_error("epsilon component of a GRD vanished");
    auto q_eps = exact_divide(laurent_embed(pa), laurent_embed(pb));
    auto mono = q_eps ? is_monomial(*q_eps) : std::nullopt;
    if (!mono) {
        v.reason = not_divisible_reason(eps);
        return v;
    }
    const auto& [c, s] = *mono;
    if (c != s.pow(-static_cast<long>(n)))
        throw std::logic_error("epsilon quotient scalar is not s^-n");

    // Epsilon-prime parts: both zero, or a monomial quotient giving (A, r).
    const Parity epsp = epsilon_prime_parity(n);
    PositivePart pa2 = parity_project(alpha, epsp);
    PositivePart pb2 = parity_project(beta, epsp);
    EquivalenceConstants constants{s, std::nullopt, std::nullopt};
    if (pa2.is_zero() != pb2.is_zero()) {
        v.reason = Reason::zero_vs_nonzero_component;
        return v;
    }
    if (!pa2.is_zero()) {
        auto q2 = exact_divide(laurent_embed(pa2), laurent_embed(pb2));
        auto mono2 = q2 ? is_monomial(*q2) : std::nullopt;
        if (!mono2) {
            v.reason = not_divisible_reason(epsp);
            return v;
        }
        constants.A = mono2->first;
        constants.r = mono2->second;
    }
    v.holds = true;
    v.constants = std::move(constants);
    return v;
}

namespace {

Rational max_abs_node(const DiffScheme& s) {
    Rational mx(0);
    for (const auto& t : s.terms()) {
        Rational a = t.node.abs();
        if (a > mx) mx = a;
    }
    return mx;
}

}  // namespace

CanonicalForm canonical_form(const DiffScheme& s) {
    GrdProfile p = grd_profile(s);
    if (!p.is_grd) throw DomainError("canonical_form requires a generalized Riemann difference");
    const std::size_t n = *p.order;
    ParitySplit split = parity_split(s);

    CanonicalForm form;
    form.order = n;

    const DiffScheme& eps = split.epsilon(n);
    if (eps.is_zero()) throw std::logic_error("epsilon component of a GRD vanished");
    form.epsilon_canon = scaling(eps, max_abs_node(eps).inverse());

    const DiffScheme& epsp = split.epsilon_prime(n);
    if (!epsp.is_zero()) {
        DiffScheme d = dilate(epsp, max_abs_node(epsp).inverse());
        Rational at_one = d.coeff_at(Rational(1));
        if (at_one.is_zero()) throw std::logic_error("dilated component lacks node 1");
        form.epsilon_prime_canon = scale(d, at_one.inverse());
    }
    return form;
}

DiffScheme canonical_representative(const CanonicalForm& form) {
    std::vector<Term> terms = form.epsilon_canon.terms();
    for (const auto& t : form.epsilon_prime_canon.terms()) terms.push_back(t);
    return DiffScheme::from_terms(std::move(terms));
}

}  // namespace grd
