#include "grd/scheme.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "grd/linsolve.hpp"

namespace grd {

DiffScheme DiffScheme::from_terms(std::vector<Term> terms) {
    std::map<Rational, Rational> by_node;
    for (auto& t : terms) by_node[t.node] += t.coeff;
    DiffScheme s;
    for (auto it = by_node.rbegin(); it != by_node.rend(); ++it)
        if (!it->second.is_zero()) s.terms_.push_back(Term{it->second, it->first});
    return s;
}

Rational DiffScheme::coeff_at(const Rational& node) const {
    for (const auto& t : terms_)
        if (t.node == node) return t.coeff;
    return Rational(0);
}

std::string DiffScheme::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i > 0) out += ", ";
        out += terms_[i].coeff.to_string();
        out += '@';
        out += terms_[i].node.to_string();
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
    }
    Rational read_rational() {
        std::size_t start = pos;
        if (!done() && peek() == '-') ++pos;
        while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos;
        if (pos == start) throw ParseError("expected a rational", start);
        try {
            return Rational::parse(text.substr(start, pos - start));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), start + (e.has_position() ? e.position() : 0));
        }
    }
};

}  // namespace

DiffScheme parse_scheme(std::string_view text) {
    Cursor cur{text};
    std::vector<Term> terms;
    std::vector<Rational> seen_nodes;
    cur.skip_ws();
    if (cur.done()) throw ParseError("empty scheme", 0);
    while (true) {
        Rational coeff = cur.read_rational();
        if (cur.done() || cur.peek() != '@')
            throw ParseError("expected '@' after coefficient", cur.pos);
        ++cur.pos;
        std::size_t node_pos = cur.pos;
        Rational node = cur.read_rational();
        for (const auto& n : seen_nodes)
            if (n == node) throw ParseError("duplicate node " + node.to_string(), node_pos);
        seen_nodes.push_back(node);
        terms.push_back(Term{std::move(coeff), std::move(node)});

        std::size_t after_term = cur.pos;
        cur.skip_ws();
        if (cur.done()) break;
        if (cur.peek() == ',') {
            ++cur.pos;
            cur.skip_ws();
        } else if (after_term == cur.pos) {
            throw ParseError("expected ',' or whitespace between terms", cur.pos);
        }
        if (cur.done()) throw ParseError("trailing separator", cur.pos);
    }
    DiffScheme s = DiffScheme::from_terms(std::move(terms));
    if (s.is_zero()) throw ParseError("scheme has no nonzero terms", 0);
    return s;
}

Rational moment(const DiffScheme& s, std::size_t j) {
    Rational sum(0);
    for (const auto& t : s.terms()) sum += t.coeff * t.node.pow(static_cast<long>(j));
    return sum;
}

GrdProfile grd_profile(const DiffScheme& s) {
    GrdProfile p;
    if (s.is_zero()) return p;
    const std::size_t m = s.size();
    for (std::size_t j = 0; j < m; ++j) p.moments.push_back(moment(s, j));
    std::size_t j0 = 0;
    while (j0 < m && p.moments[j0].is_zero()) ++j0;
    if (j0 == m)
        throw std::logic_error("nonzero scheme with all moments zero (Vandermonde violation)");
    p.first_nonzero_index = j0;
    p.first_moment = p.moments[j0];
    p.is_grd = p.first_moment == rational_factorial(j0);
    if (p.is_grd) {
        p.order = j0;
        p.excess = m - (j0 + 1);
    }
    return p;
}

DiffScheme dilate(const DiffScheme& s, const Rational& r) {
    if (r.is_zero()) throw DomainError("dilation by zero");
    std::vector<Term> terms;
    terms.reserve(s.size());
    for (const auto& t : s.terms()) terms.push_back(Term{t.coeff, t.node * r});
    return DiffScheme::from_terms(std::move(terms));
}

DiffScheme scale(const DiffScheme& s, const Rational& c) {
    if (c.is_zero()) throw DomainError("scaling coefficients by zero");
    std::vector<Term> terms;
    terms.reserve(s.size());
    for (const auto& t : s.terms()) terms.push_back(Term{t.coeff * c, t.node});
    return DiffScheme::from_terms(std::move(terms));
}

DiffScheme scaling(const DiffScheme& s, const Rational& t) {
    if (t.is_zero()) throw DomainError("scaling by zero");
    GrdProfile p = grd_profile(s);
    if (!p.is_grd) throw DomainError("scaling requires a generalized Riemann difference");
    return scale(dilate(s, t), t.pow(-static_cast<long>(*p.order)));
}

DiffScheme reflect(const DiffScheme& s) { return dilate(s, Rational(-1)); }

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

ParitySplit parity_split(const DiffScheme& s) {
    Rational half(1, 2);
    std::vector<Term> even_terms;
    std::vector<Term> odd_terms;
    for (const auto& t : s.terms()) {
        even_terms.push_back(Term{t.coeff * half, t.node});
        even_terms.push_back(Term{t.coeff * half, -t.node});
        odd_terms.push_back(Term{t.coeff * half, t.node});
        odd_terms.push_back(Term{-(t.coeff * half), -t.node});
    }
    return ParitySplit{DiffScheme::from_terms(std::move(even_terms)),
                       DiffScheme::from_terms(std::move(odd_terms))};
}

ParityStructure parity_structure(const DiffScheme& s) {
    GrdProfile p = grd_profile(s);
    if (!p.is_grd) throw DomainError("parity_structure requires a generalized Riemann difference");
    const std::size_t n = *p.order;
    ParitySplit split = parity_split(s);
    ParityStructure out;
    out.order = n;
    out.epsilon_profile = grd_profile(split.epsilon(n));
    out.epsilon_prime_profile = grd_profile(split.epsilon_prime(n));
    bool eps_ok = out.epsilon_profile.is_grd && out.epsilon_profile.order == n;
    const auto& ep = out.epsilon_prime_profile;
    bool eps_prime_ok = !ep.first_nonzero_index.has_value() || *ep.first_nonzero_index > n;
    out.theorem4_holds = eps_ok && eps_prime_ok;
    return out;
}

DiffScheme grd_from_nodes(std::vector<Rational> nodes, std::size_t n) {
    std::sort(nodes.begin(), nodes.end(), [](const Rational& a, const Rational& b) { return a > b; });
    for (std::size_t i = 1; i < nodes.size(); ++i)
        if (nodes[i] == nodes[i - 1]) throw DomainError("nodes must be distinct");
    if (nodes.size() < n + 1)
        throw DomainError("need at least n+1 nodes for an order-n difference");

    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (std::size_t j = 0; j <= n; ++j) {
        std::vector<Rational> row;
        row.reserve(nodes.size());
        for (const auto& a : nodes) row.push_back(a.pow(static_cast<long>(j)));
        rows.push_back(std::move(row));
        rhs.push_back(j == n ? rational_factorial(n) : Rational(0));
    }
    auto sol = solve_linear_exact(std::move(rows), std::move(rhs));
    if (!sol)
        throw std::logic_error("Vandermonde system infeasible on distinct nodes");

    std::vector<Term> terms;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        terms.push_back(Term{sol->values[i], nodes[i]});
    return DiffScheme::from_terms(std::move(terms));
}

// --- catalog -----------------------------------------------------------

DiffScheme riemann_scheme(unsigned n) {
    if (n < 1) throw DomainError("riemann(n) requires n >= 1");
    std::vector<Term> terms;
    for (unsigned k = 0; k <= n; ++k) {
        Rational c(Bigint::binomial(n, k));
        if (k % 2 == 1) c = -c;
        terms.push_back(Term{c, Rational(static_cast<long>(n - k))});
    }
    return DiffScheme::from_terms(std::move(terms));
}

DiffScheme symmetric_scheme(unsigned n) {
    if (n < 1) throw DomainError("symmetric(n) requires n >= 1");
    std::vector<Term> terms;
    Rational half_n(static_cast<long>(n), 2);
    for (unsigned k = 0; k <= n; ++k) {
        Rational c(Bigint::binomial(n, k));
        if (k % 2 == 1) c = -c;
        terms.push_back(Term{c, half_n - Rational(static_cast<long>(k))});
    }
    return DiffScheme::from_terms(std::move(terms));
}

DiffScheme symmetric_centered_1() {
    return DiffScheme::from_terms({Term{Rational(1, 2), Rational(1)},
                                   Term{Rational(-1, 2), Rational(-1)}});
}

DiffScheme theorem1_scheme(const Rational& A, const Rational& r) {
    if (A.is_zero() || r.is_zero()) throw DomainError("theorem1(A, r) requires A != 0 and r != 0");
    Rational half(1, 2);
    return DiffScheme::from_terms({Term{A * half, r},
                                   Term{A * half, -r},
                                   Term{-A, Rational(0)},
                                   Term{half, Rational(1)},
                                   Term{-half, Rational(-1)}});
}

DiffScheme example3iii() {
    return DiffScheme::from_terms({Term{Rational(1, 2), Rational(2)},
                                   Term{Rational(-1), Rational(1)},
                                   Term{Rational(1), Rational(-1)},
                                   Term{Rational(-1, 2), Rational(-2)}});
}

namespace {

std::vector<Rational> parse_catalog_params(std::string_view text, std::size_t offset) {
    // text is the parenthesized parameter list without the parentheses
    std::vector<Rational> params;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view piece =
            comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
        std::size_t lead = piece.find_first_not_of(" \t");
        std::size_t trail = piece.find_last_not_of(" \t");
        if (lead == std::string_view::npos)
            throw ParseError("empty catalog parameter", offset + start);
        try {
            params.push_back(Rational::parse(piece.substr(lead, trail - lead + 1)));
        } catch (const ParseError& e) {
            throw ParseError(std::string("bad catalog parameter: ") + e.what(), offset + start);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return params;
}

unsigned as_small_positive(const Rational& r, std::string_view what, std::size_t pos) {
    if (!r.is_integer() || r.sign() <= 0 || !(r.numerator() < Bigint(64L)))
        throw ParseError("catalog parameter " + std::string(what) + " must be a small positive integer",
                         pos);
    return static_cast<unsigned>(r.numerator().to_u64());
}

}  // namespace

DiffScheme catalog_lookup(std::string_view text) {
    std::size_t open = text.find('(');
    std::string_view name = open == std::string_view::npos ? text : text.substr(0, open);
    std::vector<Rational> params;
    if (open != std::string_view::npos) {
        if (text.back() != ')') throw ParseError("expected ')' in catalog reference", text.size());
        params = parse_catalog_params(text.substr(open + 1, text.size() - open - 2), open + 1);
    }
    auto expect = [&](std::size_t count) {
        if (params.size() != count)
            throw ParseError("catalog name '" + std::string(name) + "' takes " +
                             std::to_string(count) + " parameter(s)");
    };
    if (name == "riemann") {
        expect(1);
        return riemann_scheme(as_small_positive(params[0], "n", open));
    }
    if (name == "symmetric") {
        expect(1);
        return symmetric_scheme(as_small_positive(params[0], "n", open));
    }
    if (name == "symmetric_centered_1") {
        expect(0);
        return symmetric_centered_1();
    }
    if (name == "theorem1") {
        expect(2);
        if (params[0].is_zero() || params[1].is_zero())
            throw ParseError("theorem1(A, r) requires A != 0 and r != 0", open);
        return theorem1_scheme(params[0], params[1]);
    }
    if (name == "example3iii") {
        expect(0);
        return example3iii();
    }
    throw ParseError("unknown catalog name '" + std::string(name) + "'", 0);
}

DiffScheme resolve_scheme_input(std::string_view text) {
    constexpr std::string_view prefix = "catalog:";
    if (text.substr(0, prefix.size()) == prefix) return catalog_lookup(text.substr(prefix.size()));
    return parse_scheme(text);
}

}  // namespace grd
