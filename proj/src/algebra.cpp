#include "grd/algebra.hpp"

#include <set>

namespace grd {

AlgebraElement AlgebraElement::basis(const Rational& r) {
    if (r.is_zero()) throw DomainError("x_0 is not an element of the algebra");
    AlgebraElement a;
    a.terms_[r] = Rational(1);
    return a;
}

void AlgebraElement::add_term(const Rational& node, const Rational& coeff) {
    if (node.is_zero()) throw DomainError("x_0 is not an element of the algebra");
    auto it = terms_.find(node);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_[node] = coeff;
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r = a;
    for (const auto& [node, coeff] : b.terms_) r.add_term(node, coeff);
    return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r = a;
    for (const auto& [node, coeff] : b.terms_) r.add_term(node, -coeff);
    return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r;
    for (const auto& [ra, ca] : a.terms_)
        for (const auto& [rb, cb] : b.terms_) r.add_term(ra * rb, ca * cb);
    return r;
}

AlgebraElement AlgebraElement::scaled(const Rational& c) const {
    AlgebraElement r;
    if (c.is_zero()) return r;
    for (const auto& [node, coeff] : terms_) r.terms_[node] = coeff * c;
    return r;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += it->second.to_string() + "*x[" + it->first.to_string() + "]";
    }
    return out;
}

AlgebraElement to_algebra(const DiffScheme& s) {
    AlgebraElement a;
    for (const auto& t : s.terms())
        if (!t.node.is_zero()) a.add_term(t.node, t.coeff);
    if (a.is_zero())
        throw DomainError("scheme is supported on node 0 only; its algebra image is degenerate");
    return a;
}

PositivePart parity_project(const AlgebraElement& a, Parity parity) {
    std::set<Rational> points;
    for (const auto& [node, coeff] : a.terms()) points.insert(node.abs());
    PositivePart p;
    p.parity = parity;
    for (const auto& r : points) {
        Rational c = parity == Parity::even ? a.coeff(r) + a.coeff(-r) : a.coeff(r) - a.coeff(-r);
        if (!c.is_zero()) p.terms[r] = c;
    }
    return p;
}

AlgebraElement embed_positive_part(const PositivePart& p) {
    Rational half(1, 2);
    AlgebraElement a;
    for (const auto& [r, c] : p.terms) {
        a.add_term(r, c * half);
        a.add_term(-r, p.parity == Parity::even ? c * half : -(c * half));
    }
    return a;
}

std::string PositivePart::to_string() const {
    if (terms.empty()) return "0";
    const char* sym = parity == Parity::even ? "e" : "d";
    std::string out;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += it->second.to_string() + "*" + sym + "[" + it->first.to_string() + "]";
    }
    return out;
}

}  // namespace grd
