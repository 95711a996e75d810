#include "grd/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "grd/linsolve.hpp"

namespace grd {

LaurentPoly LaurentPoly::monomial(const Rational& coeff, const ExponentVector& exponents) {
    LaurentPoly p;
    if (!coeff.is_zero()) p.terms_[exponents] = coeff;
    return p;
}

void LaurentPoly::add_term(const ExponentVector& e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[e] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea.plus(eb), ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, coeff] : terms_) r.terms_[e] = coeff * c;
    return r;
}

std::vector<std::uint64_t> LaurentPoly::basis() const {
    std::set<std::uint64_t> primes;
    for (const auto& [e, c] : terms_)
        for (const auto& [p, exp] : e.entries()) primes.insert(p);
    return {primes.begin(), primes.end()};
}

std::optional<std::pair<Rational, Rational>> is_monomial(const LaurentPoly& p) {
    if (p.term_count() != 1) return std::nullopt;
    const auto& [e, c] = *p.terms().begin();
    return std::make_pair(c, e.reconstruct());
}

LaurentPoly laurent_embed(const PositivePart& p) {
    LaurentPoly out;
    for (const auto& [r, c] : p.terms) out.add_term(factor_positive(r), c);
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        if (out.empty()) {
            if (c.sign() < 0) out += '-';
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        Rational ac = c.abs();
        std::vector<std::string> factors;
        if (!ac.is_one() || it->first.is_one()) factors.push_back(ac.to_string());
        for (const auto& [prime, exp] : it->first.entries()) {
            std::string v = "y" + std::to_string(prime);
            if (exp != 1) v += "^" + std::to_string(exp);
            factors.push_back(std::move(v));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i > 0) out += '*';
            out += factors[i];
        }
    }
    return out;
}

// --- division ----------------------------------------------------------

namespace {

// Dense exponent tuples over a fixed basis snapshot, compared in graded
// lexicographic order (total degree first, then leftmost-largest).
struct GrlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        long ta = 0;
        long tb = 0;
        for (int v : a) ta += v;
        for (int v : b) tb += v;
        if (ta != tb) return ta < tb;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

std::vector<int> densify(const ExponentVector& e, const std::vector<std::uint64_t>& basis) {
    std::vector<int> v(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) v[i] = e.exponent(basis[i]);
    return v;
}

ExponentVector sparsify(const std::vector<int>& v, const std::vector<std::uint64_t>& basis) {
    ExponentVector e;
    for (std::size_t i = 0; i < basis.size(); ++i) e.set(basis[i], v[i]);
    return e;
}

std::vector<std::uint64_t> union_basis(const LaurentPoly& a, const LaurentPoly& b) {
    std::vector<std::uint64_t> ba = a.basis();
    std::vector<std::uint64_t> bb = b.basis();
    std::vector<std::uint64_t> out;
    std::set_union(ba.begin(), ba.end(), bb.begin(), bb.end(), std::back_inserter(out));
    return out;
}

using DensePoly = std::map<std::vector<int>, Rational, GrlexLess>;

DensePoly to_dense_shifted(const LaurentPoly& p, const std::vector<std::uint64_t>& basis,
                           std::vector<int>& shift_out) {
    shift_out.assign(basis.size(), 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> v = densify(e, basis);
        for (std::size_t i = 0; i < basis.size(); ++i)
            shift_out[i] = first ? v[i] : std::min(shift_out[i], v[i]);
        first = false;
    }
    DensePoly out;
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> v = densify(e, basis);
        for (std::size_t i = 0; i < basis.size(); ++i) v[i] -= shift_out[i];
        out[v] = c;
    }
    return out;
}

}  // namespace

std::optional<LaurentPoly> exact_divide(const LaurentPoly& numerator, const LaurentPoly& divisor) {
    if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
    if (numerator.is_zero()) return LaurentPoly::zero();

    const std::vector<std::uint64_t> basis = union_basis(numerator, divisor);
    std::vector<int> shift_n;
    std::vector<int> shift_d;
    DensePoly work = to_dense_shifted(numerator, basis, shift_n);
    DensePoly div = to_dense_shifted(divisor, basis, shift_d);

    const std::vector<int>& lead_exp = div.rbegin()->first;
    const Rational& lead_coeff = div.rbegin()->second;

    DensePoly quot;
    while (!work.empty()) {
        const auto& [top_exp, top_coeff] = *work.rbegin();
        std::vector<int> t(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            t[i] = top_exp[i] - lead_exp[i];
            if (t[i] < 0) return std::nullopt;  // leading term not divisible => remainder != 0
        }
        Rational tc = top_coeff / lead_coeff;
        quot[t] = tc;
        for (const auto& [e, c] : div) {
            std::vector<int> target(basis.size());
            for (std::size_t i = 0; i < basis.size(); ++i) target[i] = e[i] + t[i];
            auto it = work.find(target);
            Rational updated = (it == work.end() ? Rational(0) : it->second) - tc * c;
            if (updated.is_zero()) {
                if (it != work.end()) work.erase(it);
            } else {
                work[target] = updated;
            }
        }
    }

    LaurentPoly result;
    for (const auto& [e, c] : quot) {
        std::vector<int> v = e;
        for (std::size_t i = 0; i < basis.size(); ++i) v[i] += shift_n[i] - shift_d[i];
        result.add_term(sparsify(v, basis), c);
    }
    return result;
}

std::optional<LaurentPoly> divides_brute(const LaurentPoly& numerator, const LaurentPoly& divisor,
                                         unsigned bound) {
    if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
    if (numerator.is_zero()) return LaurentPoly::zero();

    const std::vector<std::uint64_t> basis = union_basis(numerator, divisor);
    const std::size_t k = basis.size();

    auto ranges_of = [&](const LaurentPoly& p) {
        std::vector<std::pair<int, int>> r(k, {0, 0});
        bool first = true;
        for (const auto& [e, c] : p.terms()) {
            for (std::size_t i = 0; i < k; ++i) {
                int v = e.exponent(basis[i]);
                if (first) {
                    r[i] = {v, v};
                } else {
                    r[i].first = std::min(r[i].first, v);
                    r[i].second = std::max(r[i].second, v);
                }
            }
            first = false;
        }
        return r;
    };
    auto rn = ranges_of(numerator);
    auto rd = ranges_of(divisor);

    // Quotient exponents live in the Newton-range difference, padded by bound.
    std::vector<std::pair<int, int>> box(k);
    std::size_t candidate_count = 1;
    for (std::size_t i = 0; i < k; ++i) {
        int lo = rn[i].first - rd[i].first - static_cast<int>(bound);
        int hi = rn[i].second - rd[i].second + static_cast<int>(bound);
        if (lo > hi) return std::nullopt;
        box[i] = {lo, hi};
        candidate_count *= static_cast<std::size_t>(hi - lo + 1);
        if (candidate_count > 200000) throw DomainError("brute-force candidate support too large");
    }

    std::vector<std::vector<int>> candidates;
    std::vector<int> current(k, 0);
    auto enumerate = [&](auto&& self, std::size_t dim) -> void {
        if (dim == k) {
            candidates.push_back(current);
            return;
        }
        for (int v = box[dim].first; v <= box[dim].second; ++v) {
            current[dim] = v;
            self(self, dim + 1);
        }
    };
    enumerate(enumerate, 0);

    // Equations over every monomial a product can touch, plus the numerator's.
    std::map<std::vector<int>, std::size_t> eq_index;
    for (const auto& cand : candidates)
        for (const auto& [e, c] : divisor.terms()) {
            std::vector<int> target = cand;
            std::vector<int> de = densify(e, basis);
            for (std::size_t i = 0; i < k; ++i) target[i] += de[i];
            eq_index.emplace(target, eq_index.size());
        }
    for (const auto& [e, c] : numerator.terms()) eq_index.emplace(densify(e, basis), eq_index.size());

    std::vector<std::vector<Rational>> rows(eq_index.size(),
                                            std::vector<Rational>(candidates.size(), Rational(0)));
    std::vector<Rational> rhs(eq_index.size(), Rational(0));
    for (std::size_t j = 0; j < candidates.size(); ++j)
        for (const auto& [e, c] : divisor.terms()) {
            std::vector<int> target = candidates[j];
            std::vector<int> de = densify(e, basis);
            for (std::size_t i = 0; i < k; ++i) target[i] += de[i];
            rows[eq_index.at(target)][j] += c;
        }
    for (const auto& [e, c] : numerator.terms()) rhs[eq_index.at(densify(e, basis))] = c;

    auto sol = solve_linear_exact(std::move(rows), std::move(rhs));
    if (!sol) return std::nullopt;

    LaurentPoly q;
    for (std::size_t j = 0; j < candidates.size(); ++j)
        if (!sol->values[j].is_zero()) q.add_term(sparsify(candidates[j], basis), sol->values[j]);
    if (divisor * q != numerator) return std::nullopt;  // box covered all products, so unreachable
    return q;
}

// --- parsing -----------------------------------------------------------

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

LaurentPoly parse_laurent(std::string_view text) {
    LaurentPoly poly;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_uint = [&](const char* what) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw ParseError(std::string("expected ") + what, start);
        return std::string(text.substr(start, i - start));
    };

    skip_ws();
    if (i >= text.size()) throw ParseError("empty polynomial", 0);
    bool first = true;
    while (true) {
        skip_ws();
        int sign = 1;
        if (!first || (i < text.size() && (text[i] == '+' || text[i] == '-'))) {
            if (i >= text.size() || (text[i] != '+' && text[i] != '-')) break;
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        }
        first = false;

        Rational coeff(1);
        bool saw_anything = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t start = i;
            while (i < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
                ++i;
            coeff = Rational::parse(text.substr(start, i - start));
            saw_anything = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        ExponentVector exps;
        while (i < text.size() && text[i] == 'y') {
            ++i;
            std::size_t ppos = i;
            Bigint prime(read_uint("prime after 'y'"));
            if (!prime.fits_u64() || !is_prime_u64(prime.to_u64()))
                throw ParseError("variable subscript must be prime", ppos);
            int exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                int esign = 1;
                if (i < text.size() && text[i] == '-') {
                    esign = -1;
                    ++i;
                }
                exp = esign * std::stoi(read_uint("exponent"));
            }
            std::uint64_t p = prime.to_u64();
            if (exps.exponent(p) != 0) throw ParseError("repeated variable in a term", ppos);
            exps.set(p, exp);
            saw_anything = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        if (!saw_anything) throw ParseError("expected coefficient or variable", i);
        if (sign < 0) coeff = -coeff;
        poly.add_term(exps, coeff);
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '+' && text[i] != '-')
            throw ParseError("expected '+' or '-' between terms", i);
    }
    return poly;
}

}  // namespace grd
