#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "grd/rational.hpp"

namespace grd {

// Finite map prime -> nonzero integer exponent. The empty vector is the
// rational 1; prod p^e reconstructs a unique positive rational.
class ExponentVector {
public:
    ExponentVector() = default;

    static ExponentVector one() { return ExponentVector(); }
    static ExponentVector single(std::uint64_t prime, int exponent) {
        ExponentVector v;
        v.set(prime, exponent);
        return v;
    }

    bool is_one() const { return entries_.empty(); }
    int exponent(std::uint64_t prime) const {
        auto it = entries_.find(prime);
        return it == entries_.end() ? 0 : it->second;
    }
    void set(std::uint64_t prime, int exponent) {
        if (exponent == 0)
            entries_.erase(prime);
        else
            entries_[prime] = exponent;
    }

    const std::map<std::uint64_t, int>& entries() const { return entries_; }

    ExponentVector plus(const ExponentVector& o) const {
        ExponentVector r = *this;
        for (const auto& [p, e] : o.entries_) r.set(p, r.exponent(p) + e);
        return r;
    }
    ExponentVector minus(const ExponentVector& o) const {
        ExponentVector r = *this;
        for (const auto& [p, e] : o.entries_) r.set(p, r.exponent(p) - e);
        return r;
    }
    ExponentVector negated() const {
        ExponentVector r;
        for (const auto& [p, e] : entries_) r.entries_[p] = -e;
        return r;
    }

    unsigned norm1() const {
        unsigned n = 0;
        for (const auto& [p, e] : entries_) n += static_cast<unsigned>(e < 0 ? -e : e);
        return n;
    }

    Rational reconstruct() const;

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const ExponentVector& a, const ExponentVector& b) { return !(a == b); }
    friend bool operator<(const ExponentVector& a, const ExponentVector& b) {
        return a.entries_ < b.entries_;
    }

    std::string to_string() const;  // e.g. "2^-1*3"

private:
    std::map<std::uint64_t, int> entries_;
};

// Prime factorization of a positive rational over the multiplicative basis of
// primes. Throws DomainError for r <= 0.
ExponentVector factor_positive(const Rational& r);

}  // namespace grd
