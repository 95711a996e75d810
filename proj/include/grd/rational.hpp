#pragma once

#include <gmp.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "grd/errors.hpp"

namespace grd {

// Arbitrary-precision integer; value semantics over GMP's mpz_t.
class Bigint {
public:
    Bigint() { mpz_init(z_); }
    Bigint(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit by design
    explicit Bigint(const std::string& digits);

    Bigint(const Bigint& o) { mpz_init_set(z_, o.z_); }
    Bigint(Bigint&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Bigint& operator=(const Bigint& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Bigint& operator=(Bigint&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Bigint() { mpz_clear(z_); }

    static Bigint factorial(unsigned long n) {
        Bigint r;
        mpz_fac_ui(r.z_, n);
        return r;
    }
    static Bigint binomial(unsigned long n, unsigned long k) {
        Bigint r;
        mpz_bin_uiui(r.z_, n, k);
        return r;
    }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    int sign() const { return mpz_sgn(z_); }
    bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }

    Bigint operator-() const {
        Bigint r(*this);
        mpz_neg(r.z_, r.z_);
        return r;
    }
    Bigint abs() const {
        Bigint r(*this);
        mpz_abs(r.z_, r.z_);
        return r;
    }

    friend Bigint operator+(const Bigint& a, const Bigint& b) {
        Bigint r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend Bigint operator-(const Bigint& a, const Bigint& b) {
        Bigint r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend Bigint operator*(const Bigint& a, const Bigint& b) {
        Bigint r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }

    Bigint pow(unsigned long e) const {
        Bigint r;
        mpz_pow_ui(r.z_, z_, e);
        return r;
    }

    bool divisible_by(std::uint64_t d) const { return mpz_divisible_ui_p(z_, d) != 0; }
    // Requires exact divisibility.
    Bigint div_exact(std::uint64_t d) const {
        Bigint r;
        mpz_divexact_ui(r.z_, z_, d);
        return r;
    }

    friend bool operator==(const Bigint& a, const Bigint& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const Bigint& a, const Bigint& b) { return !(a == b); }
    friend bool operator<(const Bigint& a, const Bigint& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator<=(const Bigint& a, const Bigint& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
    friend bool operator>(const Bigint& a, const Bigint& b) { return mpz_cmp(a.z_, b.z_) > 0; }
    friend bool operator>=(const Bigint& a, const Bigint& b) { return mpz_cmp(a.z_, b.z_) >= 0; }

    bool fits_u64() const { return mpz_fits_ulong_p(z_) != 0; }
    std::uint64_t to_u64() const { return mpz_get_ui(z_); }

    std::string to_string() const;

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

private:
    mpz_t z_;
};

// Exact rational number; always canonical (gcd 1, positive denominator).
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long v) {  // NOLINT: implicit by design
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(long num, long den);
    Rational(const Bigint& num, const Bigint& den);
    explicit Rational(const Bigint& num) {
        mpq_init(q_);
        mpq_set_z(q_, num.raw());
    }

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    // Grammar: ["-"] digits ["/" digits]. Throws ParseError.
    static Rational parse(std::string_view text);

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sign() const { return mpq_sgn(q_); }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    bool is_one() const { return mpq_cmp_ui(q_, 1, 1) == 0; }

    Bigint numerator() const {
        Bigint n;
        mpz_set(n.raw(), mpq_numref(q_));
        return n;
    }
    Bigint denominator() const {
        Bigint d;
        mpz_set(d.raw(), mpq_denref(q_));
        return d;
    }

    Rational operator-() const {
        Rational r(*this);
        mpq_neg(r.q_, r.q_);
        return r;
    }
    Rational abs() const {
        Rational r(*this);
        mpq_abs(r.q_, r.q_);
        return r;
    }
    Rational inverse() const;

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DomainError("division by zero");
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }

    // Exact power with integer exponent; negative exponents require a nonzero base.
    Rational pow(long e) const;

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    // "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

private:
    mpq_t q_;
};

inline Rational rational_factorial(unsigned long n) { return Rational(Bigint::factorial(n)); }

}  // namespace grd
