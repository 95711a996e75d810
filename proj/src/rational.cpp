#include "grd/rational.hpp"

#include <cctype>

namespace grd {

Bigint::Bigint(const std::string& digits) {
    if (mpz_init_set_str(z_, digits.c_str(), 10) != 0) {
        mpz_clear(z_);
        mpz_init(z_);
        throw ParseError("invalid integer literal '" + digits + "'");
    }
}

std::string Bigint::to_string() const {
    char* s = mpz_get_str(nullptr, 10, z_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    Rational d;
    mpq_set_si(d.q_, den, 1);
    mpq_div(q_, q_, d.q_);
}

Rational::Rational(const Bigint& num, const Bigint& den) {
    if (den.is_zero()) throw DomainError("zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw DomainError("negative power of zero");
        return Rational(0);
    }
    Rational base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), n);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), n);
    // base was canonical, so the power is canonical too
    return r;
}

Rational Rational::parse(std::string_view text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
    }
    std::size_t num_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_start) throw ParseError("expected digits in rational literal", num_start);
    Bigint num(std::string(text.substr(num_start, i - num_start)));
    Bigint den(1L);
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t den_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start) throw ParseError("expected digits after '/'", den_start);
        den = Bigint(std::string(text.substr(den_start, i - den_start)));
        if (den.is_zero()) throw ParseError("zero denominator", den_start);
    }
    if (i != text.size()) throw ParseError("trailing characters in rational literal", i);
    Rational r(num, den);
    return neg ? -r : r;
}

std::string Rational::to_string() const {
    std::string s = numerator().to_string();
    if (!is_integer()) {
        s += '/';
        s += denominator().to_string();
    }
    return s;
}

}  // namespace grd
