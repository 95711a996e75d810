#include "grd/factor.hpp"

namespace grd {

namespace {

// Trial division; node values are small, so this is plenty.
void factor_into(const Bigint& value, int direction, ExponentVector& out) {
    Bigint n = value;
    if (n.is_one()) return;
    auto strip = [&](std::uint64_t d) {
        int count = 0;
        while (n.divisible_by(d)) {
            n = n.div_exact(d);
            ++count;
        }
        if (count > 0) out.set(d, out.exponent(d) + direction * count);
    };
    strip(2);
    strip(3);
    std::uint64_t d = 5;
    while (true) {
        if (n.is_one()) return;
        Bigint dd(0L);
        mpz_set_ui(dd.raw(), d);
        if (dd * dd > n) break;
        strip(d);
        strip(d + 2);
        d += 6;
    }
    // Remainder is prime.
    if (!n.fits_u64()) throw DomainError("prime factor exceeds 64 bits: " + n.to_string());
    out.set(n.to_u64(), out.exponent(n.to_u64()) + direction);
}

}  // namespace

ExponentVector factor_positive(const Rational& r) {
    if (r.sign() <= 0) throw DomainError("factor_positive requires a positive rational");
    ExponentVector v;
    factor_into(r.numerator(), +1, v);
    factor_into(r.denominator(), -1, v);
    return v;
}

Rational ExponentVector::reconstruct() const {
    Bigint num(1L);
    Bigint den(1L);
    for (const auto& [p, e] : entries_) {
        Bigint base(0L);
        mpz_set_ui(base.raw(), p);
        if (e > 0)
            num = num * base.pow(static_cast<unsigned long>(e));
        else
            den = den * base.pow(static_cast<unsigned long>(-e));
    }
    return Rational(num, den);
}

std::string ExponentVector::to_string() const {
    if (entries_.empty()) return "1";
    std::string s;
    bool first = true;
    for (const auto& [p, e] : entries_) {
        if (!first) s += '*';
        first = false;
        s += std::to_string(p);
        if (e != 1) {
            s += '^';
            s += std::to_string(e);
        }
    }
    return s;
}

}  // namespace grd
