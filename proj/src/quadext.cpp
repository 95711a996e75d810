#include "grd/quadext.hpp"

#include <stdexcept>

namespace grd {

QuadExt operator/(const QuadExt& a, const QuadExt& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    // Multiply by the conjugate; the norm u^2 - 2 v^2 vanishes only at 0.
    Rational norm = b.rat_ * b.rat_ - Rational(2) * b.irr_ * b.irr_;
    QuadExt conj(b.rat_, -b.irr_);
    QuadExt num = a * conj;
    return QuadExt(num.rat_ / norm, num.irr_ / norm);
}

QuadExt QuadExt::pow(unsigned long e) const {
    QuadExt r(Rational(1));
    QuadExt base = *this;
    while (e > 0) {
        if (e & 1UL) r = r * base;
        base = base * base;
        e >>= 1UL;
    }
    return r;
}

int QuadExt::sign() const {
    int sr = rat_.sign();
    int si = irr_.sign();
    if (si == 0) return sr;
    if (sr == 0) return si;
    if (sr == si) return sr;
    // Opposite signs: compare |a| with |b*sqrt(2)| via a^2 vs 2 b^2.
    Rational a2 = rat_ * rat_;
    Rational b2 = Rational(2) * irr_ * irr_;
    if (a2 == b2) throw std::logic_error("a^2 = 2 b^2 with nonzero components");
    return a2 > b2 ? sr : si;
}

std::string QuadExt::to_string() const {
    if (irr_.is_zero()) return rat_.to_string();
    std::string tail = irr_.abs().to_string() + "*s2";
    if (rat_.is_zero()) return (irr_.sign() < 0 ? "-" : "") + tail;
    return rat_.to_string() + (irr_.sign() < 0 ? "-" : "+") + tail;
}

}  // namespace grd
