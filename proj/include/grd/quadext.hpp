#pragma once

#include <string>

#include "grd/rational.hpp"

namespace grd {

// Element of the quadratic extension Q(sqrt 2): rat + irr * sqrt(2).
// Equality is componentwise; the value is rational iff irr == 0.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(Rational rational_part)  // NOLINT: implicit by design
        : rat_(std::move(rational_part)) {}
    QuadExt(Rational rational_part, Rational sqrt2_part)
        : rat_(std::move(rational_part)), irr_(std::move(sqrt2_part)) {}

    static QuadExt sqrt2() { return QuadExt(Rational(0), Rational(1)); }

    const Rational& rat() const { return rat_; }
    const Rational& irr() const { return irr_; }
    bool is_rational() const { return irr_.is_zero(); }
    bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        return QuadExt(a.rat_ + b.rat_, a.irr_ + b.irr_);
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
        return QuadExt(a.rat_ - b.rat_, a.irr_ - b.irr_);
    }
    QuadExt operator-() const { return QuadExt(-rat_, -irr_); }

    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        // (p + q s)(u + v s) = pu + 2qv + (pv + qu) s
        return QuadExt(a.rat_ * b.rat_ + Rational(2) * a.irr_ * b.irr_,
                       a.rat_ * b.irr_ + a.irr_ * b.rat_);
    }
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b);

    QuadExt pow(unsigned long e) const;

    // Exact sign: a + b*sqrt(2) = 0 only when a = b = 0, since sqrt(2) is irrational.
    int sign() const;
    QuadExt abs() const { return sign() < 0 ? -*this : *this; }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return a.rat_ == b.rat_ && a.irr_ == b.irr_;
    }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }
    friend bool operator<(const QuadExt& a, const QuadExt& b) { return (a - b).sign() < 0; }
    friend bool operator>(const QuadExt& a, const QuadExt& b) { return (a - b).sign() > 0; }

    // "a", "b*s2", or "a+b*s2" / "a-b*s2" with exact rational components.
    std::string to_string() const;

private:
    Rational rat_;
    Rational irr_;
};

}  // namespace grd
