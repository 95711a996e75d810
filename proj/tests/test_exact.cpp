#include "doctest.h"

#include "grd/factor.hpp"
#include "grd/linsolve.hpp"
#include "grd/quadext.hpp"
#include "grd/rational.hpp"
#include "test_support.hpp"

using namespace grd;
using grd::testing::Rng;

TEST_CASE("rational arithmetic is canonical and exact") {
    Rational a(6, 4);
    CHECK(a == Rational(3, 2));
    CHECK(a.numerator() == Bigint(3L));
    CHECK(a.denominator() == Bigint(2L));
    CHECK((a + Rational(1, 2)) == Rational(2));
    CHECK((a * Rational(2, 3)).is_one());
    CHECK(Rational(-4, -8) == Rational(1, 2));
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational(-7, 3).to_string() == "-7/3");
    CHECK(Rational(5, 1).to_string() == "5");
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational parsing follows the grammar") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-3/2") == Rational(-3, 2));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("+2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("2.5"), ParseError);
}

TEST_CASE("rational powers, including negative exponents") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0).is_one());
    CHECK(Rational(0).pow(0).is_one());  // 0^0 = 1 for the moment convention
    CHECK_THROWS_AS(Rational(0).pow(-1), DomainError);
}

TEST_CASE("quadratic extension arithmetic and ordering") {
    QuadExt s2 = QuadExt::sqrt2();
    CHECK((s2 * s2) == QuadExt(Rational(2)));
    QuadExt x(Rational(1, 2), Rational(-3, 4));
    QuadExt y(Rational(2), Rational(1, 3));
    CHECK((x + y) - y == x);
    CHECK((x * y) / y == x);
    CHECK_THROWS_AS(x / QuadExt(), DomainError);

    // sign needs the a^2 vs 2 b^2 comparison when components disagree
    CHECK(QuadExt(Rational(3), Rational(-2)).sign() == 1);  // 9 > 8
    CHECK(QuadExt(Rational(-3), Rational(2)).sign() == -1);
    CHECK(QuadExt(Rational(1), Rational(-1)).sign() == -1);  // 1 < sqrt2
    CHECK(QuadExt(Rational(0), Rational(-5)).sign() == -1);
    CHECK(QuadExt().sign() == 0);
    CHECK(QuadExt(Rational(1), Rational(1)) > QuadExt(Rational(2)));  // 1+sqrt2 > 2

    CHECK(QuadExt(Rational(1, 2), Rational(-3, 4)).to_string() == "1/2-3/4*s2");
    CHECK(QuadExt(Rational(0), Rational(1)).to_string() == "1*s2");
    CHECK(QuadExt(Rational(-2)).to_string() == "-2");
}

TEST_CASE("factor_positive on the worked examples") {
    ExponentVector f12 = factor_positive(Rational(12));
    CHECK(f12.exponent(2) == 2);
    CHECK(f12.exponent(3) == 1);
    CHECK(f12.entries().size() == 2);

    CHECK(factor_positive(Rational(1)).is_one());

    ExponentVector f32 = factor_positive(Rational(3, 2));
    CHECK(f32.exponent(2) == -1);
    CHECK(f32.exponent(3) == 1);

    CHECK_THROWS_AS(factor_positive(Rational(0)), DomainError);
    CHECK_THROWS_AS(factor_positive(Rational(-3)), DomainError);
}

TEST_CASE("factorization reconstructs and is additive over products") {
    Rng rng(7101);
    for (int i = 0; i < 100; ++i) {
        Rational r = grd::testing::rand_positive_rational(rng, 400, 120);
        CHECK(factor_positive(r).reconstruct() == r);
    }
    for (int i = 0; i < 100; ++i) {
        Rational r = grd::testing::rand_positive_rational(rng, 60, 48);
        Rational s = grd::testing::rand_positive_rational(rng, 60, 48);
        CHECK(factor_positive(r * s) == factor_positive(r).plus(factor_positive(s)));
    }
}

TEST_CASE("exponent vector norm and ordering") {
    ExponentVector v = factor_positive(Rational(3, 2));  // 2^-1 * 3
    CHECK(v.norm1() == 2);
    CHECK(v.negated().reconstruct() == Rational(2, 3));
    CHECK(ExponentVector::one().norm1() == 0);
    CHECK(v.minus(v).is_one());
}

TEST_CASE("solve_linear_exact on the worked examples") {
    using Rows = std::vector<std::vector<Rational>>;
    auto sol = solve_linear_exact(Rows{{1, 1}, {1, -1}}, {Rational(2), Rational(0)});
    REQUIRE(sol.has_value());
    CHECK(sol->values == std::vector<Rational>{Rational(1), Rational(1)});
    CHECK(sol->free_count == 0);

    auto under = solve_linear_exact(Rows{{1, 1}}, {Rational(1)});
    REQUIRE(under.has_value());
    CHECK(under->values == std::vector<Rational>{Rational(1), Rational(0)});
    CHECK(under->free_count == 1);

    auto bad = solve_linear_exact(Rows{{1}, {1}}, {Rational(0), Rational(1)});
    CHECK_FALSE(bad.has_value());
}

TEST_CASE("solver recovers known solutions of random invertible systems") {
    Rng rng(7102);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(grd::testing::rand_int(rng, 1, 5));
        // unit lower-triangular times unit upper-triangular is invertible
        std::vector<std::vector<Rational>> lower(n, std::vector<Rational>(n, Rational(0)));
        std::vector<std::vector<Rational>> upper(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) {
            lower[i][i] = Rational(1);
            upper[i][i] = Rational(1);
            for (std::size_t j = 0; j < i; ++j) lower[i][j] = grd::testing::rand_rational(rng, 4, 3);
            for (std::size_t j = i + 1; j < n; ++j)
                upper[i][j] = grd::testing::rand_rational(rng, 4, 3);
        }
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) m[i][j] += lower[i][k] * upper[k][j];

        std::vector<Rational> x0;
        for (std::size_t i = 0; i < n; ++i) x0.push_back(grd::testing::rand_rational(rng, 9, 5));
        std::vector<Rational> rhs(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rhs[i] += m[i][j] * x0[j];

        auto sol = solve_linear_exact(m, rhs);
        REQUIRE(sol.has_value());
        CHECK(sol->free_count == 0);
        CHECK(sol->values == x0);
    }
}
