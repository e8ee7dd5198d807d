#include "svoa/factored.hpp"
#include "svoa/rational.hpp"

#include <catch_amalgamated.hpp>

using svoa::Rational;

TEST_CASE("rational_normalises_sign_and_gcd")
{
    Rational r(6, -8);
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK(r.str() == "-3/4");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(4, 2).pq() == "2/1");
}

TEST_CASE("rational_arithmetic")
{
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(1, 5) == Rational(-1, 5));
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational_mod1_and_floor")
{
    CHECK(Rational(7, 4).mod1() == Rational(3, 4));
    CHECK(Rational(-1, 4).mod1() == Rational(3, 4));
    CHECK(Rational(-1, 4).floor() == -1);
    CHECK(Rational(3).mod1() == Rational(0));
}

TEST_CASE("rational_parse")
{
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
}

TEST_CASE("rational_errors")
{
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1) / Rational(0));
    Rational big(INT64_MAX / 2);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("factored_cancels_before_overflow")
{
    svoa::Factored f;
    f.mul_factorial(30).div(svoa::Factored().mul_factorial(28));
    CHECK(f.is_integer());
    CHECK(f.value() == 870);
}
