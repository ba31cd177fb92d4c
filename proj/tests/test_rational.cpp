#include "doctest.h"

#include "orbitatlas/rational.hpp"

using orbitatlas::Rational;

TEST_CASE("reduction and arithmetic") {
    Rational a(6, 4);
    CHECK(a.num() == 3);
    CHECK(a.den() == 2);
    CHECK(a + Rational(1, 2) == Rational(2));
    CHECK(a * Rational(2, 3) == Rational(1));
    CHECK(a - a == Rational(0));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5) < Rational(-9, 2));
    CHECK(Rational(7, 7) == Rational(1));
}

TEST_CASE("parse") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("1.1") == Rational(11, 10));
    CHECK(Rational::parse("4.5") == Rational(9, 2));
    CHECK(Rational::parse("-0.25") == Rational(-1, 4));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("-.5") == Rational(-1, 2));
    CHECK_THROWS(Rational::parse("a"));
    CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("integer accessors") {
    CHECK(Rational(8, 4).to_integer() == 2);
    CHECK_THROWS(Rational(1, 2).to_integer());
    CHECK(Rational(0).is_zero());
    CHECK(Rational(-7).sign() == -1);
}
