// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "netdesign/errors.hpp"
#include "netdesign/rational.hpp"

using netdesign::ParseError;
using netdesign::Rational;
using netdesign::ValidationError;

TEST_CASE("parses integers, fractions and decimals") {
    CHECK(Rational::parse("2") == Rational(2));
    CHECK(Rational::parse("5/4") == Rational(5, 4));
    CHECK(Rational::parse("1.25") == Rational(5, 4));
    CHECK(Rational::parse(" 1 ") == Rational(1));
    CHECK(Rational::parse("0.5") == Rational(1, 2));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("0") == Rational(0));
}

TEST_CASE("rejects malformed spellings") {
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("-1"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("/2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), ParseError);
    CHECK_THROWS_AS(Rational::parse("two"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1."), ParseError);
    CHECK_THROWS_AS(Rational::parse("1e3"), ParseError);
}

TEST_CASE("normalizes on construction") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(4, 2).num() == 2);
    CHECK(Rational(4, 2).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), ValidationError);
    CHECK_THROWS_AS(Rational(-1, 2), ValidationError);
}

TEST_CASE("orders by exact cross-multiplication") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2) > Rational(5, 4));
    CHECK(Rational(5, 4) <= Rational(10, 8));
    CHECK(Rational(5, 4) >= Rational(10, 8));
    CHECK(Rational(1) != Rational(2));
}

TEST_CASE("prints reduced form") {
    CHECK(Rational(5, 4).to_string() == "5/4");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational::parse("1.25").to_string() == "5/4");
}

TEST_CASE("converts to double") {
    CHECK(Rational(5, 4).to_double() == doctest::Approx(1.25));
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
}
