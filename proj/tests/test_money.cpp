// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "netdesign/errors.hpp"
#include "netdesign/money.hpp"

using netdesign::Cents;
using netdesign::ParseError;

TEST_CASE("parses whole dollars and cent fractions") {
    CHECK(netdesign::parse_usd("10820") == 1082000);
    CHECK(netdesign::parse_usd("80") == 8000);
    CHECK(netdesign::parse_usd("1234.56") == 123456);
    CHECK(netdesign::parse_usd("0.5") == 50);
    CHECK(netdesign::parse_usd("0.05") == 5);
    CHECK(netdesign::parse_usd("0") == 0);
}

TEST_CASE("rejects malformed amounts") {
    CHECK_THROWS_AS(netdesign::parse_usd(""), ParseError);
    CHECK_THROWS_AS(netdesign::parse_usd("-5"), ParseError);
    CHECK_THROWS_AS(netdesign::parse_usd("1.234"), ParseError);
    CHECK_THROWS_AS(netdesign::parse_usd("1."), ParseError);
    CHECK_THROWS_AS(netdesign::parse_usd(".5"), ParseError);
    CHECK_THROWS_AS(netdesign::parse_usd("12a"), ParseError);
    CHECK_THROWS_AS(netdesign::parse_usd("$5"), ParseError);
}

TEST_CASE("formats without trailing zero cents") {
    CHECK(netdesign::format_usd(1082000) == "10820");
    CHECK(netdesign::format_usd(123456) == "1234.56");
    CHECK(netdesign::format_usd(50) == "0.50");
    CHECK(netdesign::format_usd(0) == "0");
}

TEST_CASE("fixed format always shows two decimals") {
    CHECK(netdesign::format_usd_fixed(22950000) == "229500.00");
    CHECK(netdesign::format_usd_fixed(123456) == "1234.56");
    CHECK(netdesign::format_usd_fixed(5) == "0.05");
}

TEST_CASE("round-trips through parse and format") {
    for (Cents c : {Cents{0}, Cents{5}, Cents{50}, Cents{123456}, Cents{1082000}, Cents{25200000}}) {
        CHECK(netdesign::parse_usd(netdesign::format_usd(c)) == c);
        CHECK(netdesign::parse_usd(netdesign::format_usd_fixed(c)) == c);
    }
}
