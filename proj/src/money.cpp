// SPDX-License-Identifier: Apache-2.0

#include "netdesign/money.hpp"

#include <fmt/format.h>

#include <cctype>

#include "netdesign/errors.hpp"

namespace netdesign {

Cents parse_usd(std::string_view text) {
    if (text.empty()) throw ParseError("empty dollar amount");

    std::size_t i = 0;
    std::int64_t dollars = 0;
    bool any_digit = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        if (dollars > (INT64_MAX - 9) / 10) throw ParseError(fmt::format("dollar amount overflows: '{}'", text));
        dollars = dollars * 10 + (text[i] - '0');
        any_digit = true;
        ++i;
    }
    if (!any_digit) throw ParseError(fmt::format("bad dollar amount: '{}'", text));

    std::int64_t cents = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        int digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            cents = cents * 10 + (text[i] - '0');
            ++digits;
            ++i;
        }
        if (digits == 0 || digits > 2) throw ParseError(fmt::format("bad dollar amount: '{}'", text));
        if (digits == 1) cents *= 10;
    }
    if (i != text.size()) throw ParseError(fmt::format("bad dollar amount: '{}'", text));
    if (dollars > (INT64_MAX - cents) / 100) throw ParseError(fmt::format("dollar amount overflows: '{}'", text));
    return dollars * 100 + cents;
}

std::string format_usd(Cents cents) {
    if (cents % 100 == 0) return fmt::format("{}", cents / 100);
    return fmt::format("{}.{:02}", cents / 100, cents % 100);
}

std::string format_usd_fixed(Cents cents) {
    return fmt::format("{}.{:02}", cents / 100, cents % 100);
}

}  // namespace netdesign
