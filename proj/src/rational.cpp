// SPDX-License-Identifier: Apache-2.0

#include "netdesign/rational.hpp"

#include <fmt/format.h>

#include <cctype>

namespace netdesign {

namespace {

// Plain digit run, capped well below int64 so downstream products stay safe.
std::int64_t parse_int(std::string_view text, std::string_view whole) {
    if (text.empty()) throw ParseError(fmt::format("bad rational: '{}'", whole));
    std::int64_t value = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(fmt::format("bad rational: '{}'", whole));
        value = value * 10 + (c - '0');
        if (value > 1'000'000'000) throw ParseError(fmt::format("rational too large: '{}'", whole));
    }
    return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    // strip surrounding blanks
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const std::int64_t num = parse_int(text.substr(0, slash), text);
        const std::int64_t den = parse_int(text.substr(slash + 1), text);
        if (den == 0) throw ParseError(fmt::format("bad rational: '{}'", text));
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::int64_t whole = parse_int(text.substr(0, dot), text);
        const std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 9) throw ParseError(fmt::format("bad rational: '{}'", text));
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const std::int64_t frac_value = parse_int(frac, text);
        return Rational(whole * scale + frac_value, scale);
    }
    return Rational(parse_int(text, text), 1);
}

std::string Rational::to_string() const {
    if (den_ == 1) return fmt::format("{}", num_);
    return fmt::format("{}/{}", num_, den_);
}

}  // namespace netdesign
