// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace netdesign {

/// US dollar amounts are carried as integer cents so that golden equipment
/// totals compare exactly.
using Cents = std::int64_t;

/// Parses "10820", "80" or "1234.56" into cents. Throws ParseError on
/// anything else (more than two fraction digits, signs, empty input).
Cents parse_usd(std::string_view text);

/// "10820" for whole-dollar amounts, "1234.56" otherwise.
std::string format_usd(Cents cents);

/// Always two decimals: "229500.00". Used for the sweep CSV.
std::string format_usd_fixed(Cents cents);

}  // namespace netdesign
