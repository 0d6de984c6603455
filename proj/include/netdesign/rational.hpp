// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "netdesign/errors.hpp"

namespace netdesign {

/// Exact non-negative rational number. Blocking factors are carried as
/// rationals so integer port splits never suffer binary-float drift
/// (1.25 is exactly 5/4, not 1.2500000000000002).
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design

    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw ValidationError("rational with zero denominator");
        if (num_ < 0 || den_ < 0) throw ValidationError("negative rational not supported");
        reduce();
    }

    /// Accepts "2", "5/4" and "1.25" style spellings.
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool positive() const { return num_ > 0; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "5/4" when the denominator survives reduction, plain "5" otherwise.
    std::string to_string() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    void reduce() {
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace netdesign
