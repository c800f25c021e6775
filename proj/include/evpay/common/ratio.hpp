#pragma once

#include <cstdint>
#include <numeric>

#include "evpay/common/error.hpp"

namespace evpay {

// Exact non-negative rational. Battery fractions and tick durations are kept
// as rationals so billing arithmetic never touches floating point.
struct Ratio {
    int64_t num{0};
    int64_t den{1};

    static Ratio make(int64_t num, int64_t den) {
        if (den <= 0) {
            raise(Errc::invalid_value, "ratio denominator must be positive");
        }
        if (num < 0) {
            raise(Errc::invalid_value, "ratio numerator must be non-negative");
        }
        int64_t g = std::gcd(num, den);
        if (g == 0) g = 1;
        return Ratio{num / g, den / g};
    }

    int64_t floor_times(int64_t value) const {
        return static_cast<int64_t>((static_cast<__int128>(value) * num) / den);
    }

    int64_t ceil_times(int64_t value) const {
        __int128 prod = static_cast<__int128>(value) * num;
        return static_cast<int64_t>((prod + den - 1) / den);
    }

    // value < this * operand, exactly.
    bool greater_than_product(int64_t value, int64_t operand) const {
        return static_cast<__int128>(value) * den < static_cast<__int128>(num) * operand;
    }

    bool positive() const { return num > 0; }
};

}  // namespace evpay
