#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evpay/common/error.hpp"

namespace evpay {

using Bytes = std::vector<uint8_t>;
template <std::size_t N>
using ByteArray = std::array<uint8_t, N>;

std::string to_hex(std::span<const uint8_t> data);
Bytes from_hex(std::string_view hex);  // throws Errc::parse_error

template <std::size_t N>
ByteArray<N> array_from_hex(std::string_view hex) {
    Bytes raw = from_hex(hex);
    if (raw.size() != N) {
        raise(Errc::parse_error,
              "expected " + std::to_string(N) + " bytes, got " + std::to_string(raw.size()));
    }
    ByteArray<N> out{};
    std::copy(raw.begin(), raw.end(), out.begin());
    return out;
}

// Big-endian integer append, used by the canonical transaction encoding.
void append_u64_be(Bytes& out, uint64_t value);
void append_u32_be(Bytes& out, uint32_t value);

struct ArrayHash {
    template <std::size_t N>
    std::size_t operator()(const ByteArray<N>& a) const {
        // First bytes of our arrays are SHA-256 output or public keys; they
        // are already uniformly distributed.
        std::size_t h = 0;
        for (std::size_t i = 0; i < sizeof(std::size_t) && i < N; ++i) {
            h = (h << 8) | a[i];
        }
        return h;
    }
};

}  // namespace evpay
