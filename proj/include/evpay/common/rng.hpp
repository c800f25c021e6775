#pragma once

#include <cstdint>
#include <span>

namespace evpay {

// xoshiro256** seeded through splitmix64. The exact algorithm and draw
// discipline are documented in docs/determinism.md; every consumer of
// randomness in the simulator goes through this class so that runs are
// reproducible bit-for-bit from the scenario seed.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t x = seed;
        for (auto& word : state_) {
            word = splitmix64(x);
        }
    }

    uint64_t next() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Unbiased uniform draw from [0, n). Rejection sampling: values below
    // 2^64 mod n are discarded so the remaining range splits evenly.
    uint64_t uniform_below(uint64_t n) {
        const uint64_t threshold = (-n) % n;
        uint64_t x;
        do {
            x = next();
        } while (x < threshold);
        return x % n;
    }

    // Fills the span with consecutive next() words, big-endian, truncating
    // the final word if the length is not a multiple of 8.
    void fill_bytes(std::span<uint8_t> out) {
        std::size_t i = 0;
        while (i < out.size()) {
            uint64_t word = next();
            for (int shift = 56; shift >= 0 && i < out.size(); shift -= 8) {
                out[i++] = static_cast<uint8_t>(word >> shift);
            }
        }
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static uint64_t splitmix64(uint64_t& x) {
        uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t state_[4];
};

}  // namespace evpay
