#pragma once

#include <span>

#include "evpay/common/hex.hpp"

namespace evpay {

using Digest = ByteArray<32>;
using PublicKey = ByteArray<32>;
using SecretKey = ByteArray<64>;
using Sig = ByteArray<64>;

Digest sha256(std::span<const uint8_t> data);

// Ed25519 (deterministic signatures, 32-byte public keys).
struct Keypair {
    PublicKey pub;
    SecretKey sec;
};

Keypair keypair_from_seed(const ByteArray<32>& seed);
Sig sign_detached(std::span<const uint8_t> message, const SecretKey& sec);
bool verify_detached(std::span<const uint8_t> message, const Sig& sig, const PublicKey& pub);

}  // namespace evpay
