#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "evpay/common/crypto.hpp"
#include "evpay/common/hex.hpp"
#include "evpay/common/rng.hpp"

namespace evpay::ledger {

using Address = ByteArray<32>;  // Ed25519 public key of a wallet
using TxId = ByteArray<32>;     // SHA-256 of the canonical transaction encoding
using Signature = ByteArray<64>;
using Amount = uint64_t;        // micro-tokens

// All-zero address: genesis issuer and mint source. No secret key exists
// for it.
inline constexpr Address kNullAddress{};

struct Wallet {
    Address address{};
    SecretKey secret{};

    static Wallet from_seed(const ByteArray<32>& seed);
    static Wallet random(Rng& rng);

    Signature sign(std::span<const uint8_t> message) const {
        return sign_detached(message, secret);
    }
};

inline bool signature_valid(std::span<const uint8_t> message, const Signature& sig,
                            const Address& signer) {
    return verify_detached(message, sig, signer);
}

struct Transfer {
    Address from{};
    Address to{};
    Amount amount{0};
};

enum class TxKind : uint8_t {
    genesis = 0,
    plain = 1,
    channel_open = 2,
    channel_close = 3,
};

std::string_view to_string(TxKind kind);
TxKind tx_kind_from_string(std::string_view name);  // throws Errc::parse_error

struct Transaction {
    TxId id{};
    TxKind kind{TxKind::plain};
    Address issuer{};
    std::vector<TxId> approves;  // empty for genesis, otherwise [trunk, branch]
    std::vector<Transfer> transfers;
    int64_t timestamp{0};  // simulation tick
    uint64_t nonce{0};
    Signature signature{};
};

}  // namespace evpay::ledger
