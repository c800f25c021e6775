#include "evpay/common/crypto.hpp"

#include <sodium.h>

#include <mutex>
#include <stdexcept>

namespace evpay {

namespace {
void ensure_sodium() {
    static std::once_flag once;
    std::call_once(once, [] {
        if (sodium_init() < 0) {
            throw std::runtime_error("libsodium initialization failed");
        }
    });
}
}  // namespace

Digest sha256(std::span<const uint8_t> data) {
    ensure_sodium();
    Digest out{};
    crypto_hash_sha256(out.data(), data.data(), data.size());
    return out;
}

Keypair keypair_from_seed(const ByteArray<32>& seed) {
    ensure_sodium();
    Keypair kp{};
    crypto_sign_seed_keypair(kp.pub.data(), kp.sec.data(), seed.data());
    return kp;
}

Sig sign_detached(std::span<const uint8_t> message, const SecretKey& sec) {
    ensure_sodium();
    Sig sig{};
    crypto_sign_detached(sig.data(), nullptr, message.data(), message.size(), sec.data());
    return sig;
}

bool verify_detached(std::span<const uint8_t> message, const Sig& sig, const PublicKey& pub) {
    ensure_sodium();
    return crypto_sign_verify_detached(sig.data(), message.data(), message.size(), pub.data()) == 0;
}

}  // namespace evpay
