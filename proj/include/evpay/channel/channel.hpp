#pragma once

#include <vector>

#include "evpay/ledger/ledger.hpp"

namespace evpay::channel {

using ledger::Address;
using ledger::Amount;
using ledger::Signature;
using ledger::TxId;
using ledger::Wallet;

// One co-signed balance split. Signatures cover
// channel_id || seq || balance_a || balance_b (big-endian fields).
struct ChannelState {
    TxId channel_id{};
    uint64_t seq{0};
    Amount balance_a{0};
    Amount balance_b{0};
    Signature sig_a{};
    Signature sig_b{};
};

Bytes state_signing_bytes(const ChannelState& state);
Signature sign_state(const ChannelState& state, const Wallet& party);
bool state_cosigned(const ChannelState& state, const Address& a, const Address& b);

enum class ChannelStatus { open, closed };

// Bidirectional payment channel. Two transactions ever reach the ledger:
// the escrow open and the settlement close; everything between is co-signed
// off-ledger state. History holds co-signed states only, so a forced close
// settles at history.back() of the verifiable suffix.
class Channel {
public:
    // Escrows `deposit` from each party into a synthetic address derived
    // from SHA-256(pub_a || pub_b || nonce). Attaches one channel_open
    // transaction; the ledger is untouched when this throws.
    static Channel open(ledger::Ledger& l, const Wallet& a, const Wallet& b, Amount deposit,
                        Rng& rng);

    // Next state with the payer debited; carries no signatures.
    ChannelState propose_update(const Address& payer, Amount amount) const;

    // Appends a fully co-signed state. seq must advance by exactly one and
    // the balances must still sum to the escrowed total.
    void apply_update(const ChannelState& state, const Signature& sig_a, const Signature& sig_b);

    // Cooperative close at the current state, issued by party a.
    TxId close(ledger::Ledger& l, Rng& rng);

    // Close at the highest state whose co-signatures verify, issued by
    // `closer` (must be a party). Ignores nothing on-chain: the settlement
    // transaction is identical in shape to a cooperative close.
    TxId force_close(ledger::Ledger& l, Rng& rng, const Address& closer);

    // --- queries ---
    ChannelStatus status() const { return status_; }
    const ChannelState& current() const { return history_.back(); }
    const std::vector<ChannelState>& history() const { return history_; }
    const TxId& open_tx() const { return open_tx_; }
    const TxId& channel_id() const { return open_tx_; }
    Amount deposit() const { return deposit_; }
    const Address& escrow() const { return escrow_; }
    const Address& party_a() const { return a_.address; }
    const Address& party_b() const { return b_.address; }
    const Wallet& wallet_a() const { return a_; }
    const Wallet& wallet_b() const { return b_; }

private:
    Channel() = default;

    TxId settle(ledger::Ledger& l, Rng& rng, const ChannelState& final_state,
                const Wallet& issuer);

    Wallet a_{};
    Wallet b_{};
    Address escrow_{};
    Amount deposit_{0};
    TxId open_tx_{};
    std::vector<ChannelState> history_;
    ChannelStatus status_{ChannelStatus::open};
};

}  // namespace evpay::channel
