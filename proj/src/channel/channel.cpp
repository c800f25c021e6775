#include "evpay/channel/channel.hpp"

namespace evpay::channel {

Bytes state_signing_bytes(const ChannelState& state) {
    Bytes out;
    out.reserve(32 + 24);
    out.insert(out.end(), state.channel_id.begin(), state.channel_id.end());
    append_u64_be(out, state.seq);
    append_u64_be(out, state.balance_a);
    append_u64_be(out, state.balance_b);
    return out;
}

Signature sign_state(const ChannelState& state, const Wallet& party) {
    return party.sign(state_signing_bytes(state));
}

bool state_cosigned(const ChannelState& state, const Address& a, const Address& b) {
    Bytes msg = state_signing_bytes(state);
    return ledger::signature_valid(msg, state.sig_a, a) &&
           ledger::signature_valid(msg, state.sig_b, b);
}

Channel Channel::open(ledger::Ledger& l, const Wallet& a, const Wallet& b, Amount deposit,
                      Rng& rng) {
    if (deposit == 0) {
        raise(Errc::zero_deposit, "channel deposit must be positive");
    }
    if (a.address == b.address) {
        raise(Errc::invalid_value, "channel parties must be distinct");
    }
    const auto need = static_cast<int64_t>(deposit);
    if (l.balance_of(a.address, ledger::TxView::pending) < need ||
        l.balance_of(b.address, ledger::TxView::pending) < need) {
        raise(Errc::insufficient_balance, "a party cannot fund the deposit");
    }

    Channel ch;
    ch.a_ = a;
    ch.b_ = b;
    ch.deposit_ = deposit;

    // Escrow address: hash of both parties plus a fresh nonce, drawn before
    // mining (the proof-of-work nonce is not known until the transfers,
    // including the escrow target, are fixed).
    uint64_t escrow_nonce = rng.next();
    Bytes material;
    material.insert(material.end(), a.address.begin(), a.address.end());
    material.insert(material.end(), b.address.begin(), b.address.end());
    append_u64_be(material, escrow_nonce);
    ch.escrow_ = sha256(material);

    ledger::Transaction open_tx = ledger::build_transaction(
        l, a, ledger::TxKind::channel_open,
        {ledger::Transfer{a.address, ch.escrow_, deposit},
         ledger::Transfer{b.address, ch.escrow_, deposit}},
        rng);
    l.attach(open_tx);
    ch.open_tx_ = open_tx.id;

    ChannelState state0;
    state0.channel_id = open_tx.id;
    state0.seq = 0;
    state0.balance_a = deposit;
    state0.balance_b = deposit;
    state0.sig_a = sign_state(state0, a);
    state0.sig_b = sign_state(state0, b);
    ch.history_.push_back(state0);
    return ch;
}

ChannelState Channel::propose_update(const Address& payer, Amount amount) const {
    if (status_ == ChannelStatus::closed) {
        raise(Errc::channel_closed, "channel is closed");
    }
    const ChannelState& cur = history_.back();
    ChannelState next;
    next.channel_id = cur.channel_id;
    next.seq = cur.seq + 1;
    if (payer == a_.address) {
        if (amount > cur.balance_a) {
            raise(Errc::overdraw, "payment exceeds party a balance");
        }
        next.balance_a = cur.balance_a - amount;
        next.balance_b = cur.balance_b + amount;
    } else if (payer == b_.address) {
        if (amount > cur.balance_b) {
            raise(Errc::overdraw, "payment exceeds party b balance");
        }
        next.balance_a = cur.balance_a + amount;
        next.balance_b = cur.balance_b - amount;
    } else {
        raise(Errc::unknown_party, "payer is not a channel party");
    }
    return next;
}

void Channel::apply_update(const ChannelState& state, const Signature& sig_a,
                           const Signature& sig_b) {
    if (status_ == ChannelStatus::closed) {
        raise(Errc::channel_closed, "channel is closed");
    }
    const ChannelState& cur = history_.back();
    if (state.seq != cur.seq + 1) {
        raise(Errc::seq_gap, "expected seq " + std::to_string(cur.seq + 1) + ", got " +
                                 std::to_string(state.seq));
    }
    if (state.balance_a + state.balance_b != 2 * deposit_) {
        raise(Errc::sum_mismatch, "balances must sum to the escrowed total");
    }
    if (state.channel_id != open_tx_) {
        raise(Errc::unknown_id, "state belongs to a different channel");
    }
    ChannelState signed_state = state;
    signed_state.sig_a = sig_a;
    signed_state.sig_b = sig_b;
    if (!state_cosigned(signed_state, a_.address, b_.address)) {
        raise(Errc::bad_signature, "state is not co-signed by both parties");
    }
    history_.push_back(signed_state);
}

TxId Channel::close(ledger::Ledger& l, Rng& rng) {
    if (status_ == ChannelStatus::closed) {
        raise(Errc::channel_closed, "channel is closed");
    }
    const ChannelState& final_state = history_.back();
    if (!state_cosigned(final_state, a_.address, b_.address)) {
        raise(Errc::not_cosigned, "current state lacks a valid co-signature");
    }
    return settle(l, rng, final_state, a_);
}

TxId Channel::force_close(ledger::Ledger& l, Rng& rng, const Address& closer) {
    if (status_ == ChannelStatus::closed) {
        raise(Errc::channel_closed, "channel is closed");
    }
    if (closer != a_.address && closer != b_.address) {
        raise(Errc::unknown_party, "closer is not a channel party");
    }
    // Walk back to the highest state whose co-signatures verify. State 0 is
    // signed by both parties at open, so the scan always terminates.
    const ChannelState* final_state = nullptr;
    for (auto it = history_.rbegin(); it != history_.rend(); ++it) {
        if (state_cosigned(*it, a_.address, b_.address)) {
            final_state = &*it;
            break;
        }
    }
    if (final_state == nullptr) {
        raise(Errc::not_cosigned, "no co-signed state in history");
    }
    return settle(l, rng, *final_state, closer == a_.address ? a_ : b_);
}

TxId Channel::settle(ledger::Ledger& l, Rng& rng, const ChannelState& final_state,
                     const Wallet& issuer) {
    ledger::Transaction close_tx = ledger::build_transaction(
        l, issuer, ledger::TxKind::channel_close,
        {ledger::Transfer{escrow_, a_.address, final_state.balance_a},
         ledger::Transfer{escrow_, b_.address, final_state.balance_b}},
        rng);
    l.attach(close_tx);
    status_ = ChannelStatus::closed;
    return close_tx.id;
}

}  // namespace evpay::channel
