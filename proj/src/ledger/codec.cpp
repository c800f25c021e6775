#include "evpay/ledger/codec.hpp"

#include <nlohmann/json.hpp>

#include "evpay/common/error.hpp"

namespace evpay::ledger {

using nlohmann::ordered_json;

std::string_view to_string(TxKind kind) {
    switch (kind) {
        case TxKind::genesis: return "genesis";
        case TxKind::plain: return "plain";
        case TxKind::channel_open: return "channel_open";
        case TxKind::channel_close: return "channel_close";
    }
    return "unknown";
}

TxKind tx_kind_from_string(std::string_view name) {
    if (name == "genesis") return TxKind::genesis;
    if (name == "plain") return TxKind::plain;
    if (name == "channel_open") return TxKind::channel_open;
    if (name == "channel_close") return TxKind::channel_close;
    raise(Errc::parse_error, "unknown transaction kind '" + std::string(name) + "'");
}

Wallet Wallet::from_seed(const ByteArray<32>& seed) {
    Keypair kp = keypair_from_seed(seed);
    return Wallet{kp.pub, kp.sec};
}

Wallet Wallet::random(Rng& rng) {
    ByteArray<32> seed{};
    rng.fill_bytes(seed);
    return from_seed(seed);
}

Bytes tx_signing_bytes(const Transaction& tx) {
    Bytes out;
    out.reserve(1 + 32 + 1 + tx.approves.size() * 32 + 8 + 4 + tx.transfers.size() * 72);
    out.push_back(static_cast<uint8_t>(tx.kind));
    out.insert(out.end(), tx.issuer.begin(), tx.issuer.end());
    out.push_back(static_cast<uint8_t>(tx.approves.size()));
    for (const TxId& ref : tx.approves) {
        out.insert(out.end(), ref.begin(), ref.end());
    }
    append_u64_be(out, static_cast<uint64_t>(tx.timestamp));
    append_u32_be(out, static_cast<uint32_t>(tx.transfers.size()));
    for (const Transfer& t : tx.transfers) {
        out.insert(out.end(), t.from.begin(), t.from.end());
        out.insert(out.end(), t.to.begin(), t.to.end());
        append_u64_be(out, t.amount);
    }
    return out;
}

Bytes tx_id_bytes(const Transaction& tx) {
    Bytes out = tx_signing_bytes(tx);
    append_u64_be(out, tx.nonce);
    out.insert(out.end(), tx.signature.begin(), tx.signature.end());
    return out;
}

TxId transaction_digest(const Transaction& tx) {
    return sha256(tx_id_bytes(tx));
}

bool check_pow(const TxId& id, unsigned difficulty_bits) {
    unsigned remaining = difficulty_bits;
    for (uint8_t byte : id) {
        if (remaining >= 8) {
            if (byte != 0) return false;
            remaining -= 8;
        } else if (remaining > 0) {
            return (byte >> (8 - remaining)) == 0;
        } else {
            break;
        }
    }
    return remaining == 0;
}

void sign_transaction(Transaction& tx, const Wallet& issuer) {
    tx.issuer = issuer.address;
    Bytes msg = tx_signing_bytes(tx);
    tx.signature = issuer.sign(msg);
}

bool verify_tx_signature(const Transaction& tx) {
    if (tx.kind == TxKind::genesis) {
        return true;  // minted, not signed
    }
    Bytes msg = tx_signing_bytes(tx);
    return signature_valid(msg, tx.signature, tx.issuer);
}

ordered_json tx_to_json(const Transaction& tx) {
    ordered_json j;
    j["id"] = to_hex(tx.id);
    j["kind"] = std::string(to_string(tx.kind));
    j["issuer"] = to_hex(tx.issuer);
    ordered_json approves = ordered_json::array();
    for (const TxId& ref : tx.approves) {
        approves.push_back(to_hex(ref));
    }
    j["approves"] = std::move(approves);
    ordered_json transfers = ordered_json::array();
    for (const Transfer& t : tx.transfers) {
        ordered_json entry;
        entry["from"] = to_hex(t.from);
        entry["to"] = to_hex(t.to);
        entry["amount"] = t.amount;
        transfers.push_back(std::move(entry));
    }
    j["transfers"] = std::move(transfers);
    j["timestamp"] = tx.timestamp;
    j["nonce"] = tx.nonce;
    j["signature"] = to_hex(tx.signature);
    return j;
}

namespace {
const ordered_json& require_field(const ordered_json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) {
        raise(Errc::parse_error, std::string("missing field '") + name + "'");
    }
    return *it;
}
}  // namespace

Transaction tx_from_json(const ordered_json& j) {
    if (!j.is_object()) {
        raise(Errc::parse_error, "transaction record is not an object");
    }
    Transaction tx;
    try {
        tx.id = array_from_hex<32>(require_field(j, "id").get<std::string>());
        tx.kind = tx_kind_from_string(require_field(j, "kind").get<std::string>());
        tx.issuer = array_from_hex<32>(require_field(j, "issuer").get<std::string>());
        for (const auto& ref : require_field(j, "approves")) {
            tx.approves.push_back(array_from_hex<32>(ref.get<std::string>()));
        }
        for (const auto& entry : require_field(j, "transfers")) {
            Transfer t;
            t.from = array_from_hex<32>(require_field(entry, "from").get<std::string>());
            t.to = array_from_hex<32>(require_field(entry, "to").get<std::string>());
            const auto& amount = require_field(entry, "amount");
            if (!amount.is_number_unsigned()) {
                raise(Errc::parse_error, "transfer amount must be a non-negative integer");
            }
            t.amount = amount.get<uint64_t>();
            tx.transfers.push_back(t);
        }
        tx.timestamp = require_field(j, "timestamp").get<int64_t>();
        const auto& nonce = require_field(j, "nonce");
        if (!nonce.is_number_unsigned()) {
            raise(Errc::parse_error, "nonce must be a non-negative integer");
        }
        tx.nonce = nonce.get<uint64_t>();
        tx.signature = array_from_hex<64>(require_field(j, "signature").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        raise(Errc::parse_error, std::string("bad transaction record: ") + e.what());
    }
    if (tx.approves.size() != 0 && tx.approves.size() != 2) {
        raise(Errc::parse_error, "approves must hold zero or two references");
    }
    return tx;
}

std::string tx_to_jsonl_line(const Transaction& tx) {
    return tx_to_json(tx).dump();
}

Transaction tx_from_jsonl_line(std::string_view line) {
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded()) {
        raise(Errc::parse_error, "invalid JSON transaction line");
    }
    return tx_from_json(j);
}

}  // namespace evpay::ledger
