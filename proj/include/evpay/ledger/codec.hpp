#pragma once

#include <nlohmann/json_fwd.hpp>

#include "evpay/ledger/types.hpp"

// Canonical transaction encodings. Two byte strings matter:
//
//   signing bytes: kind, issuer, approves, transfers, timestamp
//   id bytes:      signing bytes followed by nonce and signature
//
// The transaction id is SHA-256 over the id bytes; the issuer signs the
// signing bytes, so the nonce can be searched after signing without
// invalidating the signature. Exact field layout is in docs/determinism.md.

namespace evpay::ledger {

Bytes tx_signing_bytes(const Transaction& tx);
Bytes tx_id_bytes(const Transaction& tx);
TxId transaction_digest(const Transaction& tx);

// Leading-zero-bit proof-of-work check on a transaction id.
bool check_pow(const TxId& id, unsigned difficulty_bits);

void sign_transaction(Transaction& tx, const Wallet& issuer);
bool verify_tx_signature(const Transaction& tx);  // genesis is exempt

// JSONL serialization, fixed field order:
// id, kind, issuer, approves, transfers, timestamp, nonce, signature.
nlohmann::ordered_json tx_to_json(const Transaction& tx);
Transaction tx_from_json(const nlohmann::ordered_json& j);  // throws Errc::parse_error
std::string tx_to_jsonl_line(const Transaction& tx);
Transaction tx_from_jsonl_line(std::string_view line);

}  // namespace evpay::ledger
