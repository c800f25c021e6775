#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "evpay/common/error.hpp"
#include "evpay/common/rng.hpp"
#include "evpay/ledger/codec.hpp"
#include "evpay/ledger/types.hpp"

namespace evpay::ledger {

enum class TxView { confirmed, pending };
enum class TxStatus { confirmed, pending };

struct AttachReport {
    TxId id{};
    std::size_t tip_count{0};  // tips after the attachment
};

enum class FindingKind {
    cycle,
    unknown_reference,
    approval_rule,
    bad_pow,
    bad_signature,
    id_mismatch,
    malformed_transfer,
    conservation_mismatch,
    negative_balance,
    genesis_rule,
};

std::string_view to_string(FindingKind kind);

struct Finding {
    FindingKind kind;
    TxId tx{};  // zero when the finding is ledger-global
    std::string detail;
};

struct ValidationReport {
    std::vector<Finding> findings;
    bool ok() const { return findings.empty(); }
};

// Tangle-style DAG ledger. Single-writer; queries are const. Balances use
// an account model: a transfer debits `from` and credits `to`, genesis
// transfers mint (credit only).
class Ledger {
public:
    // Builds a ledger holding one mined genesis transaction.
    static Ledger create_genesis(const std::vector<std::pair<Address, int64_t>>& allocations,
                                 unsigned difficulty_bits);

    // Draws two current tips uniformly. With one tip both results equal it;
    // with more the two are distinct. Consumes rng deterministically
    // (trunk index first, then branch).
    std::pair<TxId, TxId> select_tips(Rng& rng) const;

    // Validates and inserts a sealed transaction. Throws on rejection;
    // the ledger is unchanged when it throws.
    AttachReport attach(const Transaction& tx);

    TxStatus confirmation_status(const TxId& id) const;  // throws Errc::unknown_id

    // Confirmed view counts genesis plus transactions with >= 2 distinct
    // approvers; pending view counts everything attached.
    int64_t balance_of(const Address& address, TxView view) const;

    ValidationReport validate() const;

    // --- queries ---
    bool contains(const TxId& id) const { return transactions_.count(id) != 0; }
    const Transaction& at(const TxId& id) const;
    const std::vector<TxId>& order() const { return order_; }
    std::vector<TxId> tips_sorted() const { return {tips_.begin(), tips_.end()}; }
    std::size_t tip_count() const { return tips_.size(); }
    std::size_t size() const { return order_.size(); }
    unsigned difficulty() const { return difficulty_; }
    const TxId& genesis_id() const { return genesis_id_; }
    std::size_t approver_count(const TxId& id) const;
    int64_t total_supply() const { return total_supply_; }
    std::vector<std::pair<Address, int64_t>> balances(TxView view) const;  // sorted by address

    // Simulation clock; new transactions are stamped with it.
    int64_t clock() const { return clock_; }
    void set_clock(int64_t tick) { clock_ = tick; }

    // --- serialization (JSONL, one transaction per line, insertion order) ---
    std::string to_jsonl() const;
    // Raw load for auditing: structural parse only, no semantic checks
    // (validate() reports those as findings).
    static Ledger from_jsonl(std::string_view text, unsigned difficulty_bits);

private:
    Ledger() = default;

    void insert_unchecked(const Transaction& tx);
    void apply_balances(const Transaction& tx);

    std::unordered_map<TxId, Transaction, ArrayHash> transactions_;
    std::unordered_map<TxId, std::set<TxId>, ArrayHash> approvers_;
    std::set<TxId> tips_;
    std::vector<TxId> order_;
    std::unordered_map<Address, int64_t, ArrayHash> pending_balances_;
    TxId genesis_id_{};
    unsigned difficulty_{0};
    int64_t clock_{0};
    int64_t total_supply_{0};
};

// Deterministic nonce search starting at zero. Ignores tx.nonce and tx.id.
// Difficulty is capped at 24 bits.
uint64_t mine_pow(const Transaction& draft, unsigned difficulty_bits);

// Fills nonce and id so the transaction passes the ledger difficulty.
void seal_transaction(Transaction& tx, unsigned difficulty_bits);

// Convenience: select tips, stamp with the ledger clock, sign, seal.
Transaction build_transaction(const Ledger& ledger, const Wallet& issuer, TxKind kind,
                              std::vector<Transfer> transfers, Rng& rng);

}  // namespace evpay::ledger
