#include "evpay/ledger/ledger.hpp"

#include <algorithm>
#include <sstream>

namespace evpay::ledger {

namespace {
constexpr unsigned kMaxDifficulty = 24;

std::string short_hex(const TxId& id) { return to_hex(id).substr(0, 12); }
}  // namespace

std::string_view to_string(FindingKind kind) {
    switch (kind) {
        case FindingKind::cycle: return "Cycle";
        case FindingKind::unknown_reference: return "UnknownReference";
        case FindingKind::approval_rule: return "ApprovalRule";
        case FindingKind::bad_pow: return "BadPoW";
        case FindingKind::bad_signature: return "BadSignature";
        case FindingKind::id_mismatch: return "IdMismatch";
        case FindingKind::malformed_transfer: return "MalformedTransfer";
        case FindingKind::conservation_mismatch: return "ConservationMismatch";
        case FindingKind::negative_balance: return "NegativeBalance";
        case FindingKind::genesis_rule: return "GenesisRule";
    }
    return "Unknown";
}

uint64_t mine_pow(const Transaction& draft, unsigned difficulty_bits) {
    if (difficulty_bits > kMaxDifficulty) {
        raise(Errc::difficulty_too_high,
              "difficulty " + std::to_string(difficulty_bits) + " exceeds cap of " +
                  std::to_string(kMaxDifficulty));
    }
    Transaction work = draft;
    Bytes base = tx_signing_bytes(work);
    // Re-encode only the tail (nonce + signature) per candidate.
    const std::size_t prefix = base.size();
    base.resize(prefix + 8 + work.signature.size());
    std::copy(work.signature.begin(), work.signature.end(), base.begin() + prefix + 8);
    for (uint64_t nonce = 0;; ++nonce) {
        for (int i = 0; i < 8; ++i) {
            base[prefix + i] = static_cast<uint8_t>(nonce >> (56 - 8 * i));
        }
        TxId digest = sha256(base);
        if (check_pow(digest, difficulty_bits)) {
            return nonce;
        }
    }
}

void seal_transaction(Transaction& tx, unsigned difficulty_bits) {
    tx.nonce = mine_pow(tx, difficulty_bits);
    tx.id = transaction_digest(tx);
}

Transaction build_transaction(const Ledger& ledger, const Wallet& issuer, TxKind kind,
                              std::vector<Transfer> transfers, Rng& rng) {
    Transaction tx;
    tx.kind = kind;
    tx.transfers = std::move(transfers);
    tx.timestamp = ledger.clock();
    auto [trunk, branch] = ledger.select_tips(rng);
    tx.approves = {trunk, branch};
    sign_transaction(tx, issuer);
    seal_transaction(tx, ledger.difficulty());
    return tx;
}

Ledger Ledger::create_genesis(const std::vector<std::pair<Address, int64_t>>& allocations,
                              unsigned difficulty_bits) {
    if (difficulty_bits > kMaxDifficulty) {
        raise(Errc::difficulty_too_high, "difficulty exceeds cap");
    }
    std::set<Address> seen;
    for (const auto& [address, amount] : allocations) {
        if (amount < 0) {
            raise(Errc::negative_amount, "genesis allocation is negative");
        }
        if (!seen.insert(address).second) {
            raise(Errc::duplicate_address, "genesis allocation repeats " + to_hex(address));
        }
    }

    Ledger ledger;
    ledger.difficulty_ = difficulty_bits;

    Transaction genesis;
    genesis.kind = TxKind::genesis;
    genesis.issuer = kNullAddress;
    genesis.timestamp = 0;
    for (const auto& [address, amount] : allocations) {
        genesis.transfers.push_back(Transfer{kNullAddress, address, static_cast<Amount>(amount)});
    }
    seal_transaction(genesis, difficulty_bits);

    ledger.genesis_id_ = genesis.id;
    ledger.insert_unchecked(genesis);
    return ledger;
}

std::pair<TxId, TxId> Ledger::select_tips(Rng& rng) const {
    std::vector<TxId> tips(tips_.begin(), tips_.end());
    const std::size_t n = tips.size();
    if (n == 0) {
        raise(Errc::invalid_value, "ledger has no tips");
    }
    std::size_t i = static_cast<std::size_t>(rng.uniform_below(n));
    if (n == 1) {
        return {tips[0], tips[0]};
    }
    std::size_t j = static_cast<std::size_t>(rng.uniform_below(n - 1));
    if (j >= i) ++j;
    return {tips[i], tips[j]};
}

AttachReport Ledger::attach(const Transaction& tx) {
    if (transactions_.count(tx.id)) {
        raise(Errc::duplicate_id, "transaction " + short_hex(tx.id) + " already attached");
    }
    if (tx.kind == TxKind::genesis) {
        raise(Errc::invalid_kind, "genesis can only be created, not attached");
    }
    if (tx.approves.size() != 2) {
        raise(Errc::unknown_reference, "expected two approval references");
    }
    for (const TxId& ref : tx.approves) {
        if (!transactions_.count(ref)) {
            raise(Errc::unknown_reference, "reference " + short_hex(ref) + " not found");
        }
    }
    if (tx.approves[0] == tx.approves[1] &&
        !(tips_.size() == 1 && *tips_.begin() == tx.approves[0])) {
        raise(Errc::approval_rule, "equal references allowed only when a single tip exists");
    }

    for (const Transfer& t : tx.transfers) {
        if (t.from == t.to) {
            raise(Errc::malformed_channel_tx, "transfer from an address to itself");
        }
    }
    switch (tx.kind) {
        case TxKind::plain:
            for (const Transfer& t : tx.transfers) {
                if (t.from != tx.issuer) {
                    raise(Errc::unauthorized_transfer,
                          "plain transaction spends from a foreign address");
                }
            }
            break;
        case TxKind::channel_open: {
            if (tx.transfers.size() != 2 || tx.transfers[0].to != tx.transfers[1].to ||
                tx.transfers[0].amount != tx.transfers[1].amount ||
                tx.transfers[0].amount == 0 || tx.transfers[0].from == tx.transfers[1].from) {
                raise(Errc::malformed_channel_tx,
                      "channel open must escrow equal deposits from two parties");
            }
            if (tx.issuer != tx.transfers[0].from && tx.issuer != tx.transfers[1].from) {
                raise(Errc::malformed_channel_tx, "channel open issuer is not a party");
            }
            break;
        }
        case TxKind::channel_close: {
            if (tx.transfers.empty()) {
                raise(Errc::malformed_channel_tx, "channel close pays out nothing");
            }
            bool issuer_is_recipient = false;
            for (const Transfer& t : tx.transfers) {
                if (t.from != tx.transfers[0].from) {
                    raise(Errc::malformed_channel_tx, "channel close spends several escrows");
                }
                if (t.to == tx.issuer) issuer_is_recipient = true;
            }
            if (!issuer_is_recipient) {
                raise(Errc::malformed_channel_tx, "channel close issuer is not a party");
            }
            break;
        }
        case TxKind::genesis:
            break;  // unreachable, rejected above
    }

    if (transaction_digest(tx) != tx.id) {
        raise(Errc::id_mismatch, "transaction id does not match its content digest");
    }
    if (!check_pow(tx.id, difficulty_)) {
        raise(Errc::bad_pow, "id of " + short_hex(tx.id) + " fails difficulty " +
                                 std::to_string(difficulty_));
    }
    if (!verify_tx_signature(tx)) {
        raise(Errc::bad_signature, "issuer signature does not verify");
    }

    // Net effect per address against the pending view.
    std::map<Address, int64_t> net;
    for (const Transfer& t : tx.transfers) {
        net[t.from] -= static_cast<int64_t>(t.amount);
        net[t.to] += static_cast<int64_t>(t.amount);
    }
    for (const auto& [address, delta] : net) {
        if (delta < 0) {
            auto it = pending_balances_.find(address);
            int64_t have = it == pending_balances_.end() ? 0 : it->second;
            if (have + delta < 0) {
                raise(Errc::insufficient_balance,
                      "pending balance of " + to_hex(address).substr(0, 12) + " would go negative");
            }
        }
    }

    insert_unchecked(tx);
    return AttachReport{tx.id, tips_.size()};
}

void Ledger::insert_unchecked(const Transaction& tx) {
    transactions_.emplace(tx.id, tx);
    order_.push_back(tx.id);
    approvers_.try_emplace(tx.id);
    for (const TxId& ref : tx.approves) {
        approvers_[ref].insert(tx.id);
        tips_.erase(ref);
    }
    tips_.insert(tx.id);
    apply_balances(tx);
}

void Ledger::apply_balances(const Transaction& tx) {
    for (const Transfer& t : tx.transfers) {
        if (tx.kind != TxKind::genesis) {
            pending_balances_[t.from] -= static_cast<int64_t>(t.amount);
        } else {
            total_supply_ += static_cast<int64_t>(t.amount);
        }
        pending_balances_[t.to] += static_cast<int64_t>(t.amount);
    }
}

TxStatus Ledger::confirmation_status(const TxId& id) const {
    auto it = transactions_.find(id);
    if (it == transactions_.end()) {
        raise(Errc::unknown_id, "no transaction " + short_hex(id));
    }
    if (it->second.kind == TxKind::genesis) {
        return TxStatus::confirmed;
    }
    return approver_count(id) >= 2 ? TxStatus::confirmed : TxStatus::pending;
}

std::size_t Ledger::approver_count(const TxId& id) const {
    auto it = approvers_.find(id);
    return it == approvers_.end() ? 0 : it->second.size();
}

int64_t Ledger::balance_of(const Address& address, TxView view) const {
    if (view == TxView::pending) {
        auto it = pending_balances_.find(address);
        return it == pending_balances_.end() ? 0 : it->second;
    }
    int64_t balance = 0;
    for (const TxId& id : order_) {
        const Transaction& tx = transactions_.at(id);
        bool counts = tx.kind == TxKind::genesis || approver_count(id) >= 2;
        if (!counts) continue;
        for (const Transfer& t : tx.transfers) {
            if (t.to == address) balance += static_cast<int64_t>(t.amount);
            if (t.from == address && tx.kind != TxKind::genesis) {
                balance -= static_cast<int64_t>(t.amount);
            }
        }
    }
    return balance;
}

std::vector<std::pair<Address, int64_t>> Ledger::balances(TxView view) const {
    std::map<Address, int64_t> acc;
    for (const TxId& id : order_) {
        const Transaction& tx = transactions_.at(id);
        bool counts = view == TxView::pending || tx.kind == TxKind::genesis ||
                      approver_count(id) >= 2;
        if (!counts) continue;
        for (const Transfer& t : tx.transfers) {
            acc[t.to] += static_cast<int64_t>(t.amount);
            if (tx.kind != TxKind::genesis) {
                acc[t.from] -= static_cast<int64_t>(t.amount);
            }
        }
    }
    return {acc.begin(), acc.end()};
}

const Transaction& Ledger::at(const TxId& id) const {
    auto it = transactions_.find(id);
    if (it == transactions_.end()) {
        raise(Errc::unknown_id, "no transaction " + short_hex(id));
    }
    return it->second;
}

ValidationReport Ledger::validate() const {
    ValidationReport report;
    auto add = [&](FindingKind kind, const TxId& tx, std::string detail) {
        report.findings.push_back(Finding{kind, tx, std::move(detail)});
    };

    // Genesis rule: exactly one, with empty approves.
    std::size_t genesis_count = 0;
    for (const TxId& id : order_) {
        const Transaction& tx = transactions_.at(id);
        if (tx.kind == TxKind::genesis) {
            ++genesis_count;
            if (!tx.approves.empty()) {
                add(FindingKind::genesis_rule, id, "genesis carries approval references");
            }
        } else if (tx.approves.size() != 2) {
            add(FindingKind::approval_rule, id, "expected two approval references");
        }
    }
    if (genesis_count != 1) {
        add(FindingKind::genesis_rule, TxId{},
            "ledger holds " + std::to_string(genesis_count) + " genesis transactions");
    }

    // Reference integrity.
    for (const TxId& id : order_) {
        for (const TxId& ref : transactions_.at(id).approves) {
            if (!transactions_.count(ref)) {
                add(FindingKind::unknown_reference, id,
                    "references missing transaction " + short_hex(ref));
            }
        }
    }

    // Acyclicity via Kahn's algorithm over approval edges.
    {
        std::unordered_map<TxId, std::size_t, ArrayHash> out_degree;
        std::unordered_map<TxId, std::vector<TxId>, ArrayHash> dependents;
        for (const TxId& id : order_) {
            std::size_t degree = 0;
            for (const TxId& ref : transactions_.at(id).approves) {
                if (transactions_.count(ref)) {
                    dependents[ref].push_back(id);
                    ++degree;
                }
            }
            out_degree[id] = degree;
        }
        std::vector<TxId> queue;
        for (const TxId& id : order_) {
            if (out_degree[id] == 0) queue.push_back(id);
        }
        std::size_t visited = 0;
        while (!queue.empty()) {
            TxId id = queue.back();
            queue.pop_back();
            ++visited;
            for (const TxId& dep : dependents[id]) {
                if (--out_degree[dep] == 0) queue.push_back(dep);
            }
        }
        if (visited != order_.size()) {
            add(FindingKind::cycle, TxId{}, "approval graph contains a cycle");
        }
    }

    // Per-transaction integrity. PoW is checked on the stored id; the digest
    // recomputation is a separate finding so tampered content and tampered
    // work are told apart.
    for (const TxId& id : order_) {
        const Transaction& tx = transactions_.at(id);
        if (transaction_digest(tx) != tx.id) {
            add(FindingKind::id_mismatch, id, "stored id does not match content digest");
        }
        if (!check_pow(tx.id, difficulty_)) {
            add(FindingKind::bad_pow, id,
                "id fails difficulty " + std::to_string(difficulty_));
        }
        if (!verify_tx_signature(tx)) {
            add(FindingKind::bad_signature, id, "issuer signature does not verify");
        }
        for (const Transfer& t : tx.transfers) {
            if (t.from == t.to) {
                add(FindingKind::malformed_transfer, id, "transfer from an address to itself");
            }
        }
    }

    // Conservation: replaying every present transaction must reproduce the
    // minted supply, with no address driven negative.
    {
        std::map<Address, int64_t> replay;
        int64_t minted = 0;
        for (const TxId& id : order_) {
            const Transaction& tx = transactions_.at(id);
            for (const Transfer& t : tx.transfers) {
                if (tx.kind == TxKind::genesis) {
                    minted += static_cast<int64_t>(t.amount);
                } else {
                    replay[t.from] -= static_cast<int64_t>(t.amount);
                }
                replay[t.to] += static_cast<int64_t>(t.amount);
            }
        }
        int64_t sum = 0;
        for (const auto& [address, balance] : replay) {
            sum += balance;
            if (balance < 0) {
                add(FindingKind::negative_balance, TxId{},
                    "address " + to_hex(address).substr(0, 12) + " replays to " +
                        std::to_string(balance));
            }
        }
        if (sum != minted) {
            add(FindingKind::conservation_mismatch, TxId{},
                "balances sum to " + std::to_string(sum) + ", minted " + std::to_string(minted));
        }
    }

    return report;
}

std::string Ledger::to_jsonl() const {
    std::string out;
    for (const TxId& id : order_) {
        out += tx_to_jsonl_line(transactions_.at(id));
        out += '\n';
    }
    return out;
}

Ledger Ledger::from_jsonl(std::string_view text, unsigned difficulty_bits) {
    Ledger ledger;
    ledger.difficulty_ = difficulty_bits;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (line.empty()) continue;
        Transaction tx;
        try {
            tx = tx_from_jsonl_line(line);
        } catch (const Error& e) {
            raise(Errc::parse_error,
                  "ledger line " + std::to_string(line_no) + ": " + e.what());
        }
        if (ledger.transactions_.count(tx.id)) {
            raise(Errc::parse_error,
                  "ledger line " + std::to_string(line_no) + ": duplicate transaction id");
        }
        if (tx.kind == TxKind::genesis && ledger.genesis_id_ == TxId{}) {
            ledger.genesis_id_ = tx.id;
        }
        ledger.insert_unchecked(tx);
    }
    return ledger;
}

}  // namespace evpay::ledger
