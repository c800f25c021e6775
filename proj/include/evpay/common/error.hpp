#pragma once

#include <stdexcept>
#include <string>

namespace evpay {

// Error codes shared across modules. Tests match on these rather than on
// message text.
enum class Errc {
    // ledger
    duplicate_address,
    negative_amount,
    difficulty_too_high,
    bad_pow,
    bad_signature,
    unknown_reference,
    insufficient_balance,
    duplicate_id,
    id_mismatch,
    invalid_kind,
    approval_rule,
    unauthorized_transfer,
    malformed_channel_tx,
    unknown_id,
    // channel
    channel_closed,
    overdraw,
    unknown_party,
    seq_gap,
    sum_mismatch,
    not_cosigned,
    zero_deposit,
    // bus
    malformed_topic,
    malformed_filter,
    // metering
    negative_delta,
    time_regression,
    // agents
    empty_registry,
    illegal_transition,
    unknown_session,
    power_unavailable,
    // sim
    parse_error,
    dangling_reference,
    invalid_value,
    tick_limit_exceeded,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace evpay
