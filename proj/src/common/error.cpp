#include "evpay/common/error.hpp"

namespace evpay {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::duplicate_address: return "DuplicateAddress";
        case Errc::negative_amount: return "NegativeAmount";
        case Errc::difficulty_too_high: return "DifficultyTooHigh";
        case Errc::bad_pow: return "BadPoW";
        case Errc::bad_signature: return "BadSignature";
        case Errc::unknown_reference: return "UnknownReference";
        case Errc::insufficient_balance: return "InsufficientBalance";
        case Errc::duplicate_id: return "DuplicateId";
        case Errc::id_mismatch: return "IdMismatch";
        case Errc::invalid_kind: return "InvalidKind";
        case Errc::approval_rule: return "ApprovalRule";
        case Errc::unauthorized_transfer: return "UnauthorizedTransfer";
        case Errc::malformed_channel_tx: return "MalformedChannelTx";
        case Errc::unknown_id: return "UnknownId";
        case Errc::channel_closed: return "ChannelClosed";
        case Errc::overdraw: return "Overdraw";
        case Errc::unknown_party: return "UnknownParty";
        case Errc::seq_gap: return "SeqGap";
        case Errc::sum_mismatch: return "SumMismatch";
        case Errc::not_cosigned: return "NotCosigned";
        case Errc::zero_deposit: return "ZeroDeposit";
        case Errc::malformed_topic: return "MalformedTopic";
        case Errc::malformed_filter: return "MalformedFilter";
        case Errc::negative_delta: return "NegativeDelta";
        case Errc::time_regression: return "TimeRegression";
        case Errc::empty_registry: return "EmptyRegistry";
        case Errc::illegal_transition: return "IllegalTransition";
        case Errc::unknown_session: return "UnknownSession";
        case Errc::power_unavailable: return "PowerUnavailable";
        case Errc::parse_error: return "ParseError";
        case Errc::dangling_reference: return "DanglingReference";
        case Errc::invalid_value: return "InvalidValue";
        case Errc::tick_limit_exceeded: return "TickLimitExceeded";
    }
    return "UnknownError";
}

}  // namespace evpay
