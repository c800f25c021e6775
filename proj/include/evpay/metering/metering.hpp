#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "evpay/common/error.hpp"

namespace evpay::metering {

using Amount = uint64_t;  // micro-tokens

// Piecewise-constant tariff: micro-tokens per watt-hour from a tick on.
struct PriceStep {
    int64_t from_tick{0};
    Amount unit_price{0};
};

class PriceSchedule {
public:
    PriceSchedule() = default;
    // Steps must start at tick 0 and be strictly increasing in from_tick.
    static PriceSchedule make(std::vector<PriceStep> steps);  // throws Errc::invalid_value

    Amount price_at(int64_t tick) const;
    const std::vector<PriceStep>& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }

private:
    std::vector<PriceStep> steps_;
};

struct MeterReading {
    std::string session_id;
    uint64_t interval_index{0};
    uint64_t delta_wh{0};
    int64_t tick{0};
    Amount unit_price{0};
    Amount cost{0};  // delta_wh * unit_price, exact

    nlohmann::ordered_json to_json() const;
    static MeterReading from_json(const nlohmann::ordered_json& j);
};

// Per-session energy accumulator.
class Meter {
public:
    explicit Meter(std::string session_id) : session_id_(std::move(session_id)) {}

    // Appends one interval priced at the schedule for `tick`.
    const MeterReading& record_tick(int64_t delta_wh, int64_t tick,
                                    const PriceSchedule& schedule);

    Amount session_total() const;
    uint64_t cumulative_wh() const { return cumulative_wh_; }
    const std::vector<MeterReading>& readings() const { return readings_; }
    const std::string& session_id() const { return session_id_; }

private:
    std::string session_id_;
    uint64_t cumulative_wh_{0};
    std::vector<MeterReading> readings_;
};

// Shared-supply allocation (Smart EVSE).
struct StationDemand {
    std::string station_id;
    int64_t connector_limit_w{0};
    int64_t demand_w{0};
};

struct SupplyGroup {
    std::string id;
    int64_t capacity_w{0};
    std::vector<StationDemand> stations;
};

struct Grant {
    std::string station_id;
    int64_t granted_w{0};
};

// Max-min fair water-filling: each station is capped at
// min(demand, connector_limit); under contention the unsatisfied stations
// share an equal integer level, stations below the level freeze at their
// cap, and the level rises until fixpoint. Grants are order-independent.
std::vector<Grant> allocate_power(const SupplyGroup& group);  // throws Errc::invalid_value

}  // namespace evpay::metering
