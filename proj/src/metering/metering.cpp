#include "evpay/metering/metering.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace evpay::metering {

using nlohmann::ordered_json;

PriceSchedule PriceSchedule::make(std::vector<PriceStep> steps) {
    if (steps.empty()) {
        raise(Errc::invalid_value, "price schedule needs at least one step");
    }
    if (steps.front().from_tick != 0) {
        raise(Errc::invalid_value, "first price step must start at tick 0");
    }
    for (std::size_t i = 1; i < steps.size(); ++i) {
        if (steps[i].from_tick <= steps[i - 1].from_tick) {
            raise(Errc::invalid_value, "price steps must strictly increase in from_tick");
        }
    }
    PriceSchedule s;
    s.steps_ = std::move(steps);
    return s;
}

Amount PriceSchedule::price_at(int64_t tick) const {
    if (steps_.empty()) {
        raise(Errc::invalid_value, "empty price schedule");
    }
    // Last step with from_tick <= tick; boundary ticks take the new price.
    Amount price = steps_.front().unit_price;
    for (const PriceStep& step : steps_) {
        if (step.from_tick > tick) break;
        price = step.unit_price;
    }
    return price;
}

ordered_json MeterReading::to_json() const {
    ordered_json j;
    j["session_id"] = session_id;
    j["interval_index"] = interval_index;
    j["delta_wh"] = delta_wh;
    j["tick"] = tick;
    j["unit_price"] = unit_price;
    j["cost"] = cost;
    return j;
}

MeterReading MeterReading::from_json(const ordered_json& j) {
    MeterReading r;
    try {
        r.session_id = j.at("session_id").get<std::string>();
        r.interval_index = j.at("interval_index").get<uint64_t>();
        r.delta_wh = j.at("delta_wh").get<uint64_t>();
        r.tick = j.at("tick").get<int64_t>();
        r.unit_price = j.at("unit_price").get<uint64_t>();
        r.cost = j.at("cost").get<uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        raise(Errc::parse_error, std::string("bad meter reading: ") + e.what());
    }
    return r;
}

const MeterReading& Meter::record_tick(int64_t delta_wh, int64_t tick,
                                       const PriceSchedule& schedule) {
    if (delta_wh < 0) {
        raise(Errc::negative_delta, "meter delta must be non-negative");
    }
    if (!readings_.empty() && tick < readings_.back().tick) {
        raise(Errc::time_regression, "meter tick moved backwards");
    }
    MeterReading r;
    r.session_id = session_id_;
    r.interval_index = readings_.size();
    r.delta_wh = static_cast<uint64_t>(delta_wh);
    r.tick = tick;
    r.unit_price = schedule.price_at(tick);
    r.cost = r.delta_wh * r.unit_price;
    cumulative_wh_ += r.delta_wh;
    readings_.push_back(r);
    return readings_.back();
}

Amount Meter::session_total() const {
    Amount total = 0;
    for (const MeterReading& r : readings_) {
        total += r.cost;
    }
    return total;
}

std::vector<Grant> allocate_power(const SupplyGroup& group) {
    if (group.capacity_w <= 0) {
        raise(Errc::invalid_value, "supply capacity must be positive");
    }
    for (const StationDemand& s : group.stations) {
        if (s.connector_limit_w <= 0) {
            raise(Errc::invalid_value, "connector limit must be positive");
        }
        if (s.demand_w < 0) {
            raise(Errc::invalid_value, "demand must be non-negative");
        }
    }

    const std::size_t n = group.stations.size();
    std::vector<int64_t> need(n);
    for (std::size_t i = 0; i < n; ++i) {
        need[i] = std::min(group.stations[i].demand_w, group.stations[i].connector_limit_w);
    }

    std::vector<int64_t> granted(n, 0);
    int64_t total_need = 0;
    for (int64_t v : need) total_need += v;

    if (total_need <= group.capacity_w) {
        granted = need;
    } else {
        // Raise an equal integer share among unfrozen stations; stations
        // whose cap sits at or below the share freeze at their cap.
        std::vector<bool> frozen(n, false);
        int64_t remaining = group.capacity_w;
        std::size_t active = n;
        while (active > 0) {
            int64_t share = remaining / static_cast<int64_t>(active);
            bool froze_any = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (frozen[i]) continue;
                if (need[i] <= share) {
                    granted[i] = need[i];
                    remaining -= need[i];
                    frozen[i] = true;
                    --active;
                    froze_any = true;
                }
            }
            if (!froze_any) {
                for (std::size_t i = 0; i < n; ++i) {
                    if (!frozen[i]) granted[i] = share;
                }
                break;
            }
        }
    }

    std::vector<Grant> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(Grant{group.stations[i].station_id, granted[i]});
    }
    return out;
}

}  // namespace evpay::metering
