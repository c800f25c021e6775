#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "evpay/bus/topic.hpp"

namespace evpay::bus {

struct Message {
    Topic topic;
    std::string payload;  // canonical JSON in this artifact
    std::string publisher;
    uint64_t seq{0};  // per-publisher counter assigned by the broker
    int64_t tick{0};
};

struct Delivery {
    std::string client;
    Message message;
};

// In-process broker with synchronous delivery. Owned and driven by the
// simulation loop; delivery order to a client follows publish order, and
// clients receiving one publish are visited in id order.
class Broker {
public:
    using Handler = std::function<void(const Message&)>;

    // Idempotent: re-adding an existing filter changes nothing.
    void subscribe(const std::string& client, const TopicFilter& filter);
    void subscribe(const std::string& client, std::string_view filter_text);

    void set_handler(const std::string& client, Handler handler);

    // Delivers to every client with at least one matching filter, once per
    // client. Returns the delivered client ids, sorted.
    std::vector<std::string> publish(const std::string& publisher, const Topic& topic,
                                     std::string payload);
    std::vector<std::string> publish(const std::string& publisher, std::string_view topic_text,
                                     std::string payload);

    const std::vector<Delivery>& delivery_log() const { return log_; }
    const std::set<TopicFilter>* subscriptions(const std::string& client) const;

    int64_t clock() const { return clock_; }
    void set_clock(int64_t tick) { clock_ = tick; }

private:
    std::map<std::string, std::set<TopicFilter>> subscriptions_;
    std::map<std::string, Handler> handlers_;
    std::map<std::string, uint64_t> next_seq_;
    std::vector<Delivery> log_;
    int64_t clock_{0};
};

}  // namespace evpay::bus
