#include "evpay/bus/broker.hpp"

namespace evpay::bus {

void Broker::subscribe(const std::string& client, const TopicFilter& filter) {
    subscriptions_[client].insert(filter);
}

void Broker::subscribe(const std::string& client, std::string_view filter_text) {
    subscribe(client, TopicFilter::parse(filter_text));
}

void Broker::set_handler(const std::string& client, Handler handler) {
    handlers_[client] = std::move(handler);
}

std::vector<std::string> Broker::publish(const std::string& publisher, const Topic& topic,
                                         std::string payload) {
    Message msg;
    msg.topic = topic;
    msg.payload = std::move(payload);
    msg.publisher = publisher;
    msg.seq = next_seq_[publisher]++;
    msg.tick = clock_;

    std::vector<std::string> delivered;
    for (const auto& [client, filters] : subscriptions_) {
        bool matched = false;
        for (const TopicFilter& filter : filters) {
            if (topic_matches(filter, topic)) {
                matched = true;
                break;
            }
        }
        if (!matched) continue;
        delivered.push_back(client);
        log_.push_back(Delivery{client, msg});
        auto handler = handlers_.find(client);
        if (handler != handlers_.end() && handler->second) {
            handler->second(msg);
        }
    }
    return delivered;
}

std::vector<std::string> Broker::publish(const std::string& publisher,
                                         std::string_view topic_text, std::string payload) {
    return publish(publisher, Topic::parse(topic_text), std::move(payload));
}

const std::set<TopicFilter>* Broker::subscriptions(const std::string& client) const {
    auto it = subscriptions_.find(client);
    return it == subscriptions_.end() ? nullptr : &it->second;
}

}  // namespace evpay::bus
