#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace evpay::bus {

// Hierarchical topic: non-empty labels joined by '/'. Labels may not
// contain '/', '+' or '#'.
struct Topic {
    std::vector<std::string> labels;

    static Topic parse(std::string_view text);  // throws Errc::malformed_topic
    std::string str() const;
    bool operator==(const Topic&) const = default;
};

// Subscription filter with MQTT wildcard semantics: a label may be '+'
// (matches one label) and the final label may be '#' (matches any
// remainder, including none).
struct TopicFilter {
    std::vector<std::string> labels;

    static TopicFilter parse(std::string_view text);  // throws Errc::malformed_filter
    std::string str() const;
    bool operator==(const TopicFilter&) const = default;
    auto operator<=>(const TopicFilter&) const = default;
};

bool topic_matches(const TopicFilter& filter, const Topic& topic);

}  // namespace evpay::bus
