#include "evpay/bus/topic.hpp"

#include "evpay/common/error.hpp"

namespace evpay::bus {

namespace {
std::vector<std::string> split_labels(std::string_view text, Errc err) {
    if (text.empty()) {
        raise(err, "empty topic string");
    }
    std::vector<std::string> labels;
    std::size_t pos = 0;
    while (true) {
        std::size_t slash = text.find('/', pos);
        std::string_view label =
            slash == std::string_view::npos ? text.substr(pos) : text.substr(pos, slash - pos);
        if (label.empty()) {
            raise(err, "empty label in '" + std::string(text) + "'");
        }
        labels.emplace_back(label);
        if (slash == std::string_view::npos) break;
        pos = slash + 1;
    }
    return labels;
}

std::string join_labels(const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out.push_back('/');
        out += labels[i];
    }
    return out;
}
}  // namespace

Topic Topic::parse(std::string_view text) {
    Topic t{split_labels(text, Errc::malformed_topic)};
    for (const std::string& label : t.labels) {
        if (label.find_first_of("+#") != std::string::npos) {
            raise(Errc::malformed_topic, "wildcard character in topic '" + std::string(text) + "'");
        }
    }
    return t;
}

std::string Topic::str() const { return join_labels(labels); }

TopicFilter TopicFilter::parse(std::string_view text) {
    TopicFilter f{split_labels(text, Errc::malformed_filter)};
    for (std::size_t i = 0; i < f.labels.size(); ++i) {
        const std::string& label = f.labels[i];
        if (label == "+") continue;
        if (label == "#") {
            if (i + 1 != f.labels.size()) {
                raise(Errc::malformed_filter, "'#' must be the final label");
            }
            continue;
        }
        if (label.find_first_of("+#") != std::string::npos) {
            raise(Errc::malformed_filter,
                  "wildcard inside label in '" + std::string(text) + "'");
        }
    }
    return f;
}

std::string TopicFilter::str() const { return join_labels(labels); }

bool topic_matches(const TopicFilter& filter, const Topic& topic) {
    std::size_t i = 0;
    for (; i < filter.labels.size(); ++i) {
        const std::string& f = filter.labels[i];
        if (f == "#") {
            return true;  // matches the rest, including an empty remainder
        }
        if (i >= topic.labels.size()) {
            return false;
        }
        if (f != "+" && f != topic.labels[i]) {
            return false;
        }
    }
    return i == topic.labels.size();
}

}  // namespace evpay::bus
