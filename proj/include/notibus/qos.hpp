#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "notibus/errors.hpp"
#include "notibus/event.hpp"

namespace notibus {

enum class DiscardPolicy { DiscardOldest, DiscardNewest, RejectNew };
enum class OrderPolicy { Fifo, Priority };
enum class Reliability { BestEffort, Reliable };

/// Layerable QoS settings. Unset fields fall through to the next layer.
/// A channel's default profile must be fully set.
struct QosProfile {
    std::optional<std::int64_t> queue_limit;  // events, >= 1
    std::optional<DiscardPolicy> discard_policy;
    std::optional<OrderPolicy> order_policy;
    std::optional<Reliability> reliability;

    bool fully_set() const {
        return queue_limit && discard_policy && order_policy && reliability;
    }

    bool operator==(const QosProfile&) const = default;
};

/// The channel defaults used when a caller does not override anything:
/// roomy FIFO queue, drop-oldest on overflow, no supplier-facing rejection.
inline QosProfile default_channel_qos() {
    return QosProfile{1000, DiscardPolicy::DiscardOldest, OrderPolicy::Fifo,
                      Reliability::BestEffort};
}

/// Fully resolved per-(event, consumer) delivery parameters.
struct EffectiveQos {
    std::int64_t queue_limit = 0;
    DiscardPolicy discard_policy = DiscardPolicy::DiscardOldest;
    OrderPolicy order_policy = OrderPolicy::Fifo;
    Reliability reliability = Reliability::BestEffort;
    std::int64_t priority = 0;                  // from the event, default 0
    std::optional<std::int64_t> timeout_ms;     // from the event, default none

    bool operator==(const EffectiveQos&) const = default;
};

inline void validate_channel_qos(const QosProfile& qos) {
    if (!qos.fully_set())
        throw Error(ErrorCode::InvalidQos, "channel default qos must have all fields set");
    if (*qos.queue_limit < 1) throw Error(ErrorCode::InvalidQos, "queue_limit must be >= 1");
}

/// Field-wise layering: per-event values (priority, timeout_ms) when the
/// recognized variable-header keys are present, else proxy overrides, else
/// channel defaults. Deterministic in its three inputs.
inline EffectiveQos resolve_qos(const QosProfile& channel_qos, const QosProfile& proxy_qos,
                                const Value::Map& variable_header) {
    EffectiveQos out;
    out.queue_limit = proxy_qos.queue_limit.value_or(*channel_qos.queue_limit);
    out.discard_policy = proxy_qos.discard_policy.value_or(*channel_qos.discard_policy);
    out.order_policy = proxy_qos.order_policy.value_or(*channel_qos.order_policy);
    out.reliability = proxy_qos.reliability.value_or(*channel_qos.reliability);
    if (auto it = variable_header.find("priority");
        it != variable_header.end() && it->second.is_int())
        out.priority = it->second.as_int();
    if (auto it = variable_header.find("timeout_ms");
        it != variable_header.end() && it->second.is_int() && it->second.as_int() >= 0)
        out.timeout_ms = it->second.as_int();
    return out;
}

}  // namespace notibus
