#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "notibus/constraint.hpp"
#include "notibus/errors.hpp"
#include "notibus/event.hpp"
#include "notibus/qos.hpp"

namespace notibus {

/// Event plus its canonical text, computed once and shared across every
/// consumer queue the event fans out to.
class CachedEvent {
public:
    explicit CachedEvent(StructuredEvent e) : event(std::move(e)) {}

    const StructuredEvent event;

    const std::string& text() const {
        std::call_once(once_, [this] { text_ = encode_event(event); });
        return text_;
    }

private:
    mutable std::once_flag once_;
    mutable std::string text_;
};

using CachedEventPtr = std::shared_ptr<const CachedEvent>;

struct PushResult {
    bool accepted = true;
    std::string reason;
};

/// Final per-proxy counters reported on disconnect. Supplier proxies use
/// pushed/rejected, consumer proxies the other three.
struct ProxyStats {
    bool is_consumer = false;
    std::uint64_t pushed = 0;
    std::uint64_t rejected = 0;
    std::uint64_t enqueued = 0;
    std::uint64_t delivered = 0;
    std::uint64_t discarded = 0;
};

/// Channel hub: supplier/consumer proxies, filtered fan-out, bounded
/// per-consumer queues with layered QoS, and the cursor/ack machinery the
/// deliver pump and the log service drive.
///
/// One lock serializes all operations, which directly gives the contract:
/// per-channel dispatch is linearizable and counters move atomically with
/// the queue operation they describe. Enqueue callbacks run outside the
/// lock.
class NotifyCore {
public:
    using Clock = std::chrono::steady_clock;

    struct Delivery {
        std::uint64_t seq;
        CachedEventPtr event;
    };

    std::uint64_t create_channel(const QosProfile& default_qos) {
        validate_channel_qos(default_qos);
        std::lock_guard lock(mu_);
        std::uint64_t id = next_channel_id_++;
        channels_.emplace(id, Channel{default_qos});
        return id;
    }

    bool channel_exists(std::uint64_t channel_id) const {
        std::lock_guard lock(mu_);
        return channels_.contains(channel_id);
    }

    std::uint64_t connect_supplier(std::uint64_t channel_id, QosProfile overrides) {
        std::lock_guard lock(mu_);
        channel_at(channel_id);
        std::uint64_t id = next_proxy_id_++;
        Supplier s;
        s.channel = channel_id;
        s.overrides = std::move(overrides);
        suppliers_.emplace(id, std::move(s));
        return id;
    }

    std::uint64_t connect_consumer(std::uint64_t channel_id, Subscription subscription,
                                   ConstraintPtr filter, QosProfile overrides) {
        std::lock_guard lock(mu_);
        Channel& ch = channel_at(channel_id);
        std::uint64_t id = next_proxy_id_++;
        Consumer c;
        c.channel = channel_id;
        c.subscription = std::move(subscription);
        c.filter = std::move(filter);
        c.overrides = std::move(overrides);
        ch.consumers.push_back(id);
        consumers_.emplace(id, std::move(c));
        return id;
    }

    /// Replaces the consumer's filter. Applies to events dispatched after
    /// the call; already queued events are unaffected.
    void set_filter(std::uint64_t proxy_id, ConstraintPtr filter) {
        std::lock_guard lock(mu_);
        consumer_at(proxy_id).filter = std::move(filter);
    }

    void set_notify(std::uint64_t proxy_id, std::function<void()> cb) {
        std::lock_guard lock(mu_);
        consumer_at(proxy_id).notify = std::move(cb);
    }

    /// Fans the event out to every consumer whose subscription and filter
    /// match. Under a Reliable+RejectNew consumer at capacity the whole
    /// push is rejected before anything is enqueued, so a retrying
    /// supplier never duplicates deliveries to faster consumers.
    PushResult push(std::uint64_t supplier_proxy_id, StructuredEvent event) {
        auto violations = validate_event(event);
        if (!violations.empty()) {
            std::string msg = "push of invalid event:";
            for (const auto& v : violations) msg += " [" + v + "]";
            throw Error(ErrorCode::InvalidEvent, msg);
        }
        std::vector<std::function<void()>> callbacks;
        PushResult result;
        {
            std::lock_guard lock(mu_);
            Supplier& sup = supplier_at(supplier_proxy_id);
            Channel& ch = channel_at(sup.channel);
            Clock::time_point now = Clock::now();

            struct Match {
                Consumer* consumer;
                EffectiveQos qos;
            };
            std::vector<Match> matches;
            matches.reserve(ch.consumers.size());
            for (std::uint64_t cid : ch.consumers) {
                Consumer& c = consumers_.at(cid);
                if (!match_subscription(c.subscription, event.header)) continue;
                if (c.filter && !eval_constraint(*c.filter, event)) continue;
                matches.push_back({&c, resolve_qos(ch.defaults, c.overrides,
                                                   event.variable_header)});
            }

            for (auto& m : matches) purge_expired(*m.consumer, now);

            for (const auto& m : matches) {
                if (m.qos.reliability == Reliability::Reliable &&
                    m.qos.discard_policy == DiscardPolicy::RejectNew &&
                    occupancy(*m.consumer) >= m.qos.queue_limit) {
                    ++sup.rejected;
                    return {false, "QueueFull"};
                }
            }

            auto shared = std::make_shared<const CachedEvent>(std::move(event));
            std::uint64_t seq = ch.next_seq++;
            for (auto& m : matches) {
                Consumer& c = *m.consumer;
                ++c.enqueued;
                Entry entry;
                entry.seq = seq;
                entry.priority = m.qos.priority;
                if (m.qos.timeout_ms)
                    entry.deadline = now + std::chrono::milliseconds(*m.qos.timeout_ms);
                entry.event = shared;
                if (entry.deadline && *entry.deadline <= now) {
                    ++c.discarded;  // expired on arrival, never queued
                    continue;
                }
                if (occupancy(c) >= m.qos.queue_limit) {
                    if (m.qos.discard_policy == DiscardPolicy::DiscardOldest &&
                        !c.queue.empty()) {
                        evict_oldest(c);
                    } else {
                        // DiscardNewest, RejectNew under BestEffort, or every
                        // queued entry already in flight: drop the incoming one.
                        ++c.discarded;
                        continue;
                    }
                }
                insert_entry(c, m.qos.order_policy, std::move(entry));
                if (c.notify) callbacks.push_back(c.notify);
            }
            ++sup.pushed;
        }
        for (auto& cb : callbacks) cb();
        return result;
    }

    /// Polling delivery: dequeues up to `max` events in queue order.
    std::vector<StructuredEvent> receive(std::uint64_t proxy_id, std::size_t max) {
        std::lock_guard lock(mu_);
        Consumer& c = consumer_at(proxy_id);
        purge_expired(c, Clock::now());
        std::vector<StructuredEvent> out;
        while (out.size() < max && !c.queue.empty()) {
            if (c.queue.front().deadline) --c.queue_deadlines;
            out.push_back(c.queue.front().event->event);
            c.queue.pop_front();
            ++c.delivered;
        }
        return out;
    }

    /// Push-mode delivery: hands out queued events in order and advances
    /// the send cursor. BestEffort entries are gone once fetched; Reliable
    /// entries stay charged against the queue limit until acknowledged.
    std::vector<Delivery> fetch_unsent(std::uint64_t proxy_id, std::size_t max) {
        std::lock_guard lock(mu_);
        Consumer& c = consumer_at(proxy_id);
        purge_expired(c, Clock::now());
        bool reliable = effective_reliability(c) == Reliability::Reliable;
        std::vector<Delivery> out;
        while (out.size() < max && !c.queue.empty()) {
            Entry e = std::move(c.queue.front());
            if (e.deadline) --c.queue_deadlines;
            c.queue.pop_front();
            out.push_back({e.seq, e.event});
            if (reliable) {
                c.inflight.push_back(std::move(e));
            } else {
                ++c.delivered;
            }
        }
        return out;
    }

    bool has_unsent(std::uint64_t proxy_id) const {
        std::lock_guard lock(mu_);
        auto it = consumers_.find(proxy_id);
        return it != consumers_.end() && !it->second.queue.empty();
    }

    /// Cumulative acknowledgment: settles every sent-but-unacked entry with
    /// seq <= up_to as delivered. Unsent entries are never affected, which
    /// matters under Priority order where send order is not seq order.
    void ack(std::uint64_t proxy_id, std::uint64_t up_to_seq) {
        std::lock_guard lock(mu_);
        settle_inflight(consumer_at(proxy_id), up_to_seq, /*delivered=*/true);
    }

    /// Like ack but counts the entries discarded (a halted log refusing
    /// deliveries, for example).
    void ack_discard(std::uint64_t proxy_id, std::uint64_t up_to_seq) {
        std::lock_guard lock(mu_);
        settle_inflight(consumer_at(proxy_id), up_to_seq, /*delivered=*/false);
    }

    /// Puts all in-flight entries back in the queue for redelivery after a
    /// Reliable session reconnects.
    void requeue_unacked(std::uint64_t proxy_id) {
        std::lock_guard lock(mu_);
        Consumer& c = consumer_at(proxy_id);
        if (c.inflight.empty()) return;
        OrderPolicy order = effective_order(c);
        while (!c.inflight.empty()) {
            Entry e = std::move(c.inflight.back());
            c.inflight.pop_back();
            insert_entry(c, order, std::move(e));
        }
    }

    ProxyStats disconnect(std::uint64_t proxy_id) {
        std::lock_guard lock(mu_);
        if (auto it = suppliers_.find(proxy_id); it != suppliers_.end()) {
            ProxyStats stats;
            stats.pushed = it->second.pushed;
            stats.rejected = it->second.rejected;
            suppliers_.erase(it);
            return stats;
        }
        auto it = consumers_.find(proxy_id);
        if (it == consumers_.end()) throw Error(ErrorCode::NoSuchProxy, proxy_ref(proxy_id));
        Consumer& c = it->second;
        c.discarded += c.queue.size() + c.inflight.size();
        ProxyStats stats = consumer_stats(c);
        if (auto ch = channels_.find(c.channel); ch != channels_.end())
            std::erase(ch->second.consumers, proxy_id);
        consumers_.erase(it);
        return stats;
    }

    ProxyStats stats(std::uint64_t proxy_id) const {
        std::lock_guard lock(mu_);
        if (auto it = suppliers_.find(proxy_id); it != suppliers_.end()) {
            ProxyStats s;
            s.pushed = it->second.pushed;
            s.rejected = it->second.rejected;
            return s;
        }
        auto it = consumers_.find(proxy_id);
        if (it == consumers_.end()) throw Error(ErrorCode::NoSuchProxy, proxy_ref(proxy_id));
        return consumer_stats(it->second);
    }

    std::size_t queue_length(std::uint64_t proxy_id) const {
        std::lock_guard lock(mu_);
        auto it = consumers_.find(proxy_id);
        if (it == consumers_.end()) throw Error(ErrorCode::NoSuchProxy, proxy_ref(proxy_id));
        return it->second.queue.size() + it->second.inflight.size();
    }

    bool is_consumer(std::uint64_t proxy_id) const {
        std::lock_guard lock(mu_);
        return consumers_.contains(proxy_id);
    }

    bool proxy_exists(std::uint64_t proxy_id) const {
        std::lock_guard lock(mu_);
        return consumers_.contains(proxy_id) || suppliers_.contains(proxy_id);
    }

private:
    struct Entry {
        std::uint64_t seq = 0;
        std::int64_t priority = 0;
        std::optional<Clock::time_point> deadline;
        CachedEventPtr event;
    };

    struct Consumer {
        std::uint64_t channel = 0;
        Subscription subscription;
        ConstraintPtr filter;
        QosProfile overrides;
        std::deque<Entry> queue;     // delivery order
        std::deque<Entry> inflight;  // sent, awaiting ack (Reliable push mode)
        std::size_t queue_deadlines = 0;  // queued entries carrying a deadline
        std::uint64_t enqueued = 0;
        std::uint64_t delivered = 0;
        std::uint64_t discarded = 0;
        std::function<void()> notify;
    };

    struct Supplier {
        std::uint64_t channel = 0;
        QosProfile overrides;
        std::uint64_t pushed = 0;
        std::uint64_t rejected = 0;
    };

    struct Channel {
        QosProfile defaults;
        std::vector<std::uint64_t> consumers;
        std::uint64_t next_seq = 1;
    };

    static std::string proxy_ref(std::uint64_t id) { return "proxy " + std::to_string(id); }

    Channel& channel_at(std::uint64_t id) {
        auto it = channels_.find(id);
        if (it == channels_.end())
            throw Error(ErrorCode::NoSuchChannel, "channel " + std::to_string(id));
        return it->second;
    }

    Consumer& consumer_at(std::uint64_t id) {
        auto it = consumers_.find(id);
        if (it == consumers_.end()) throw Error(ErrorCode::NoSuchProxy, proxy_ref(id));
        return it->second;
    }

    Supplier& supplier_at(std::uint64_t id) {
        auto it = suppliers_.find(id);
        if (it == suppliers_.end()) throw Error(ErrorCode::NoSuchProxy, proxy_ref(id));
        return it->second;
    }

    static ProxyStats consumer_stats(const Consumer& c) {
        ProxyStats s;
        s.is_consumer = true;
        s.enqueued = c.enqueued;
        s.delivered = c.delivered;
        s.discarded = c.discarded;
        return s;
    }

    static std::int64_t occupancy(const Consumer& c) {
        return static_cast<std::int64_t>(c.queue.size() + c.inflight.size());
    }

    Reliability effective_reliability(const Consumer& c) {
        const Channel& ch = channels_.at(c.channel);
        return c.overrides.reliability.value_or(*ch.defaults.reliability);
    }

    OrderPolicy effective_order(const Consumer& c) {
        const Channel& ch = channels_.at(c.channel);
        return c.overrides.order_policy.value_or(*ch.defaults.order_policy);
    }

    static void purge_expired(Consumer& c, Clock::time_point now) {
        if (c.queue_deadlines == 0) return;
        for (auto it = c.queue.begin(); it != c.queue.end();) {
            if (it->deadline && *it->deadline <= now) {
                it = c.queue.erase(it);
                ++c.discarded;
                --c.queue_deadlines;
            } else {
                ++it;
            }
        }
    }

    // Oldest = smallest dispatch sequence; under Priority order that entry
    // may sit anywhere in the queue.
    static void evict_oldest(Consumer& c) {
        auto oldest = std::min_element(c.queue.begin(), c.queue.end(),
                                       [](const Entry& a, const Entry& b) {
                                           return a.seq < b.seq;
                                       });
        if (oldest->deadline) --c.queue_deadlines;
        c.queue.erase(oldest);
        ++c.discarded;
    }

    static void insert_entry(Consumer& c, OrderPolicy order, Entry entry) {
        if (entry.deadline) ++c.queue_deadlines;
        if (order == OrderPolicy::Fifo) {
            auto pos = std::lower_bound(c.queue.begin(), c.queue.end(), entry,
                                        [](const Entry& a, const Entry& b) {
                                            return a.seq < b.seq;
                                        });
            if (pos == c.queue.end()) c.queue.push_back(std::move(entry));
            else c.queue.insert(pos, std::move(entry));
            return;
        }
        // Descending priority, FIFO (by seq) within equal priority.
        auto pos = std::lower_bound(c.queue.begin(), c.queue.end(), entry,
                                    [](const Entry& a, const Entry& b) {
                                        if (a.priority != b.priority)
                                            return a.priority > b.priority;
                                        return a.seq < b.seq;
                                    });
        if (pos == c.queue.end()) c.queue.push_back(std::move(entry));
        else c.queue.insert(pos, std::move(entry));
    }

    void settle_inflight(Consumer& c, std::uint64_t up_to_seq, bool delivered) {
        for (auto it = c.inflight.begin(); it != c.inflight.end();) {
            if (it->seq <= up_to_seq) {
                it = c.inflight.erase(it);
                if (delivered) ++c.delivered;
                else ++c.discarded;
            } else {
                ++it;
            }
        }
    }

    mutable std::mutex mu_;
    std::map<std::uint64_t, Channel> channels_;
    std::map<std::uint64_t, Consumer> consumers_;
    std::map<std::uint64_t, Supplier> suppliers_;
    std::uint64_t next_channel_id_ = 1;
    std::uint64_t next_proxy_id_ = 1;
};

}  // namespace notibus
