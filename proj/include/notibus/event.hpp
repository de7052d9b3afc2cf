#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "notibus/value.hpp"

namespace notibus {

struct FixedHeader {
    std::string domain_name;
    std::string type_name;
    std::string event_name;  // may be empty

    bool operator==(const FixedHeader&) const = default;
};

/// Unit of transport: fixed header for coarse typing, variable header for
/// per-event QoS hints, flat filterable body, opaque payload.
struct StructuredEvent {
    FixedHeader header;
    Value::Map variable_header;   // recognized keys: "priority" (Int), "timeout_ms" (Int >= 0)
    Value::Map filterable_body;   // scalar values only, no NaN
    Value payload;

    bool operator==(const StructuredEvent&) const = default;
};

/// Empty result means the event satisfies every model invariant; otherwise
/// one entry per violated invariant. Total: never throws on any
/// structurally well-formed event.
inline std::vector<std::string> validate_event(const StructuredEvent& e) {
    std::vector<std::string> violations;
    if (e.header.domain_name.empty()) violations.push_back("domain_name empty");
    if (e.header.type_name.empty()) violations.push_back("type_name empty");
    if (auto it = e.variable_header.find("priority"); it != e.variable_header.end()) {
        if (!it->second.is_int()) violations.push_back("variable_header priority not Int");
    }
    if (auto it = e.variable_header.find("timeout_ms"); it != e.variable_header.end()) {
        if (!it->second.is_int()) violations.push_back("variable_header timeout_ms not Int");
        else if (it->second.as_int() < 0) violations.push_back("variable_header timeout_ms negative");
    }
    for (const auto& [name, v] : e.filterable_body) {
        if (!v.is_scalar()) {
            violations.push_back("non-flat filterable field '" + name + "'");
        } else if (v.is_float() && std::isnan(v.as_float())) {
            violations.push_back("NaN in filterable field '" + name + "'");
        }
    }
    return violations;
}

inline Value event_to_value(const StructuredEvent& e) {
    Value::Map header{
        {"domain", Value(e.header.domain_name)},
        {"event", Value(e.header.event_name)},
        {"type", Value(e.header.type_name)},
    };
    return Value(Value::Map{
        {"filterable", Value(e.filterable_body)},
        {"header", Value(std::move(header))},
        {"payload", e.payload},
        {"variable", Value(e.variable_header)},
    });
}

/// Rebuilds an event from its value form. Structural errors are
/// DecodeError; the result is not checked against the model invariants
/// (decode_event layers that on top).
inline StructuredEvent event_from_value(const Value& v) {
    if (!v.is_map()) throw DecodeError(0, "event is not a map");
    const Value::Map& m = v.as_map();
    auto field = [&m](const char* key) -> const Value& {
        auto it = m.find(key);
        if (it == m.end()) throw DecodeError(0, std::string("event missing key '") + key + "'");
        return it->second;
    };
    if (m.size() != 4) throw DecodeError(0, "event must have exactly 4 keys");
    const Value& header = field("header");
    if (!header.is_map()) throw DecodeError(0, "event header is not a map");
    const Value::Map& hm = header.as_map();
    auto header_str = [&hm](const char* key) -> const std::string& {
        auto it = hm.find(key);
        if (it == hm.end() || !it->second.is_str())
            throw DecodeError(0, std::string("event header field '") + key + "' missing or not Str");
        return it->second.as_str();
    };
    if (hm.size() != 3) throw DecodeError(0, "event header must have exactly 3 keys");
    const Value& variable = field("variable");
    const Value& filterable = field("filterable");
    if (!variable.is_map()) throw DecodeError(0, "event variable header is not a map");
    if (!filterable.is_map()) throw DecodeError(0, "event filterable body is not a map");
    StructuredEvent e;
    e.header.domain_name = header_str("domain");
    e.header.type_name = header_str("type");
    e.header.event_name = header_str("event");
    e.variable_header = variable.as_map();
    e.filterable_body = filterable.as_map();
    e.payload = field("payload");
    return e;
}

/// Canonical byte encoding. Deterministic: structurally equal events give
/// byte-identical output. Requires a valid event.
inline std::string encode_event(const StructuredEvent& e) {
    auto violations = validate_event(e);
    if (!violations.empty()) {
        std::string msg = "invalid event:";
        for (const auto& v : violations) msg += " [" + v + "]";
        throw Error(ErrorCode::InvalidEvent, msg);
    }
    return to_text(event_to_value(e));
}

/// Inverse of encode_event on its image. Malformed bytes raise DecodeError;
/// a well-formed encoding of an invalid event raises InvalidEvent.
inline StructuredEvent decode_event(std::string_view bytes) {
    StructuredEvent e = event_from_value(parse_text(bytes));
    auto violations = validate_event(e);
    if (!violations.empty()) {
        std::string msg = "decoded event invalid:";
        for (const auto& v : violations) msg += " [" + v + "]";
        throw Error(ErrorCode::InvalidEvent, msg);
    }
    return e;
}

}  // namespace notibus
