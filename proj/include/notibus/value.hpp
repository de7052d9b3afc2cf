#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "notibus/errors.hpp"

namespace notibus {

struct Bytes {
    std::vector<std::uint8_t> data;

    Bytes() = default;
    explicit Bytes(std::vector<std::uint8_t> d) : data(std::move(d)) {}
    explicit Bytes(std::string_view s) : data(s.begin(), s.end()) {}

    bool operator==(const Bytes&) const = default;
};

/// Dynamically typed value: the language-neutral unit carried in event
/// bodies, wire messages, log records and property files. Immutable by
/// convention once handed to another module.
class Value {
public:
    enum class Kind { Null, Bool, Int, Float, Str, Bytes, List, Map };

    using List = std::vector<Value>;
    using Map = std::map<std::string, Value>;  // sorted keys, unique by construction

    Value() : v_(std::monostate{}) {}
    Value(bool b) : v_(b) {}
    Value(std::int64_t i) : v_(i) {}
    Value(int i) : v_(static_cast<std::int64_t>(i)) {}
    Value(double d) : v_(d) {}
    Value(std::string s) : v_(std::move(s)) {}
    Value(std::string_view s) : v_(std::string(s)) {}
    Value(const char* s) : v_(std::string(s)) {}
    Value(notibus::Bytes b) : v_(std::move(b)) {}
    Value(List l) : v_(std::move(l)) {}
    Value(Map m) : v_(std::move(m)) {}

    Kind kind() const noexcept { return static_cast<Kind>(v_.index()); }

    bool is_null() const noexcept { return kind() == Kind::Null; }
    bool is_bool() const noexcept { return kind() == Kind::Bool; }
    bool is_int() const noexcept { return kind() == Kind::Int; }
    bool is_float() const noexcept { return kind() == Kind::Float; }
    bool is_str() const noexcept { return kind() == Kind::Str; }
    bool is_bytes() const noexcept { return kind() == Kind::Bytes; }
    bool is_list() const noexcept { return kind() == Kind::List; }
    bool is_map() const noexcept { return kind() == Kind::Map; }
    bool is_scalar() const noexcept {
        Kind k = kind();
        return k == Kind::Null || k == Kind::Bool || k == Kind::Int || k == Kind::Float ||
               k == Kind::Str;
    }

    bool as_bool() const { return std::get<bool>(v_); }
    std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
    double as_float() const { return std::get<double>(v_); }
    const std::string& as_str() const { return std::get<std::string>(v_); }
    const notibus::Bytes& as_bytes() const { return std::get<notibus::Bytes>(v_); }
    const List& as_list() const { return std::get<List>(v_); }
    const Map& as_map() const { return std::get<Map>(v_); }
    List& as_list() { return std::get<List>(v_); }
    Map& as_map() { return std::get<Map>(v_); }

    // Structural equality. Floats compare by representation: +0 and -0 are
    // distinct (their canonical encodings differ) and any two NaNs are equal
    // (they all encode as "nan").
    friend bool operator==(const Value& a, const Value& b) {
        if (a.v_.index() != b.v_.index()) return false;
        if (a.kind() == Kind::Float) {
            double x = a.as_float(), y = b.as_float();
            if (std::isnan(x) || std::isnan(y)) return std::isnan(x) && std::isnan(y);
            return x == y && std::signbit(x) == std::signbit(y);
        }
        return a.v_ == b.v_;
    }

private:
    std::variant<std::monostate, bool, std::int64_t, double, std::string, notibus::Bytes, List,
                 Map>
        v_;
};

inline std::string_view to_string(Value::Kind k) {
    switch (k) {
        case Value::Kind::Null: return "Null";
        case Value::Kind::Bool: return "Bool";
        case Value::Kind::Int: return "Int";
        case Value::Kind::Float: return "Float";
        case Value::Kind::Str: return "Str";
        case Value::Kind::Bytes: return "Bytes";
        case Value::Kind::List: return "List";
        case Value::Kind::Map: return "Map";
    }
    return "?";
}

namespace detail {

inline void write_escaped(std::string& out, std::string_view s) {
    out += '"';
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (c < 0x20) {
                    static const char hex[] = "0123456789abcdef";
                    out += "\\u00";
                    out += hex[c >> 4];
                    out += hex[c & 0xf];
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    out += '"';
}

inline void write_int(std::string& out, std::int64_t i) {
    char buf[24];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, i);
    out.append(buf, p);
}

// Shortest decimal form that round-trips to the same binary64. A "." or
// exponent is forced so the token stays distinguishable from an Int.
inline void write_float(std::string& out, double d) {
    if (std::isnan(d)) {
        out += "nan";
        return;
    }
    if (std::isinf(d)) {
        out += d < 0 ? "-inf" : "inf";
        return;
    }
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, d);
    std::string_view s(buf, static_cast<std::size_t>(p - buf));
    out += s;
    if (s.find('.') == std::string_view::npos && s.find('e') == std::string_view::npos)
        out += ".0";
}

}  // namespace detail

/// Appends the canonical text form of `v`: sorted map keys, minimal decimal
/// integers, shortest round-tripping floats, no insignificant whitespace.
/// Equal values produce byte-identical text.
inline void write_text(std::string& out, const Value& v) {
    static const char hex[] = "0123456789abcdef";
    switch (v.kind()) {
        case Value::Kind::Null: out += "null"; break;
        case Value::Kind::Bool: out += v.as_bool() ? "true" : "false"; break;
        case Value::Kind::Int: detail::write_int(out, v.as_int()); break;
        case Value::Kind::Float: detail::write_float(out, v.as_float()); break;
        case Value::Kind::Str: detail::write_escaped(out, v.as_str()); break;
        case Value::Kind::Bytes: {
            out += "b\"";
            for (std::uint8_t b : v.as_bytes().data) {
                out += hex[b >> 4];
                out += hex[b & 0xf];
            }
            out += '"';
            break;
        }
        case Value::Kind::List: {
            out += '[';
            bool first = true;
            for (const Value& e : v.as_list()) {
                if (!first) out += ',';
                first = false;
                write_text(out, e);
            }
            out += ']';
            break;
        }
        case Value::Kind::Map: {
            out += '{';
            bool first = true;
            for (const auto& [k, e] : v.as_map()) {
                if (!first) out += ',';
                first = false;
                detail::write_escaped(out, k);
                out += ':';
                write_text(out, e);
            }
            out += '}';
            break;
        }
    }
}

inline std::string to_text(const Value& v) {
    std::string out;
    write_text(out, v);
    return out;
}

namespace detail {

// Strict recursive-descent reader for the canonical text syntax. Bounded
// depth so hostile input cannot exhaust the stack.
class ValueReader {
public:
    static constexpr int kMaxDepth = 96;

    explicit ValueReader(std::string_view text) : text_(text) {}

    Value parse_document() {
        Value v = parse_value(0);
        if (pos_ != text_.size()) fail("trailing bytes after value");
        return v;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& reason) const { throw DecodeError(pos_, reason); }

    char peek() const {
        if (pos_ >= text_.size()) throw DecodeError(pos_, "unexpected end of input");
        return text_[pos_];
    }

    char take() {
        char c = peek();
        ++pos_;
        return c;
    }

    void expect(char c) {
        if (take() != c) {
            --pos_;
            fail(std::string("expected '") + c + "'");
        }
    }

    bool consume_word(std::string_view w) {
        if (text_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    Value parse_value(int depth) {
        if (depth > kMaxDepth) fail("nesting too deep");
        char c = peek();
        switch (c) {
            case 'n':
                if (consume_word("null")) return Value();
                if (consume_word("nan")) return Value(std::nan(""));
                fail("unknown keyword");
            case 't':
                if (consume_word("true")) return Value(true);
                fail("unknown keyword");
            case 'f':
                if (consume_word("false")) return Value(false);
                fail("unknown keyword");
            case 'i':
                if (consume_word("inf")) return Value(std::numeric_limits<double>::infinity());
                fail("unknown keyword");
            case '"': return Value(parse_string());
            case 'b': return parse_bytes();
            case '[': return parse_list(depth);
            case '{': return parse_map(depth);
            default:
                if (c == '-' || (c >= '0' && c <= '9')) return parse_number();
                fail("unexpected byte");
        }
    }

    Value parse_number() {
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        if (consume_word("inf")) return Value(-std::numeric_limits<double>::infinity());
        std::size_t digits_start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (pos_ == digits_start) fail("expected digit");
        if (text_[digits_start] == '0' && pos_ - digits_start > 1)
            throw DecodeError(start, "leading zero");
        bool is_float = false;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            is_float = true;
            ++pos_;
            std::size_t frac_start = pos_;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
            if (pos_ == frac_start) fail("expected digit after '.'");
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            is_float = true;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            std::size_t exp_start = pos_;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
            if (pos_ == exp_start) fail("expected digit in exponent");
        }
        std::string_view tok = text_.substr(start, pos_ - start);
        if (is_float) {
            double d = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), d);
            if (ec != std::errc() || p != tok.data() + tok.size())
                throw DecodeError(start, "bad float literal");
            return Value(d);
        }
        if (tok == "-0") throw DecodeError(start, "minus zero integer");
        std::int64_t i = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), i);
        if (ec == std::errc::result_out_of_range) throw DecodeError(start, "integer out of range");
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw DecodeError(start, "bad integer literal");
        return Value(i);
    }

    unsigned parse_hex4() {
        unsigned v = 0;
        for (int i = 0; i < 4; ++i) {
            char c = take();
            v <<= 4;
            if (c >= '0' && c <= '9') v |= static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f') v |= static_cast<unsigned>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') v |= static_cast<unsigned>(c - 'A' + 10);
            else {
                --pos_;
                fail("expected hex digit");
            }
        }
        return v;
    }

    void append_utf8(std::string& out, unsigned cp) {
        if (cp < 0x80) {
            out += static_cast<char>(cp);
        } else if (cp < 0x800) {
            out += static_cast<char>(0xc0 | (cp >> 6));
            out += static_cast<char>(0x80 | (cp & 0x3f));
        } else if (cp < 0x10000) {
            out += static_cast<char>(0xe0 | (cp >> 12));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
            out += static_cast<char>(0x80 | (cp & 0x3f));
        } else {
            out += static_cast<char>(0xf0 | (cp >> 18));
            out += static_cast<char>(0x80 | ((cp >> 12) & 0x3f));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
            out += static_cast<char>(0x80 | (cp & 0x3f));
        }
    }

    std::string parse_string() {
        expect('"');
        std::string out;
        for (;;) {
            char c = take();
            if (c == '"') return out;
            if (c == '\\') {
                char e = take();
                switch (e) {
                    case '"': out += '"'; break;
                    case '\\': out += '\\'; break;
                    case 'n': out += '\n'; break;
                    case 't': out += '\t'; break;
                    case 'r': out += '\r'; break;
                    case 'u': {
                        unsigned cp = parse_hex4();
                        if (cp >= 0xd800 && cp <= 0xdbff) {
                            expect('\\');
                            expect('u');
                            unsigned lo = parse_hex4();
                            if (lo < 0xdc00 || lo > 0xdfff) fail("bad low surrogate");
                            cp = 0x10000 + ((cp - 0xd800) << 10) + (lo - 0xdc00);
                        } else if (cp >= 0xdc00 && cp <= 0xdfff) {
                            fail("lone surrogate");
                        }
                        append_utf8(out, cp);
                        break;
                    }
                    default:
                        --pos_;
                        fail("bad escape");
                }
            } else if (static_cast<unsigned char>(c) < 0x20) {
                --pos_;
                fail("raw control byte in string");
            } else {
                out += c;
            }
        }
    }

    Value parse_bytes() {
        expect('b');
        expect('"');
        std::vector<std::uint8_t> data;
        for (;;) {
            char c = take();
            if (c == '"') return Value(Bytes(std::move(data)));
            char d = take();
            auto nib = [this](char h) -> unsigned {
                if (h >= '0' && h <= '9') return static_cast<unsigned>(h - '0');
                if (h >= 'a' && h <= 'f') return static_cast<unsigned>(h - 'a' + 10);
                --pos_;
                fail("expected lowercase hex digit");
            };
            unsigned hi = nib(c);
            data.push_back(static_cast<std::uint8_t>((hi << 4) | nib(d)));
        }
    }

    Value parse_list(int depth) {
        expect('[');
        Value::List out;
        if (peek() == ']') {
            ++pos_;
            return Value(std::move(out));
        }
        for (;;) {
            out.push_back(parse_value(depth + 1));
            char c = take();
            if (c == ']') return Value(std::move(out));
            if (c != ',') {
                --pos_;
                fail("expected ',' or ']'");
            }
        }
    }

    Value parse_map(int depth) {
        expect('{');
        Value::Map out;
        if (peek() == '}') {
            ++pos_;
            return Value(std::move(out));
        }
        for (;;) {
            std::size_t key_pos = pos_;
            std::string key = parse_string();
            expect(':');
            Value v = parse_value(depth + 1);
            if (!out.emplace(std::move(key), std::move(v)).second)
                throw DecodeError(key_pos, "duplicate map key");
            char c = take();
            if (c == '}') return Value(std::move(out));
            if (c != ',') {
                --pos_;
                fail("expected ',' or '}'");
            }
        }
    }
};

}  // namespace detail

/// Parses one complete canonical text object. Throws DecodeError on any
/// malformed, truncated or trailing input.
inline Value parse_text(std::string_view text) {
    return detail::ValueReader(text).parse_document();
}

}  // namespace notibus
