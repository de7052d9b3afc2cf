#pragma once

#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "notibus/event.hpp"
#include "notibus/value.hpp"

namespace notibus {

// Constraint language, a small relative of the OMG trader constraint
// grammar (case-sensitive keywords, lowest precedence first):
//
//   constraint := or
//   or         := and { "or" and }
//   and        := not { "and" not }
//   not        := "not" not | prim
//   prim       := compare | "(" or ")" | "exist" field | "true" | "false"
//   compare    := operand relop operand
//   relop      := "==" | "!=" | "<" | "<=" | ">" | ">=" | "~"
//   operand    := field | literal
//   field      := "$domain_name" | "$type_name" | "$event_name" | "$." ident
//   literal    := int | float | "'" chars "'" | "true" | "false"
//
// "~" is string containment (left contains right). Evaluation is total:
// missing fields and type-mismatched comparisons yield false, never an
// error, so a bad filter cannot take the broker down.

enum class RelOp { Eq, Ne, Lt, Le, Gt, Ge, Contains };

inline std::string_view to_string(RelOp op) {
    switch (op) {
        case RelOp::Eq: return "==";
        case RelOp::Ne: return "!=";
        case RelOp::Lt: return "<";
        case RelOp::Le: return "<=";
        case RelOp::Gt: return ">";
        case RelOp::Ge: return ">=";
        case RelOp::Contains: return "~";
    }
    return "?";
}

struct FieldRef {
    enum class Kind { DomainName, TypeName, EventName, Body };
    Kind kind = Kind::Body;
    std::string ident;  // meaningful only for Body

    static FieldRef body(std::string name) { return {Kind::Body, std::move(name)}; }
    bool operator==(const FieldRef&) const = default;
};

/// Field reference or scalar literal.
class Operand {
public:
    Operand(FieldRef f) : v_(std::move(f)) {}
    Operand(Value lit) : v_(std::move(lit)) {}

    bool is_field() const { return std::holds_alternative<FieldRef>(v_); }
    const FieldRef& field() const { return std::get<FieldRef>(v_); }
    const Value& literal() const { return std::get<Value>(v_); }

    bool operator==(const Operand&) const = default;

private:
    std::variant<FieldRef, Value> v_;
};

class Constraint;
using ConstraintPtr = std::shared_ptr<const Constraint>;

class Constraint {
public:
    struct Or {
        ConstraintPtr left, right;
    };
    struct And {
        ConstraintPtr left, right;
    };
    struct Not {
        ConstraintPtr child;
    };
    struct Compare {
        Operand left;
        RelOp op;
        Operand right;
    };
    struct Exists {
        FieldRef field;
    };
    struct BoolLit {
        bool value;
    };
    using Node = std::variant<Or, And, Not, Compare, Exists, BoolLit>;

    explicit Constraint(Node n) : node_(std::move(n)) {}
    const Node& node() const { return node_; }

    static ConstraintPtr make(Node n) { return std::make_shared<Constraint>(std::move(n)); }
    static ConstraintPtr make_or(ConstraintPtr l, ConstraintPtr r) {
        return make(Or{std::move(l), std::move(r)});
    }
    static ConstraintPtr make_and(ConstraintPtr l, ConstraintPtr r) {
        return make(And{std::move(l), std::move(r)});
    }
    static ConstraintPtr make_not(ConstraintPtr c) { return make(Not{std::move(c)}); }
    static ConstraintPtr make_compare(Operand l, RelOp op, Operand r) {
        return make(Compare{std::move(l), op, std::move(r)});
    }
    static ConstraintPtr make_exists(FieldRef f) { return make(Exists{std::move(f)}); }
    static ConstraintPtr make_bool(bool b) { return make(BoolLit{b}); }

private:
    Node node_;
};

inline bool operator==(const Constraint& a, const Constraint& b) {
    const auto& na = a.node();
    const auto& nb = b.node();
    if (na.index() != nb.index()) return false;
    if (auto* x = std::get_if<Constraint::Or>(&na)) {
        auto* y = std::get_if<Constraint::Or>(&nb);
        return *x->left == *y->left && *x->right == *y->right;
    }
    if (auto* x = std::get_if<Constraint::And>(&na)) {
        auto* y = std::get_if<Constraint::And>(&nb);
        return *x->left == *y->left && *x->right == *y->right;
    }
    if (auto* x = std::get_if<Constraint::Not>(&na)) {
        return *x->child == *std::get_if<Constraint::Not>(&nb)->child;
    }
    if (auto* x = std::get_if<Constraint::Compare>(&na)) {
        auto* y = std::get_if<Constraint::Compare>(&nb);
        return x->op == y->op && x->left == y->left && x->right == y->right;
    }
    if (auto* x = std::get_if<Constraint::Exists>(&na)) {
        return x->field == std::get_if<Constraint::Exists>(&nb)->field;
    }
    return std::get_if<Constraint::BoolLit>(&na)->value ==
           std::get_if<Constraint::BoolLit>(&nb)->value;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

struct Token {
    enum class Kind {
        KwOr,
        KwAnd,
        KwNot,
        KwExist,
        KwTrue,
        KwFalse,
        LParen,
        RParen,
        Rel,
        Field,
        Int,
        Float,
        Str,
        End,
    };
    Kind kind;
    std::size_t offset;
    RelOp rel{};
    FieldRef field{};
    std::int64_t int_value{};
    double float_value{};
    std::string str_value{};
};

class ConstraintLexer {
public:
    explicit ConstraintLexer(std::string_view text) : text_(text) { advance(); }

    const Token& current() const { return tok_; }
    Token take() {
        Token t = std::move(tok_);
        advance();
        return t;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    Token tok_;

    [[noreturn]] void fail(std::size_t at, const char* expected) const {
        throw ParseError(at, expected);
    }

    static bool ident_start(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }
    static bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

    std::string_view read_ident() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    void advance() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
        tok_ = Token{};
        tok_.offset = pos_;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::Kind::End;
            return;
        }
        char c = text_[pos_];
        switch (c) {
            case '(': ++pos_; tok_.kind = Token::Kind::LParen; return;
            case ')': ++pos_; tok_.kind = Token::Kind::RParen; return;
            case '~': ++pos_; tok_.kind = Token::Kind::Rel; tok_.rel = RelOp::Contains; return;
            case '=':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
                    pos_ += 2;
                    tok_.kind = Token::Kind::Rel;
                    tok_.rel = RelOp::Eq;
                    return;
                }
                fail(pos_, "'=='");
            case '!':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
                    pos_ += 2;
                    tok_.kind = Token::Kind::Rel;
                    tok_.rel = RelOp::Ne;
                    return;
                }
                fail(pos_, "'!='");
            case '<':
            case '>': {
                ++pos_;
                bool eq = pos_ < text_.size() && text_[pos_] == '=';
                if (eq) ++pos_;
                tok_.kind = Token::Kind::Rel;
                tok_.rel = c == '<' ? (eq ? RelOp::Le : RelOp::Lt) : (eq ? RelOp::Ge : RelOp::Gt);
                return;
            }
            case '$': read_field(); return;
            case '\'': read_string(); return;
            default: break;
        }
        if (c == '-' || (c >= '0' && c <= '9')) {
            read_number();
            return;
        }
        if (ident_start(c)) {
            std::string_view w = read_ident();
            if (w == "or") tok_.kind = Token::Kind::KwOr;
            else if (w == "and") tok_.kind = Token::Kind::KwAnd;
            else if (w == "not") tok_.kind = Token::Kind::KwNot;
            else if (w == "exist") tok_.kind = Token::Kind::KwExist;
            else if (w == "true") tok_.kind = Token::Kind::KwTrue;
            else if (w == "false") tok_.kind = Token::Kind::KwFalse;
            else if (w == "inf") {
                tok_.kind = Token::Kind::Float;
                tok_.float_value = std::numeric_limits<double>::infinity();
            } else if (w == "nan") {
                tok_.kind = Token::Kind::Float;
                tok_.float_value = std::nan("");
            } else {
                fail(tok_.offset, "keyword, field or literal");
            }
            return;
        }
        fail(pos_, "token");
    }

    void read_field() {
        std::size_t start = pos_;
        ++pos_;  // '$'
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail(pos_, "identifier");
            tok_.kind = Token::Kind::Field;
            tok_.field = FieldRef::body(std::string(read_ident()));
            return;
        }
        std::string_view w = read_ident();
        tok_.kind = Token::Kind::Field;
        if (w == "domain_name") tok_.field = {FieldRef::Kind::DomainName, {}};
        else if (w == "type_name") tok_.field = {FieldRef::Kind::TypeName, {}};
        else if (w == "event_name") tok_.field = {FieldRef::Kind::EventName, {}};
        else fail(start, "$domain_name, $type_name, $event_name or $.ident");
    }

    void read_number() {
        std::size_t start = pos_;
        if (text_[pos_] == '-') ++pos_;
        if (pos_ + 3 <= text_.size() && text_.substr(pos_, 3) == "inf" &&
            (pos_ + 3 == text_.size() || !ident_char(text_[pos_ + 3]))) {
            pos_ += 3;
            tok_.kind = Token::Kind::Float;
            tok_.float_value = -std::numeric_limits<double>::infinity();
            return;
        }
        std::size_t digits = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (pos_ == digits) fail(start, "number");
        bool is_float = false;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            is_float = true;
            ++pos_;
            std::size_t frac = pos_;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
            if (pos_ == frac) fail(pos_, "digit after '.'");
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            is_float = true;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            std::size_t ed = pos_;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
            if (pos_ == ed) fail(pos_, "exponent digit");
        }
        std::string_view tokt = text_.substr(start, pos_ - start);
        if (is_float) {
            tok_.kind = Token::Kind::Float;
            auto [p, ec] = std::from_chars(tokt.data(), tokt.data() + tokt.size(),
                                           tok_.float_value);
            if (ec != std::errc()) fail(start, "float literal");
        } else {
            tok_.kind = Token::Kind::Int;
            auto [p, ec] =
                std::from_chars(tokt.data(), tokt.data() + tokt.size(), tok_.int_value);
            if (ec != std::errc()) fail(start, "integer literal in range");
        }
    }

    void read_string() {
        std::size_t start = pos_;
        ++pos_;  // opening quote
        std::string out;
        while (pos_ < text_.size()) {
            char c = text_[pos_++];
            if (c == '\'') {
                tok_.kind = Token::Kind::Str;
                tok_.str_value = std::move(out);
                return;
            }
            if (c == '\\') {
                if (pos_ >= text_.size()) break;
                char e = text_[pos_++];
                switch (e) {
                    case '\'': out += '\''; break;
                    case '\\': out += '\\'; break;
                    case 'n': out += '\n'; break;
                    case 't': out += '\t'; break;
                    case 'r': out += '\r'; break;
                    case 'u': {
                        unsigned cp = 0;
                        for (int i = 0; i < 4; ++i) {
                            if (pos_ >= text_.size()) fail(pos_, "hex digit");
                            char h = text_[pos_++];
                            cp <<= 4;
                            if (h >= '0' && h <= '9') cp |= static_cast<unsigned>(h - '0');
                            else if (h >= 'a' && h <= 'f') cp |= static_cast<unsigned>(h - 'a' + 10);
                            else if (h >= 'A' && h <= 'F') cp |= static_cast<unsigned>(h - 'A' + 10);
                            else fail(pos_ - 1, "hex digit");
                        }
                        // \u escapes in constraint strings cover only BMP
                        // code points; anything else travels as raw UTF-8.
                        if (cp >= 0xd800 && cp <= 0xdfff) fail(pos_ - 6, "non-surrogate escape");
                        if (cp < 0x80) {
                            out += static_cast<char>(cp);
                        } else if (cp < 0x800) {
                            out += static_cast<char>(0xc0 | (cp >> 6));
                            out += static_cast<char>(0x80 | (cp & 0x3f));
                        } else {
                            out += static_cast<char>(0xe0 | (cp >> 12));
                            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
                            out += static_cast<char>(0x80 | (cp & 0x3f));
                        }
                        break;
                    }
                    default: fail(pos_ - 1, "escape");
                }
            } else {
                out += c;
            }
        }
        fail(start, "closing quote");
    }
};

class ConstraintParser {
public:
    static constexpr int kMaxDepth = 200;

    explicit ConstraintParser(std::string_view text) : lex_(text) {}

    ConstraintPtr parse() {
        if (lex_.current().kind == Token::Kind::End) return Constraint::make_bool(true);
        ConstraintPtr c = parse_or(0);
        if (lex_.current().kind != Token::Kind::End)
            throw ParseError(lex_.current().offset, "end of input");
        return c;
    }

private:
    ConstraintLexer lex_;

    void check_depth(int depth, std::size_t offset) const {
        if (depth > kMaxDepth) throw ParseError(offset, "shallower nesting");
    }

    ConstraintPtr parse_or(int depth) {
        check_depth(depth, lex_.current().offset);
        ConstraintPtr left = parse_and(depth + 1);
        while (lex_.current().kind == Token::Kind::KwOr) {
            lex_.take();
            left = Constraint::make_or(std::move(left), parse_and(depth + 1));
        }
        return left;
    }

    ConstraintPtr parse_and(int depth) {
        check_depth(depth, lex_.current().offset);
        ConstraintPtr left = parse_not(depth + 1);
        while (lex_.current().kind == Token::Kind::KwAnd) {
            lex_.take();
            left = Constraint::make_and(std::move(left), parse_not(depth + 1));
        }
        return left;
    }

    ConstraintPtr parse_not(int depth) {
        check_depth(depth, lex_.current().offset);
        if (lex_.current().kind == Token::Kind::KwNot) {
            lex_.take();
            return Constraint::make_not(parse_not(depth + 1));
        }
        return parse_prim(depth + 1);
    }

    ConstraintPtr parse_prim(int depth) {
        check_depth(depth, lex_.current().offset);
        const Token& t = lex_.current();
        switch (t.kind) {
            case Token::Kind::LParen: {
                lex_.take();
                ConstraintPtr c = parse_or(depth + 1);
                if (lex_.current().kind != Token::Kind::RParen)
                    throw ParseError(lex_.current().offset, "')'");
                lex_.take();
                return c;
            }
            case Token::Kind::KwExist: {
                lex_.take();
                if (lex_.current().kind != Token::Kind::Field)
                    throw ParseError(lex_.current().offset, "field");
                return Constraint::make_exists(lex_.take().field);
            }
            case Token::Kind::KwTrue:
            case Token::Kind::KwFalse: {
                // "true"/"false" is a bool literal operand when a relop
                // follows, otherwise a BoolLit prim.
                bool v = t.kind == Token::Kind::KwTrue;
                lex_.take();
                if (lex_.current().kind == Token::Kind::Rel) {
                    RelOp op = lex_.take().rel;
                    return Constraint::make_compare(Operand(Value(v)), op, parse_operand());
                }
                return Constraint::make_bool(v);
            }
            case Token::Kind::Field:
            case Token::Kind::Int:
            case Token::Kind::Float:
            case Token::Kind::Str: {
                Operand left = parse_operand();
                if (lex_.current().kind != Token::Kind::Rel)
                    throw ParseError(lex_.current().offset, "relational operator");
                RelOp op = lex_.take().rel;
                return Constraint::make_compare(std::move(left), op, parse_operand());
            }
            default: throw ParseError(t.offset, "constraint");
        }
    }

    Operand parse_operand() {
        const Token& t = lex_.current();
        switch (t.kind) {
            case Token::Kind::Field: return Operand(lex_.take().field);
            case Token::Kind::Int: return Operand(Value(lex_.take().int_value));
            case Token::Kind::Float: return Operand(Value(lex_.take().float_value));
            case Token::Kind::Str: return Operand(Value(lex_.take().str_value));
            case Token::Kind::KwTrue: lex_.take(); return Operand(Value(true));
            case Token::Kind::KwFalse: lex_.take(); return Operand(Value(false));
            default: throw ParseError(t.offset, "operand");
        }
    }
};

inline void print_field(std::string& out, const FieldRef& f) {
    switch (f.kind) {
        case FieldRef::Kind::DomainName: out += "$domain_name"; return;
        case FieldRef::Kind::TypeName: out += "$type_name"; return;
        case FieldRef::Kind::EventName: out += "$event_name"; return;
        case FieldRef::Kind::Body:
            out += "$.";
            out += f.ident;
            return;
    }
}

inline void print_operand(std::string& out, const Operand& o) {
    if (o.is_field()) {
        print_field(out, o.field());
        return;
    }
    const Value& v = o.literal();
    switch (v.kind()) {
        case Value::Kind::Bool: out += v.as_bool() ? "true" : "false"; return;
        case Value::Kind::Int: write_int(out, v.as_int()); return;
        case Value::Kind::Float: write_float(out, v.as_float()); return;
        case Value::Kind::Str: {
            out += '\'';
            for (unsigned char c : v.as_str()) {
                switch (c) {
                    case '\'': out += "\\'"; break;
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
            out += '\'';
            return;
        }
        default: out += "false"; return;  // non-scalar literals cannot be constructed via parse
    }
}

inline void print_node(std::string& out, const Constraint& c) {
    const auto& n = c.node();
    if (auto* x = std::get_if<Constraint::Or>(&n)) {
        out += '(';
        print_node(out, *x->left);
        out += " or ";
        print_node(out, *x->right);
        out += ')';
    } else if (auto* x = std::get_if<Constraint::And>(&n)) {
        out += '(';
        print_node(out, *x->left);
        out += " and ";
        print_node(out, *x->right);
        out += ')';
    } else if (auto* x = std::get_if<Constraint::Not>(&n)) {
        out += "(not ";
        print_node(out, *x->child);
        out += ')';
    } else if (auto* x = std::get_if<Constraint::Compare>(&n)) {
        out += '(';
        print_operand(out, x->left);
        out += ' ';
        out += to_string(x->op);
        out += ' ';
        print_operand(out, x->right);
        out += ')';
    } else if (auto* x = std::get_if<Constraint::Exists>(&n)) {
        out += "(exist ";
        print_field(out, x->field);
        out += ')';
    } else {
        out += std::get_if<Constraint::BoolLit>(&n)->value ? "true" : "false";
    }
}

}  // namespace detail

/// Parses constraint text into an AST. Empty or whitespace-only text is the
/// match-everything constraint.
inline ConstraintPtr parse_constraint(std::string_view text) {
    return detail::ConstraintParser(text).parse();
}

/// Fully parenthesized text form; parse_constraint(print_constraint(c)) == c.
inline std::string print_constraint(const Constraint& c) {
    std::string out;
    detail::print_node(out, c);
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace detail {

inline const Value* resolve_field(const FieldRef& f, const StructuredEvent& e,
                                  Value& header_storage) {
    switch (f.kind) {
        case FieldRef::Kind::DomainName:
            header_storage = Value(e.header.domain_name);
            return &header_storage;
        case FieldRef::Kind::TypeName:
            header_storage = Value(e.header.type_name);
            return &header_storage;
        case FieldRef::Kind::EventName:
            header_storage = Value(e.header.event_name);
            return &header_storage;
        case FieldRef::Kind::Body: {
            auto it = e.filterable_body.find(f.ident);
            return it == e.filterable_body.end() ? nullptr : &it->second;
        }
    }
    return nullptr;
}

inline bool numeric_kind(const Value& v) { return v.is_int() || v.is_float(); }

inline double as_number(const Value& v) {
    // Int magnitudes beyond 2^53 may round here; accepted and documented.
    return v.is_int() ? static_cast<double>(v.as_int()) : v.as_float();
}

inline bool order_result(RelOp op, int cmp) {
    switch (op) {
        case RelOp::Eq: return cmp == 0;
        case RelOp::Ne: return cmp != 0;
        case RelOp::Lt: return cmp < 0;
        case RelOp::Le: return cmp <= 0;
        case RelOp::Gt: return cmp > 0;
        case RelOp::Ge: return cmp >= 0;
        case RelOp::Contains: return false;
    }
    return false;
}

inline bool compare_values(const Value& a, RelOp op, const Value& b) {
    if (numeric_kind(a) && numeric_kind(b)) {
        if (op == RelOp::Contains) return false;
        double x = as_number(a), y = as_number(b);
        if (std::isnan(x) || std::isnan(y)) return false;
        return order_result(op, x < y ? -1 : (x > y ? 1 : 0));
    }
    if (a.is_str() && b.is_str()) {
        if (op == RelOp::Contains) return a.as_str().find(b.as_str()) != std::string::npos;
        int cmp = a.as_str().compare(b.as_str());
        return order_result(op, cmp < 0 ? -1 : (cmp > 0 ? 1 : 0));
    }
    if (a.is_bool() && b.is_bool()) {
        if (op == RelOp::Eq) return a.as_bool() == b.as_bool();
        if (op == RelOp::Ne) return a.as_bool() != b.as_bool();
        return false;
    }
    if (a.is_null() && b.is_null()) {
        return op == RelOp::Eq;
    }
    return false;  // incompatible types
}

}  // namespace detail

/// Total Boolean evaluation against a valid event: missing fields and type
/// mismatches make the enclosing comparison false. Pure; never throws.
inline bool eval_constraint(const Constraint& c, const StructuredEvent& e) {
    const auto& n = c.node();
    if (auto* x = std::get_if<Constraint::Or>(&n))
        return eval_constraint(*x->left, e) || eval_constraint(*x->right, e);
    if (auto* x = std::get_if<Constraint::And>(&n))
        return eval_constraint(*x->left, e) && eval_constraint(*x->right, e);
    if (auto* x = std::get_if<Constraint::Not>(&n)) return !eval_constraint(*x->child, e);
    if (auto* x = std::get_if<Constraint::Compare>(&n)) {
        Value ls, rs;
        const Value* lv =
            x->left.is_field() ? detail::resolve_field(x->left.field(), e, ls) : &x->left.literal();
        const Value* rv = x->right.is_field() ? detail::resolve_field(x->right.field(), e, rs)
                                              : &x->right.literal();
        if (!lv || !rv) return false;
        return detail::compare_values(*lv, x->op, *rv);
    }
    if (auto* x = std::get_if<Constraint::Exists>(&n)) {
        if (x->field.kind != FieldRef::Kind::Body) return true;  // header fields always exist
        return e.filterable_body.contains(x->field.ident);
    }
    return std::get_if<Constraint::BoolLit>(&n)->value;
}

// ---------------------------------------------------------------------------
// Type-level subscriptions

/// Coarse (domain, type) subscription with "*" wildcards. Empty pattern list
/// subscribes to everything.
struct Subscription {
    std::vector<std::pair<std::string, std::string>> patterns;

    bool operator==(const Subscription&) const = default;
};

inline bool match_subscription(const Subscription& s, const FixedHeader& h) {
    if (s.patterns.empty()) return true;
    for (const auto& [domain, type] : s.patterns) {
        if ((domain == "*" || domain == h.domain_name) && (type == "*" || type == h.type_name))
            return true;
    }
    return false;
}

}  // namespace notibus
