#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace notibus {

// Stable error codes. They travel over the wire as the Error response's
// "code" string, so renaming one is a protocol change.
enum class ErrorCode {
    InvalidEvent,
    DecodeError,
    ParseError,
    FrameTooLarge,
    InvalidQos,
    NoSuchChannel,
    NoSuchProxy,
    AlreadyBound,
    MissingContext,
    InvalidName,
    CannotRebindContext,
    NotFound,
    ContextNotEmpty,
    NotAContext,
    NoSuchSet,
    NoSuchProperty,
    NoSuchLog,
    DuplicateLog,
    UnknownKind,
    ProtocolVersionMismatch,
    ProxyBusy,
    BadRequest,
    IoError,
};

inline std::string_view to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidEvent: return "InvalidEvent";
        case ErrorCode::DecodeError: return "DecodeError";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::FrameTooLarge: return "FrameTooLarge";
        case ErrorCode::InvalidQos: return "InvalidQos";
        case ErrorCode::NoSuchChannel: return "NoSuchChannel";
        case ErrorCode::NoSuchProxy: return "NoSuchProxy";
        case ErrorCode::AlreadyBound: return "AlreadyBound";
        case ErrorCode::MissingContext: return "MissingContext";
        case ErrorCode::InvalidName: return "InvalidName";
        case ErrorCode::CannotRebindContext: return "CannotRebindContext";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::ContextNotEmpty: return "ContextNotEmpty";
        case ErrorCode::NotAContext: return "NotAContext";
        case ErrorCode::NoSuchSet: return "NoSuchSet";
        case ErrorCode::NoSuchProperty: return "NoSuchProperty";
        case ErrorCode::NoSuchLog: return "NoSuchLog";
        case ErrorCode::DuplicateLog: return "DuplicateLog";
        case ErrorCode::UnknownKind: return "UnknownKind";
        case ErrorCode::ProtocolVersionMismatch: return "ProtocolVersionMismatch";
        case ErrorCode::ProxyBusy: return "ProxyBusy";
        case ErrorCode::BadRequest: return "BadRequest";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code),
          message_(std::move(message)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& message() const noexcept { return message_; }

private:
    ErrorCode code_;
    std::string message_;
};

/// Malformed bytes while decoding a value, event, message or frame.
/// Carries the byte offset where decoding gave up.
class DecodeError : public Error {
public:
    DecodeError(std::size_t position, std::string reason)
        : Error(ErrorCode::DecodeError, "at " + std::to_string(position) + ": " + reason),
          position_(position), reason_(std::move(reason)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t position_;
    std::string reason_;
};

/// Syntax error in the constraint language. `expected` names the token
/// class the parser was looking for at `offset`.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::string expected)
        : Error(ErrorCode::ParseError,
                "at offset " + std::to_string(offset) + ": expected " + expected),
          offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

}  // namespace notibus
