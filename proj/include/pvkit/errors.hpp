#pragma once

#include <stdexcept>
#include <string>

namespace pvkit {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Expression source rejected by the parser. Positions are 1-based
/// character offsets into the source text.
class ParseError : public Error {
public:
    ParseError(int position, const std::string& message)
        : Error("parse error at position " + std::to_string(position) + ": " + message),
          position_(position),
          detail_(message) {}

    int position() const noexcept { return position_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    int position_;
    std::string detail_;
};

enum class EvalErrorKind {
    DivisionByZero,
    LogOfZero,
    NonFinite,
    Domain,
};

/// Expression evaluation hit a pole, a branch-point, or overflow.
/// Non-finite intermediates are reported, never returned as values.
class EvalError : public Error {
public:
    EvalError(EvalErrorKind kind, int span_begin, int span_end, const std::string& message)
        : Error(message), kind_(kind), span_begin_(span_begin), span_end_(span_end) {}

    EvalErrorKind kind() const noexcept { return kind_; }
    int span_begin() const noexcept { return span_begin_; }
    int span_end() const noexcept { return span_end_; }

private:
    EvalErrorKind kind_;
    int span_begin_;
    int span_end_;
};

/// A numerical procedure could not reach its target tolerance.
class NonConvergenceError : public Error {
public:
    using Error::Error;
};

} // namespace pvkit
