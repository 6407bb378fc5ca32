#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace patternforge {

/// Base of every error raised by the library. Callers that only need a
/// message can catch this; the CLI maps concrete types to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidPattern : public Error {
public:
    using Error::Error;
};

/// Malformed word / marked-word text, or a span that does not match the factor.
class InvalidWord : public Error {
public:
    using Error::Error;
};

class Unclassifiable : public Error {
public:
    using Error::Error;
};

class NotDelta : public Error {
public:
    using Error::Error;
};

class NotGamma : public Error {
public:
    using Error::Error;
};

class NoMarkedPoint : public Error {
public:
    using Error::Error;
};

/// A cut point fell strictly inside a marked span. Internal bug guard.
class SpanSplit : public Error {
public:
    using Error::Error;
};

class MultiplicityMismatch : public Error {
public:
    using Error::Error;
};

/// A word ended a level with net multiplicity outside {0, 1}.
class NetOutOfRange : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class NegativeLabel : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace patternforge
