#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cogmap {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structural violation: mismatched concept spaces, bad dimensions,
/// entries outside the range a matrix kind permits, and the like.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Caller misuse that is not a data problem (empty input list, missing flag).
class UsageError : public Error {
public:
    using Error::Error;
};

/// An iteration exceeded its step cap before any state recurred.
class IterationCapError : public Error {
public:
    IterationCapError(std::string msg, std::size_t cap)
        : Error(std::move(msg)), cap_(cap) {}
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

/// Score profiles are defined for fixed points only.
class ProfileUndefinedError : public Error {
public:
    ProfileUndefinedError(std::string msg, std::size_t cycle_length)
        : Error(std::move(msg)), cycle_length_(cycle_length) {}
    std::size_t cycle_length() const { return cycle_length_; }

private:
    std::size_t cycle_length_;
};

/// A linguistic term that is not a member of the declared chain.
class UnknownTermError : public Error {
public:
    using Error::Error;
};

/// 64-bit signed score arithmetic overflowed.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Text input rejected by a parser; carries the offending position.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(column) +
                ": " + msg),
          line_(line),
          column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class UnknownFixtureError : public Error {
public:
    using Error::Error;
};

} // namespace cogmap
