#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdfa {

/// Base class of every error raised by the library. The CLI maps these to
/// exit status 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class AlphabetError : public Error {
public:
    using Error::Error;
};

/// The strict pairs of a rank order close into a cycle.
class OrderCycleError : public Error {
public:
    using Error::Error;
};

/// A structurally invalid automaton (bad target, non-surjective ranking, ...).
class AutomatonError : public Error {
public:
    using Error::Error;
};

/// The closure of a sample derives contradictory labels for one word pair.
class ClosureConflictError : public Error {
public:
    using Error::Error;
};

/// A partition block holds two states with distinct defined ranks.
class RankingInconsistentError : public Error {
public:
    using Error::Error;
};

class UnreachableStateError : public Error {
public:
    using Error::Error;
};

class BoundsExceededError : public Error {
public:
    using Error::Error;
};

class RetryExhaustedError : public Error {
public:
    using Error::Error;
};

/// A word set that must be nonempty is empty.
class EmptySetError : public Error {
public:
    using Error::Error;
};

}  // namespace pdfa
