#pragma once

#include <stdexcept>
#include <string>

namespace stag {

/// Bad arguments from a caller (invalid type/rank, rank mismatch, ...).
/// The CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A size/cost guard refused to run (group over the enumeration cap,
/// Koszul complex too large).  Also exit code 2 at the CLI.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal invariant failed.  Always a bug, never user error.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

/// The independent oracle disagreed with itself (e.g. Koszul cohomology
/// appearing off the expected degree).  Never silently ignored.
class OracleError : public std::runtime_error {
public:
    explicit OracleError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace stag
