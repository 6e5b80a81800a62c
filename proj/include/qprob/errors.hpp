#pragma once

#include <stdexcept>
#include <string>

namespace qprob {

/// Parameter outside an operation's mathematical domain (bad regime,
/// vanishing factor under a negative exponent, infeasible state, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed textual input (rational literals, CLI values).
struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Request exceeds a deliberate enumeration guard.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qprob
