#ifndef RDOM_ERRORS_HPP
#define RDOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rdom {

// Malformed input text (edge-list documents and similar). Carries the 1-based
// physical line number of the offending line so callers can point at it.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// An argument outside an operation's domain: invalid family parameters,
// out-of-range k, a non-tree where a tree is required, and so on.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation that needs a connected graph received a disconnected one.
class ConnectivityError : public DomainError {
public:
    using DomainError::DomainError;
};

// An input larger than the configured search/construction size guard.
class SizeCapError : public DomainError {
public:
    using DomainError::DomainError;
};

// A requested (dim, gamma_k, gamma_rk) target value combination that no
// graph realizes.
class InfeasibleTripleError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace rdom

#endif  // RDOM_ERRORS_HPP
