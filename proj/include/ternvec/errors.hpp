#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ternvec {

/// A precondition of an operation was violated by the caller.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed textual input. `position()` is a byte offset (graph6) or a
/// 1-based line number (edge lists); `what()` says which.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A well-formed request that the operation refuses: size bounds exceeded,
/// generator parameters outside every admissible clause, and the like.
class Rejected : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ternvec
