#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grd {

// Malformed input text (scheme grammar, catalog references, Laurent literals).
// Carries the byte offset of the offending token when one is known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, std::size_t position = npos)
        : std::runtime_error(msg), position_(position) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool has_position() const { return position_ != npos; }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A precondition of an operation does not hold (non-GRD input, zero divisor,
// order gap where equal orders are required, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Witness construction ran out of window radius before finding a solution.
class WindowCapExceeded : public DomainError {
public:
    explicit WindowCapExceeded(const std::string& msg) : DomainError(msg) {}
};

}  // namespace grd
