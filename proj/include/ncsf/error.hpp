#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncsf {

/// Malformed textual input. `position` is the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Well-formed input that violates an operation's precondition
/// (ground-set mismatch, truncation exceeded, non-homogeneous input, ...).
class SemanticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ncsf
