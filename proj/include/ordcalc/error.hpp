#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordcalc {

// Work or nesting limits exceeded. Never approximated away.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : std::runtime_error("at " + std::to_string(position) + ": " + what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace ordcalc
