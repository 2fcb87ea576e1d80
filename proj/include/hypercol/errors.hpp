#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypercol {

/// Precondition violated by a caller-supplied argument.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input (hgr, DIMACS, solver output). Carries the 1-based line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A search ran out of its node budget before reaching a decision.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t budget)
        : std::runtime_error("node budget of " + std::to_string(budget) + " exceeded"),
          budget_(budget) {}

    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t budget_;
};

/// No proper colouring exists with at most the permitted number of colours.
class BoundExceeded : public std::runtime_error {
public:
    explicit BoundExceeded(std::size_t kmax)
        : std::runtime_error("no proper colouring with at most " + std::to_string(kmax) +
                             " colours"),
          kmax_(kmax) {}

    std::size_t kmax() const noexcept { return kmax_; }

private:
    std::size_t kmax_;
};

/// A truth assignment that does not describe a colouring.
class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hypercol
