#pragma once

#include <stdexcept>
#include <string>

namespace hyperind {

/// Enumeration or solver budget exceeded. CLI maps this to exit code 4.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file. Carries a 1-based line number; CLI maps to exit code 3.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Parameters outside the domain of a formula (e.g. d >= n). CLI maps to exit code 2.
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace hyperind
