#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ifpt {

// Caller broke a documented precondition.
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A structural claim the solvers rely on did not hold on this input.
class StructureViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// minimum_vertex_separator called with s == t or s adjacent to t.
class NoSeparator : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Brute-force oracle asked to do more work than its configured bound.
class WorkBoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace ifpt
