#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hankel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ContextMismatch : public Error {
public:
    ContextMismatch() : Error("incompatible contexts") {}
};

/// Invalid arguments or inputs outside an operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Raised by Buchberger's algorithm when the pair-reduction budget runs out.
class BudgetExhausted : public Error {
public:
    explicit BudgetExhausted(std::size_t pairs_processed)
        : Error("GB budget exhausted after " + std::to_string(pairs_processed) + " pair reductions"),
          pairs_processed_(pairs_processed) {}

    std::size_t pairs_processed() const noexcept { return pairs_processed_; }

private:
    std::size_t pairs_processed_;
};

/// Text input errors; `line` is 1-based, 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace hankel
