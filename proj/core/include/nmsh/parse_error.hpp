#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nmsh {

/// Malformed text input. line() is 1-based; what() reads "line N: <message>".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line), message_(message) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::string message_;
};

} // namespace nmsh
