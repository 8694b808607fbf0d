#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace nmsh::detail {

struct TextLine {
    std::size_t number = 0;
    std::vector<std::string> tokens;
};

/// Yields the non-blank, non-comment lines of a stream split on whitespace.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    std::optional<TextLine> next();
    /// Line number one past the last line read; used for end-of-input errors.
    std::size_t end_line() const noexcept { return line_ + 1; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

/// Parses an optionally signed base-10 integer; the whole token must match.
std::optional<mpz_class> parse_integer(std::string_view token);

} // namespace nmsh::detail
