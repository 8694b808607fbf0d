#include "text_lines.hpp"

#include <sstream>

namespace nmsh::detail {

std::optional<TextLine> LineReader::next()
{
    std::string raw;
    while (std::getline(in_, raw)) {
        ++line_;
        const auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;

        TextLine line{line_, {}};
        std::istringstream words(raw);
        for (std::string w; words >> w;) line.tokens.push_back(std::move(w));
        return line;
    }
    return std::nullopt;
}

std::optional<mpz_class> parse_integer(std::string_view token)
{
    std::size_t pos = 0;
    if (!token.empty() && (token[0] == '-' || token[0] == '+')) pos = 1;
    if (pos == token.size()) return std::nullopt;
    for (std::size_t i = pos; i < token.size(); ++i) {
        if (token[i] < '0' || token[i] > '9') return std::nullopt;
    }
    // mpz_set_str rejects a leading '+'.
    const std::string digits(token[0] == '+' ? token.substr(1) : token);
    return mpz_class(digits, 10);
}

} // namespace nmsh::detail
