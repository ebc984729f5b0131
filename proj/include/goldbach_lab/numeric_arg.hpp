#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "goldbach_lab/error.hpp"

namespace goldbach_lab {

/// Parses a decimal natural; single underscores between digits are separators ("10_000_000").
inline std::uint64_t parse_natural(std::string_view text, std::string_view what = "value") {
    auto fail = [&] {
        throw Error(Errc::InvalidArgument, std::string(what) + ": '" + std::string(text) + "' is not a natural number");
    };
    if (text.empty() || text.front() == '_' || text.back() == '_') fail();
    std::string digits;
    digits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '_') {
            if (text[i - 1] == '_') fail();
            continue;
        }
        if (c < '0' || c > '9') fail();
        digits += c;
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) fail();
    return value;
}

}  // namespace goldbach_lab
