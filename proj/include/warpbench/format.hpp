#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace warpbench {

/// Shortest decimal text that parses back to the same double.
inline std::string shortest(double value)
{
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) return std::to_string(value);
    return std::string(buf, end);
}

} // namespace warpbench
