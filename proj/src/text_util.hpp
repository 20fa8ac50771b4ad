#pragma once

#include <charconv>
#include <string>

namespace quest::detail {

// Shortest decimal form that round-trips the exact double.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace quest::detail
