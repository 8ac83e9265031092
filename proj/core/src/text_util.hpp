#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>

namespace fersml::detail {

// Shortest decimal form that parses back to exactly the same double.
inline std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;  // to_chars cannot fail with this buffer size
    return std::string(buf, ptr);
}

inline std::optional<std::int64_t> parse_int64(std::string_view text) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return value;
}

// Decimal and exponent forms; rejects hex, infinities, NaN, and trailing
// garbage.
inline std::optional<double> parse_double(std::string_view text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value,
                                           std::chars_format::general);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return value;
}

}  // namespace fersml::detail
