#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <optional>
#include <string>
#include <string_view>

namespace sstf {

// Exact rational arithmetic for heights and critical values. Keeping these
// exact makes every ordering decision reproducible across platforms.
using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts "3", "-2", "5/4", "-7/2". Returns nullopt on malformed input or a
// zero denominator.
inline std::optional<Rational> parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s) -> std::optional<long long> {
        if (s.empty()) return std::nullopt;
        long long value = 0;
        const char* first = s.data();
        const char* last = s.data() + s.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) return std::nullopt;
        return value;
    };

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(text);
        if (!n) return std::nullopt;
        return Rational(*n);
    }
    auto num = parse_int(text.substr(0, slash));
    auto den = parse_int(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
}

}  // namespace sstf
