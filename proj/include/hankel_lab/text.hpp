#ifndef HANKEL_LAB_TEXT_HPP
#define HANKEL_LAB_TEXT_HPP

#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace hankel_lab {

/// 17 significant digits in scientific notation, independent of locale.
inline std::string format_real(double v)
{
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific, 16);
    return std::string(buf.data(), res.ptr);
}

namespace detail {
inline double parse_double_exact(std::string_view s)
{
    double v = 0.0;
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw std::invalid_argument("not a number: '" + std::string(s) + "'");
    }
    return v;
}
} // namespace detail

inline double parse_real(std::string_view s)
{
    return detail::parse_double_exact(s);
}

/// Parses `re`, `imi`, `re+imi` or `re-imi` (e.g. "0.1+0.2i", "-3e-2i", "i").
inline std::complex<double> parse_complex(std::string_view s)
{
    if (s.empty()) {
        throw std::invalid_argument("empty complex literal");
    }
    if (s.back() != 'i') {
        return {detail::parse_double_exact(s), 0.0};
    }
    s.remove_suffix(1);

    // Split at the last sign that is neither leading nor an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_part = [](std::string_view t) {
        if (t.empty() || t == "+") {
            return 1.0;
        }
        if (t == "-") {
            return -1.0;
        }
        return detail::parse_double_exact(t);
    };
    if (split == std::string_view::npos) {
        return {0.0, imag_part(s)};
    }
    return {detail::parse_double_exact(s.substr(0, split)), imag_part(s.substr(split))};
}

/// Comma-separated list of complex literals.
inline std::vector<std::complex<double>> parse_complex_list(std::string_view s)
{
    std::vector<std::complex<double>> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = s.find(',', start);
        out.push_back(parse_complex(s.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

/// Inclusive range `lo:hi:step` sampled as lo + k*step, k = 0..n-1.
struct real_range {
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;

    std::size_t count() const
    {
        return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    }

    double at(std::size_t k) const { return lo + static_cast<double>(k) * step; }
};

inline real_range parse_range(std::string_view s)
{
    const std::size_t c1 = s.find(':');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : s.find(':', c1 + 1);
    if (c2 == std::string_view::npos) {
        throw std::invalid_argument("range must have the form lo:hi:step");
    }
    real_range r{
        detail::parse_double_exact(s.substr(0, c1)),
        detail::parse_double_exact(s.substr(c1 + 1, c2 - c1 - 1)),
        detail::parse_double_exact(s.substr(c2 + 1)),
    };
    if (!(r.step > 0.0 && r.step <= 0.1)) {
        throw std::invalid_argument("range step must lie in (0, 0.1]");
    }
    if (!(r.hi >= r.lo)) {
        throw std::invalid_argument("empty range");
    }
    return r;
}

} // namespace hankel_lab

#endif
