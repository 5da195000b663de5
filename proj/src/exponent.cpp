#include "opnorm/exponent.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

namespace opnorm {

ExtendedExponent::ExtendedExponent(double p)
{
    if (!std::isfinite(p) || p < 1.0)
        throw ExponentError("exponent must be a finite value >= 1 (use infinity() for inf)");
    value_ = p;
    reciprocal_ = 1.0 / p;
    conj_reciprocal_ = (p - 1.0) / p;
    infinite_ = false;
    conj_infinite_ = (p == 1.0);
    conj_value_ = conj_infinite_ ? 0.0 : p / (p - 1.0);
}

ExtendedExponent ExtendedExponent::infinity() noexcept
{
    return ExtendedExponent(0.0, 0.0, 1.0, 1.0, true, false);
}

ExtendedExponent ExtendedExponent::from_reciprocal(double u)
{
    if (!(u >= 0.0 && u <= 1.0))
        throw ExponentError("reciprocal exponent must lie in [0, 1]");
    if (u == 0.0)
        return infinity();
    if (u == 1.0)
        return ExtendedExponent(1.0);
    const double w = 1.0 - u;
    return ExtendedExponent(1.0 / u, u, 1.0 / w, w, false, false);
}

ExtendedExponent ExtendedExponent::from_ratio(long long numerator, long long denominator)
{
    if (denominator < 1 || numerator < denominator)
        throw ExponentError("rational exponent a/b needs a >= b >= 1");
    if (numerator == denominator)
        return ExtendedExponent(1.0);
    const auto a = static_cast<double>(numerator);
    const auto b = static_cast<double>(denominator);
    const auto d = static_cast<double>(numerator - denominator);
    return ExtendedExponent(a / b, b / a, a / d, d / a, false, false);
}

ExtendedExponent ExtendedExponent::parse(std::string_view text)
{
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);
    if (text == "inf")
        return infinity();
    if (text.empty())
        throw ExponentError("empty exponent");

    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        long long a = 0, b = 0;
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        auto r1 = std::from_chars(num.data(), num.data() + num.size(), a);
        auto r2 = std::from_chars(den.data(), den.data() + den.size(), b);
        if (r1.ec != std::errc{} || r1.ptr != num.data() + num.size() || r2.ec != std::errc{} ||
            r2.ptr != den.data() + den.size())
            throw ExponentError("malformed rational exponent '" + std::string(text) + "'");
        return from_ratio(a, b);
    }

    double p = 0.0;
    auto r = std::from_chars(text.data(), text.data() + text.size(), p);
    if (r.ec != std::errc{} || r.ptr != text.data() + text.size() || !std::isfinite(p))
        throw ExponentError("malformed exponent '" + std::string(text) + "'");
    if (p < 1.0)
        throw ExponentError("exponent '" + std::string(text) + "' is below 1");
    return ExtendedExponent(p);
}

double ExtendedExponent::value() const noexcept
{
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

ExtendedExponent ExtendedExponent::conjugate() const noexcept
{
    return ExtendedExponent(conj_value_, conj_reciprocal_, value_, reciprocal_, conj_infinite_, infinite_);
}

bool operator==(const ExtendedExponent& a, const ExtendedExponent& b) noexcept
{
    if (a.infinite_ || b.infinite_)
        return a.infinite_ == b.infinite_;
    const auto sentinel = [](double v) { return v == 1.0 || v == 2.0; };
    if (sentinel(a.value_) || sentinel(b.value_))
        return a.value_ == b.value_;
    return std::abs(a.value_ - b.value_) <= 1e-12 * std::max(a.value_, b.value_);
}

std::string ExtendedExponent::to_string() const
{
    if (infinite_)
        return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value_);
    return buf;
}

} // namespace opnorm
