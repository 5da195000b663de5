#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace opnorm {

/// Thrown for exponents outside [1, inf] or malformed exponent text.
class ExponentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exponent p in [1, inf].
///
/// Stored as the value plus an infinity flag. The reciprocal 1/p and the
/// conjugate's data are kept alongside, so conjugation is an exact swap and
/// values built from unit-square coordinates (or rationals a/b) convert back
/// without drift.
class ExtendedExponent {
public:
    /// p = 1.
    constexpr ExtendedExponent() = default;

    /// Finite exponent; throws ExponentError unless p >= 1 and p is finite.
    explicit ExtendedExponent(double p);

    static ExtendedExponent infinity() noexcept;

    /// Builds p from u = 1/p in [0, 1]; u = 0 gives infinity.
    static ExtendedExponent from_reciprocal(double u);

    /// Exact rational a/b with a >= b >= 1.
    static ExtendedExponent from_ratio(long long numerator, long long denominator);

    /// Parses "inf", a decimal literal, or a rational "a/b".
    static ExtendedExponent parse(std::string_view text);

    bool is_infinite() const noexcept { return infinite_; }
    bool is_one() const noexcept { return !infinite_ && value_ == 1.0; }
    bool is_two() const noexcept { return !infinite_ && value_ == 2.0; }
    bool is_interior() const noexcept { return !infinite_ && value_ > 1.0; }

    /// Finite value; +inf as a double when infinite.
    double value() const noexcept;

    /// 1/p in [0, 1].
    double reciprocal() const noexcept { return reciprocal_; }

    /// 1 - 1/p, computed without cancellation where possible.
    double conjugate_reciprocal() const noexcept { return conj_reciprocal_; }

    /// Hoelder conjugate p' with 1/p + 1/p' = 1.
    ExtendedExponent conjugate() const noexcept;

    /// Sentinels {1, 2, inf} compare exactly, everything else to 1e-12 relative.
    friend bool operator==(const ExtendedExponent& a, const ExtendedExponent& b) noexcept;

    /// Ordering by value (inf largest).
    friend bool operator<(const ExtendedExponent& a, const ExtendedExponent& b) noexcept
    {
        return a.reciprocal_ > b.reciprocal_;
    }
    friend bool operator<=(const ExtendedExponent& a, const ExtendedExponent& b) noexcept
    {
        return a.reciprocal_ >= b.reciprocal_;
    }

    /// "inf", or the value with 12 significant digits.
    std::string to_string() const;

private:
    ExtendedExponent(double value, double reciprocal, double conj_value, double conj_reciprocal,
                     bool infinite, bool conj_infinite) noexcept
        : value_(value), reciprocal_(reciprocal), conj_value_(conj_value),
          conj_reciprocal_(conj_reciprocal), infinite_(infinite), conj_infinite_(conj_infinite) {}

    double value_ = 1.0;
    double reciprocal_ = 1.0;
    double conj_value_ = 0.0; // unused when conj_infinite_
    double conj_reciprocal_ = 0.0;
    bool infinite_ = false;
    bool conj_infinite_ = true;
};

/// Free-function spelling of ExtendedExponent::conjugate.
inline ExtendedExponent holder_conjugate(const ExtendedExponent& p) noexcept { return p.conjugate(); }

/// A (p, q) pair, the domain and codomain exponents of an operator norm.
struct ExponentPair {
    ExtendedExponent p;
    ExtendedExponent q;
};

} // namespace opnorm
