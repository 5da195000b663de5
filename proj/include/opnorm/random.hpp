#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace opnorm {

inline constexpr std::uint64_t default_seed = 0x5EED;

/// Seeded generator with distributions spelled out here, so streams are the
/// same on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed = default_seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform index in [0, n).
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

    /// Unit-modulus complex number with uniform angle.
    std::complex<double> phase() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace opnorm
