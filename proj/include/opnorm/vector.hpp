#pragma once

#include "opnorm/exponent.hpp"

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace opnorm {

using cplx = std::complex<double>;

/// Fixed-length complex vector.
class ComplexVector {
public:
    ComplexVector() = default;
    explicit ComplexVector(std::size_t n) : data_(n) {}
    ComplexVector(std::initializer_list<cplx> values) : data_(values) {}
    explicit ComplexVector(std::vector<cplx> values) : data_(std::move(values)) {}

    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    cplx& operator[](std::size_t i) noexcept { return data_[i]; }
    const cplx& operator[](std::size_t i) const noexcept { return data_[i]; }

    cplx* data() noexcept { return data_.data(); }
    const cplx* data() const noexcept { return data_.data(); }

    std::span<cplx> span() noexcept { return data_; }
    std::span<const cplx> span() const noexcept { return data_; }

    auto begin() const noexcept { return data_.begin(); }
    auto end() const noexcept { return data_.end(); }

    bool is_zero() const noexcept;

    friend bool operator==(const ComplexVector&, const ComplexVector&) = default;

private:
    std::vector<cplx> data_;
};

/// p-norm of a vector of moduli (all entries >= 0).
double norm_of_moduli(std::span<const double> moduli, const ExtendedExponent& p);

/// (sum |x_i|^p)^(1/p), or max |x_i| for p = inf.
double vector_norm(std::span<const cplx> x, const ExtendedExponent& p);
inline double vector_norm(const ComplexVector& x, const ExtendedExponent& p)
{
    return vector_norm(x.span(), p);
}

/// Bilinear pairing sum a_i x_i (no conjugation).
cplx pairing(std::span<const cplx> a, std::span<const cplx> x);

/// Signed-power map y_i = |x_i|^(p-1) conj(phase(x_i)), scaled so that
/// ||y||_p' = 1 and sum y_i x_i = ||x||_p. Zero coordinates map to zero.
///
/// Throws DomainError for p in {1, inf} or x = 0.
ComplexVector dual_map(const ComplexVector& x, const ExtendedExponent& p);

/// max |sum a_i x_i| over ||x||_p = 1, which is ||a||_p'.
double hoelder_max(const ComplexVector& a, const ExtendedExponent& p);

/// A unit p-norm vector x with sum a_i x_i = ||a||_p' (real, nonnegative).
/// Defined for every p; for a = 0 returns the first standard basis vector.
ComplexVector hoelder_maximizer(std::span<const cplx> a, const ExtendedExponent& p);

/// e_k of length n.
ComplexVector basis_vector(std::size_t n, std::size_t k);

} // namespace opnorm
