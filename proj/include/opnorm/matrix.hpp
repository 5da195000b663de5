#pragma once

#include "opnorm/vector.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace opnorm {

/// Square complex matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n);
    Matrix(std::size_t n, std::vector<cplx> entries);

    /// Real entries, one initializer list per row.
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    cplx& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

    std::span<const cplx> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }
    ComplexVector column(std::size_t j) const;
    std::span<const cplx> entries() const noexcept { return data_; }

    /// Conjugate transpose.
    Matrix adjoint() const;
    Matrix scaled(double c) const;

    /// All entries real and >= 0 (exact test).
    bool is_entrywise_nonnegative() const noexcept;

    ComplexVector apply(const ComplexVector& x) const;
    /// A^T z without conjugation.
    ComplexVector apply_transpose(const ComplexVector& z) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<cplx> data_;
};

} // namespace opnorm
