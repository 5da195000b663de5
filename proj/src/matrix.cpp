#include "opnorm/matrix.hpp"

#include "opnorm/error.hpp"
#include "opnorm/kernels.hpp"

#include <algorithm>

namespace opnorm {

Matrix::Matrix(std::size_t n) : n_(n), data_(n * n)
{
    if (n == 0)
        throw DomainError("matrix dimension must be at least 1");
}

Matrix::Matrix(std::size_t n, std::vector<cplx> entries) : n_(n), data_(std::move(entries))
{
    if (n == 0)
        throw DomainError("matrix dimension must be at least 1");
    if (data_.size() != n * n)
        throw DomainError("matrix needs n*n entries");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) : n_(rows.size())
{
    if (n_ == 0)
        throw DomainError("matrix dimension must be at least 1");
    data_.reserve(n_ * n_);
    for (const auto& r : rows) {
        if (r.size() != n_)
            throw DomainError("matrix must be square");
        for (double v : r)
            data_.emplace_back(v, 0.0);
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

ComplexVector Matrix::column(std::size_t j) const
{
    ComplexVector c(n_);
    for (std::size_t i = 0; i < n_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

Matrix Matrix::adjoint() const
{
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            t(j, i) = std::conj((*this)(i, j));
    return t;
}

Matrix Matrix::scaled(double c) const
{
    Matrix s = *this;
    for (auto& z : s.data_)
        z *= c;
    return s;
}

bool Matrix::is_entrywise_nonnegative() const noexcept
{
    return std::all_of(data_.begin(), data_.end(), [](cplx z) { return z.imag() == 0.0 && z.real() >= 0.0; });
}

ComplexVector Matrix::apply(const ComplexVector& x) const
{
    if (x.size() != n_)
        throw DomainError("dimension mismatch in matrix-vector product");
    ComplexVector y(n_);
    kernels::active().matvec(data_.data(), x.data(), y.data(), n_);
    return y;
}

ComplexVector Matrix::apply_transpose(const ComplexVector& z) const
{
    if (z.size() != n_)
        throw DomainError("dimension mismatch in matrix-vector product");
    ComplexVector w(n_);
    kernels::active().matvec_transpose(data_.data(), z.data(), w.data(), n_);
    return w;
}

} // namespace opnorm
