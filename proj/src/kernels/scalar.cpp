#include "opnorm/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace opnorm::kernels::scalar {
namespace {

// Products are spelled out instead of using complex operator* so that no
// inf/nan recovery branches sit in the loop.
void matvec(const cplx* a, const cplx* x, cplx* y, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        double re = 0.0, im = 0.0;
        const cplx* row = a + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            re += row[j].real() * x[j].real() - row[j].imag() * x[j].imag();
            im += row[j].real() * x[j].imag() + row[j].imag() * x[j].real();
        }
        y[i] = cplx(re, im);
    }
}

void matvec_transpose(const cplx* a, const cplx* z, cplx* w, std::size_t n)
{
    for (std::size_t j = 0; j < n; ++j)
        w[j] = cplx(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const cplx* row = a + i * n;
        const double zr = z[i].real(), zi = z[i].imag();
        for (std::size_t j = 0; j < n; ++j) {
            w[j] = cplx(w[j].real() + row[j].real() * zr - row[j].imag() * zi,
                        w[j].imag() + row[j].real() * zi + row[j].imag() * zr);
        }
    }
}

void modulus(const cplx* x, double* out, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        out[i] = std::sqrt(x[i].real() * x[i].real() + x[i].imag() * x[i].imag());
}

double sum(const double* x, std::size_t n)
{
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += x[i];
    return s;
}

double max(const double* x, std::size_t n)
{
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        m = std::max(m, x[i]);
    return m;
}

double sum_squares(const double* x, std::size_t n)
{
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += x[i] * x[i];
    return s;
}

} // namespace

const KernelTable table{"scalar", matvec, matvec_transpose, modulus, sum, max, sum_squares};

} // namespace opnorm::kernels::scalar
