#pragma once
// Inner-loop kernels over interleaved complex<double> data.
//
// Every kernel has a scalar reference implementation; SIMD variants are
// selected once at runtime from what the CPU reports. Set OPNORM_KERNELS=scalar
// to force the reference path.

#include <complex>
#include <cstddef>
#include <string_view>

namespace opnorm::kernels {

using cplx = std::complex<double>;

struct KernelTable {
    std::string_view name;

    /// y = A x for a row-major n x n matrix.
    void (*matvec)(const cplx* a, const cplx* x, cplx* y, std::size_t n);

    /// w = A^T z (plain transpose, no conjugation).
    void (*matvec_transpose)(const cplx* a, const cplx* z, cplx* w, std::size_t n);

    /// out[i] = |x[i]| via sqrt(re^2 + im^2); callers redo entries outside
    /// [1e-150, 1e150], where the squares lose range.
    void (*modulus)(const cplx* x, double* out, std::size_t n);

    /// sum of x[i].
    double (*sum)(const double* x, std::size_t n);

    /// max of nonnegative x[i]; 0 for n = 0.
    double (*max)(const double* x, std::size_t n);

    /// sum of x[i]^2.
    double (*sum_squares)(const double* x, std::size_t n);
};

namespace scalar {
extern const KernelTable table;
}

#if defined(OPNORM_HAVE_AVX2)
namespace avx2 {
extern const KernelTable table;
}
#endif

#if defined(OPNORM_HAVE_NEON)
namespace neon {
extern const KernelTable table;
}
#endif

/// Kernels picked for this process (cached after the first call).
const KernelTable& active();

/// Scalar reference plus every SIMD table usable on this CPU.
std::size_t available(const KernelTable** out, std::size_t capacity);

} // namespace opnorm::kernels
