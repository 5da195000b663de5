// AArch64 NEON kernels. One complex<double> per 128-bit register.

#include "opnorm/kernels.hpp"

#include <arm_neon.h>

#include <algorithm>
#include <cmath>

namespace opnorm::kernels::neon {
namespace {

inline const double* dp(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* dp(cplx* p) { return reinterpret_cast<double*>(p); }

// a * x for one complex pair, x given as broadcast real/imag parts.
inline float64x2_t cmul(float64x2_t a, float64x2_t xr, float64x2_t xi)
{
    // [ar*xr - ai*xi, ai*xr + ar*xi]
    const float64x2_t a_swapped = vextq_f64(a, a, 1);
    const float64x2_t sign = {-1.0, 1.0};
    return vfmaq_f64(vmulq_f64(a, xr), vmulq_f64(a_swapped, sign), xi);
}

void matvec(const cplx* a, const cplx* x, cplx* y, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        const cplx* row = a + i * n;
        float64x2_t acc = vdupq_n_f64(0.0);
        for (std::size_t j = 0; j < n; ++j) {
            const float64x2_t av = vld1q_f64(dp(row + j));
            acc = vaddq_f64(acc, cmul(av, vdupq_n_f64(x[j].real()), vdupq_n_f64(x[j].imag())));
        }
        vst1q_f64(dp(y + i), acc);
    }
}

void matvec_transpose(const cplx* a, const cplx* z, cplx* w, std::size_t n)
{
    std::fill(w, w + n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        const cplx* row = a + i * n;
        const float64x2_t zr = vdupq_n_f64(z[i].real());
        const float64x2_t zi = vdupq_n_f64(z[i].imag());
        for (std::size_t j = 0; j < n; ++j) {
            const float64x2_t av = vld1q_f64(dp(row + j));
            vst1q_f64(dp(w + j), vaddq_f64(vld1q_f64(dp(w + j)), cmul(av, zr, zi)));
        }
    }
}

void modulus(const cplx* x, double* out, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t v0 = vld1q_f64(dp(x + i));
        const float64x2_t v1 = vld1q_f64(dp(x + i + 1));
        const float64x2_t sq = vpaddq_f64(vmulq_f64(v0, v0), vmulq_f64(v1, v1));
        vst1q_f64(out + i, vsqrtq_f64(sq));
    }
    for (; i < n; ++i)
        out[i] = std::sqrt(x[i].real() * x[i].real() + x[i].imag() * x[i].imag());
}

double sum(const double* x, std::size_t n)
{
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        acc = vaddq_f64(acc, vld1q_f64(x + i));
    double s = vaddvq_f64(acc);
    for (; i < n; ++i)
        s += x[i];
    return s;
}

double max(const double* x, std::size_t n)
{
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        acc = vmaxq_f64(acc, vld1q_f64(x + i));
    double m = vmaxvq_f64(acc);
    for (; i < n; ++i)
        m = std::max(m, x[i]);
    return m;
}

double sum_squares(const double* x, std::size_t n)
{
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t v = vld1q_f64(x + i);
        acc = vfmaq_f64(acc, v, v);
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i)
        s += x[i] * x[i];
    return s;
}

} // namespace

const KernelTable table{"neon", matvec, matvec_transpose, modulus, sum, max, sum_squares};

} // namespace opnorm::kernels::neon
