// AVX2 + FMA kernels. This file is compiled with -mavx2 -mfma and only
// reached through the dispatcher after a CPUID check.

#include "opnorm/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace opnorm::kernels::avx2 {
namespace {

inline const double* dp(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* dp(cplx* p) { return reinterpret_cast<double*>(p); }

// Two complex products a*x packed as [re0, im0, re1, im1].
inline __m256d cmul2(__m256d a, __m256d xr, __m256d xi)
{
    const __m256d a_swapped = _mm256_permute_pd(a, 0b0101);
    return _mm256_fmaddsub_pd(a, xr, _mm256_mul_pd(a_swapped, xi));
}

inline double hsum(__m256d v)
{
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void matvec(const cplx* a, const cplx* x, cplx* y, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        const cplx* row = a + i * n;
        __m256d acc = _mm256_setzero_pd();
        std::size_t j = 0;
        for (; j + 2 <= n; j += 2) {
            const __m256d av = _mm256_loadu_pd(dp(row + j));
            const __m256d xv = _mm256_loadu_pd(dp(x + j));
            acc = _mm256_add_pd(acc, cmul2(av, _mm256_movedup_pd(xv), _mm256_permute_pd(xv, 0b1111)));
        }
        const __m128d pair = _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
        double re = _mm_cvtsd_f64(pair);
        double im = _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
        for (; j < n; ++j) {
            re += row[j].real() * x[j].real() - row[j].imag() * x[j].imag();
            im += row[j].real() * x[j].imag() + row[j].imag() * x[j].real();
        }
        y[i] = cplx(re, im);
    }
}

void matvec_transpose(const cplx* a, const cplx* z, cplx* w, std::size_t n)
{
    std::fill(w, w + n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        const cplx* row = a + i * n;
        const double zr = z[i].real(), zi = z[i].imag();
        const __m256d zr4 = _mm256_set1_pd(zr);
        const __m256d zi4 = _mm256_set1_pd(zi);
        std::size_t j = 0;
        for (; j + 2 <= n; j += 2) {
            const __m256d av = _mm256_loadu_pd(dp(row + j));
            const __m256d wv = _mm256_loadu_pd(dp(w + j));
            _mm256_storeu_pd(dp(w + j), _mm256_add_pd(wv, cmul2(av, zr4, zi4)));
        }
        for (; j < n; ++j) {
            w[j] = cplx(w[j].real() + row[j].real() * zr - row[j].imag() * zi,
                        w[j].imag() + row[j].real() * zi + row[j].imag() * zr);
        }
    }
}

void modulus(const cplx* x, double* out, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v0 = _mm256_loadu_pd(dp(x + i));
        const __m256d v1 = _mm256_loadu_pd(dp(x + i + 2));
        // hadd interleaves the two halves: [m0, m2, m1, m3]
        const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
        const __m256d ordered = _mm256_permute4x64_pd(h, 0b11011000);
        _mm256_storeu_pd(out + i, _mm256_sqrt_pd(ordered));
    }
    for (; i < n; ++i)
        out[i] = std::sqrt(x[i].real() * x[i].real() + x[i].imag() * x[i].imag());
}

double sum(const double* x, std::size_t n)
{
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double s = hsum(acc);
    for (; i < n; ++i)
        s += x[i];
    return s;
}

double max(const double* x, std::size_t n)
{
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_max_pd(acc, _mm256_loadu_pd(x + i));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double m = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
    for (; i < n; ++i)
        m = std::max(m, x[i]);
    return m;
}

double sum_squares(const double* x, std::size_t n)
{
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i)
        s += x[i] * x[i];
    return s;
}

} // namespace

const KernelTable table{"avx2", matvec, matvec_transpose, modulus, sum, max, sum_squares};

} // namespace opnorm::kernels::avx2
