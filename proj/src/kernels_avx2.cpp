// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

// AVX2 + FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma and must only be entered after the runtime CPUID check in
// kernels.cpp.

#include "tcva/kernels.hpp"

#if defined(TCVA_ENABLE_AVX2)

#include <immintrin.h>

namespace tcva::kernels {

namespace {

// Packed complex multiply of two [re0 im0 re1 im1] registers.
inline __m256d cmul(__m256d s, __m256d a) {
    const __m256d s_re = _mm256_movedup_pd(s);
    const __m256d s_im = _mm256_permute_pd(s, 0xF);
    const __m256d a_sw = _mm256_permute_pd(a, 0x5);
    return _mm256_fmaddsub_pd(s_re, a, _mm256_mul_pd(s_im, a_sw));
}

void matvec_sweep_avx2(const cplx* s, std::size_t nf, std::size_t n, const cplx* a,
                       cplx* b) {
    const std::size_t n2 = n & ~std::size_t{1};
    for (std::size_t f = 0; f < nf; ++f) {
        const cplx* m = s + f * n * n;
        cplx* out = b + f * n;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx* row = m + i * n;
            __m256d acc = _mm256_setzero_pd();
            for (std::size_t j = 0; j < n2; j += 2) {
                const __m256d vs = _mm256_loadu_pd(reinterpret_cast<const double*>(row + j));
                const __m256d va = _mm256_loadu_pd(reinterpret_cast<const double*>(a + j));
                acc = _mm256_add_pd(acc, cmul(vs, va));
            }
            const __m128d lo = _mm256_castpd256_pd128(acc);
            const __m128d hi = _mm256_extractf128_pd(acc, 1);
            __m128d sum = _mm_add_pd(lo, hi);
            if (n2 != n) {
                // odd trailing column
                const cplx t = row[n - 1] * a[n - 1];
                sum = _mm_add_pd(sum, _mm_setr_pd(t.real(), t.imag()));
            }
            _mm_storeu_pd(reinterpret_cast<double*>(out + i), sum);
        }
    }
}

void magnitude_sq_avx2(const cplx* x, std::size_t count, double* out) {
    const double* p = reinterpret_cast<const double*>(x);
    std::size_t k = 0;
    for (; k + 4 <= count; k += 4) {
        const __m256d v0 = _mm256_loadu_pd(p + 2 * k);
        const __m256d v1 = _mm256_loadu_pd(p + 2 * k + 4);
        const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
        // hadd interleaves the two sources; restore element order.
        _mm256_storeu_pd(out + k, _mm256_permute4x64_pd(h, 0xD8));
    }
    for (; k < count; ++k)
        out[k] = x[k].real() * x[k].real() + x[k].imag() * x[k].imag();
}

void phasor_series_avx2(const double* re, const double* im, std::size_t count, int terms,
                        double* out_re, double* out_im) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= count; k += 4) {
        const __m256d zr = _mm256_loadu_pd(re + k);
        const __m256d zi = _mm256_loadu_pd(im + k);
        __m256d acc_re = one, acc_im = zero;
        __m256d cur_re = one, cur_im = zero;
        for (int m = 1; m < terms; ++m) {
            const __m256d nr = _mm256_fmsub_pd(cur_re, zr, _mm256_mul_pd(cur_im, zi));
            const __m256d ni = _mm256_fmadd_pd(cur_re, zi, _mm256_mul_pd(cur_im, zr));
            cur_re = nr;
            cur_im = ni;
            acc_re = _mm256_add_pd(acc_re, cur_re);
            acc_im = _mm256_add_pd(acc_im, cur_im);
        }
        _mm256_storeu_pd(out_re + k, acc_re);
        _mm256_storeu_pd(out_im + k, acc_im);
    }
    for (; k < count; ++k) {
        double acc_re = 1.0, acc_im = 0.0;
        double cur_re = 1.0, cur_im = 0.0;
        for (int m = 1; m < terms; ++m) {
            const double nr = cur_re * re[k] - cur_im * im[k];
            const double ni = cur_re * im[k] + cur_im * re[k];
            cur_re = nr;
            cur_im = ni;
            acc_re += cur_re;
            acc_im += cur_im;
        }
        out_re[k] = acc_re;
        out_im[k] = acc_im;
    }
}

}  // namespace

const Kernels* avx2_kernels() {
    static const Kernels k{matvec_sweep_avx2, magnitude_sq_avx2, phasor_series_avx2,
                           "avx2"};
    return &k;
}

}  // namespace tcva::kernels

#else

namespace tcva::kernels {

const Kernels* avx2_kernels() { return nullptr; }

}  // namespace tcva::kernels

#endif
