// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace tcva::kernels {

using cplx = std::complex<double>;

// Hot inner loops used by the analysis modules. Every kernel exists as a
// scalar reference implementation and, on x86-64 with AVX2, as a vectorized
// variant. The active set is chosen once at startup from CPUID and can be
// forced with the TCVA_KERNELS environment variable ("scalar" or "avx2").
// Scalar and SIMD variants are equivalence-tested against each other.
struct Kernels {
    // b[f*n + i] = sum_j s[f*n*n + i*n + j] * a[j], for f in [0, nf).
    void (*complex_matvec_sweep)(const cplx* s, std::size_t nf, std::size_t n,
                                 const cplx* a, cplx* b);

    // out[k] = |x[k]|^2
    void (*magnitude_sq)(const cplx* x, std::size_t count, double* out);

    // Per lane k: out[k] = sum_{m=0}^{terms-1} z[k]^m with z[k] = re[k] + i*im[k],
    // planar storage. terms >= 1.
    void (*phasor_series_sum)(const double* re, const double* im, std::size_t count,
                              int terms, double* out_re, double* out_im);

    const char* name;
};

const Kernels& scalar_kernels();

// Null when this build or CPU has no AVX2 path.
const Kernels* avx2_kernels();

// Startup-selected set (AVX2 when available unless overridden by TCVA_KERNELS).
const Kernels& active_kernels();

}  // namespace tcva::kernels
