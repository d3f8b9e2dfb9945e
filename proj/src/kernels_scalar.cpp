// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#include "tcva/kernels.hpp"

namespace tcva::kernels {

namespace {

void matvec_sweep_scalar(const cplx* s, std::size_t nf, std::size_t n, const cplx* a,
                         cplx* b) {
    for (std::size_t f = 0; f < nf; ++f) {
        const cplx* m = s + f * n * n;
        cplx* out = b + f * n;
        for (std::size_t i = 0; i < n; ++i) {
            cplx acc{0.0, 0.0};
            const cplx* row = m + i * n;
            for (std::size_t j = 0; j < n; ++j)
                acc += row[j] * a[j];
            out[i] = acc;
        }
    }
}

void magnitude_sq_scalar(const cplx* x, std::size_t count, double* out) {
    for (std::size_t k = 0; k < count; ++k)
        out[k] = x[k].real() * x[k].real() + x[k].imag() * x[k].imag();
}

void phasor_series_scalar(const double* re, const double* im, std::size_t count,
                          int terms, double* out_re, double* out_im) {
    for (std::size_t k = 0; k < count; ++k) {
        // acc = 1 + z + z^2 + ... evaluated by repeated complex multiply.
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

const Kernels& scalar_kernels() {
    static const Kernels k{matvec_sweep_scalar, magnitude_sq_scalar, phasor_series_scalar,
                           "scalar"};
    return k;
}

}  // namespace tcva::kernels
