// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#include "tcva/kernels.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace tcva::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Kernels& select() {
    const char* force = std::getenv("TCVA_KERNELS");
    if (force && std::strcmp(force, "scalar") == 0)
        return scalar_kernels();
    const Kernels* avx2 = avx2_kernels();
    if (force && std::strcmp(force, "avx2") == 0) {
        if (avx2 && cpu_has_avx2())
            return *avx2;
        std::fprintf(stderr, "tcva: TCVA_KERNELS=avx2 requested but unavailable, using scalar\n");
        return scalar_kernels();
    }
    if (avx2 && cpu_has_avx2())
        return *avx2;
    return scalar_kernels();
}

}  // namespace

const Kernels& active_kernels() {
    static const Kernels& k = select();
    return k;
}

}  // namespace tcva::kernels
