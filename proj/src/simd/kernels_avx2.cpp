// Copyright 2026 The effectkit Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compiled with -mavx2 -mfma; only reached through the dispatch table after a
// CPUID check.

#include "effectkit/simd/kernels.hpp"

#include <immintrin.h>

#include <algorithm>

namespace effectkit::simd {
namespace {

// Two packed complex values b times the broadcast scalar (re, im).
inline __m256d cmul_bcast(__m256d re, __m256d im, __m256d b) noexcept {
    const __m256d bswap = _mm256_permute_pd(b, 0b0101);
    return _mm256_fmaddsub_pd(re, b, _mm256_mul_pd(im, bswap));
}

inline double hsum(__m256d v) noexcept {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline Complex cmul(Complex a, Complex b) noexcept {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

inline double *dptr(Complex *z) noexcept { return reinterpret_cast<double *>(z); }
inline const double *dptr(const Complex *z) noexcept {
    return reinterpret_cast<const double *>(z);
}

void matmul_avx2(std::size_t n, const Complex *a, const Complex *b,
                 Complex *c) {
    std::fill(c, c + n * n, Complex{});
    const std::size_t paired = n & ~std::size_t{1};
    for (std::size_t i = 0; i < n; ++i) {
        Complex *crow = c + i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a[i * n + k];
            const __m256d re = _mm256_set1_pd(aik.real());
            const __m256d im = _mm256_set1_pd(aik.imag());
            const Complex *brow = b + k * n;
            for (std::size_t j = 0; j < paired; j += 2) {
                const __m256d bv = _mm256_loadu_pd(dptr(brow + j));
                __m256d cv = _mm256_loadu_pd(dptr(crow + j));
                cv = _mm256_add_pd(cv, cmul_bcast(re, im, bv));
                _mm256_storeu_pd(dptr(crow + j), cv);
            }
            if (paired != n) {
                crow[n - 1] += cmul(aik, brow[n - 1]);
            }
        }
    }
}

double norm_sq_avx2(std::size_t len, const Complex *x) {
    const double *d = dptr(x);
    const std::size_t total = 2 * len;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= total; i += 4) {
        const __m256d v = _mm256_loadu_pd(d + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum(acc);
    for (; i < total; ++i) {
        s += d[i] * d[i];
    }
    return s;
}

double dist_sq_avx2(std::size_t len, const Complex *x, const Complex *y) {
    const double *dx = dptr(x);
    const double *dy = dptr(y);
    const std::size_t total = 2 * len;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= total; i += 4) {
        const __m256d v =
            _mm256_sub_pd(_mm256_loadu_pd(dx + i), _mm256_loadu_pd(dy + i));
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum(acc);
    for (; i < total; ++i) {
        const double t = dx[i] - dy[i];
        s += t * t;
    }
    return s;
}

void rotate_rows_avx2(std::size_t len, Complex *x, Complex *y, Complex alpha,
                      Complex beta, Complex gamma, Complex delta) {
    const __m256d are = _mm256_set1_pd(alpha.real());
    const __m256d aim = _mm256_set1_pd(alpha.imag());
    const __m256d bre = _mm256_set1_pd(beta.real());
    const __m256d bim = _mm256_set1_pd(beta.imag());
    const __m256d gre = _mm256_set1_pd(gamma.real());
    const __m256d gim = _mm256_set1_pd(gamma.imag());
    const __m256d dre = _mm256_set1_pd(delta.real());
    const __m256d dim = _mm256_set1_pd(delta.imag());
    const std::size_t paired = len & ~std::size_t{1};
    for (std::size_t i = 0; i < paired; i += 2) {
        const __m256d xv = _mm256_loadu_pd(dptr(x + i));
        const __m256d yv = _mm256_loadu_pd(dptr(y + i));
        const __m256d xn =
            _mm256_add_pd(cmul_bcast(are, aim, xv), cmul_bcast(bre, bim, yv));
        const __m256d yn =
            _mm256_add_pd(cmul_bcast(gre, gim, xv), cmul_bcast(dre, dim, yv));
        _mm256_storeu_pd(dptr(x + i), xn);
        _mm256_storeu_pd(dptr(y + i), yn);
    }
    if (paired != len) {
        const Complex xi = x[len - 1];
        const Complex yi = y[len - 1];
        x[len - 1] = cmul(alpha, xi) + cmul(beta, yi);
        y[len - 1] = cmul(gamma, xi) + cmul(delta, yi);
    }
}

constexpr KernelTable kAvx2Table{Isa::Avx2, matmul_avx2, norm_sq_avx2,
                                 dist_sq_avx2, rotate_rows_avx2};

} // namespace

const KernelTable *avx2_kernels_impl() noexcept { return &kAvx2Table; }

} // namespace effectkit::simd
