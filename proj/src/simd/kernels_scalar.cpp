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

#include "effectkit/simd/kernels.hpp"

#include <algorithm>

namespace effectkit::simd {
namespace {

// Plain re/im arithmetic; std::complex multiplication goes through the
// Annex G inf/nan recovery path which we never need here.
inline Complex cmul(Complex a, Complex b) noexcept {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

void matmul_scalar(std::size_t n, const Complex *a, const Complex *b,
                   Complex *c) {
    std::fill(c, c + n * n, Complex{});
    for (std::size_t i = 0; i < n; ++i) {
        Complex *crow = c + i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a[i * n + k];
            const Complex *brow = b + k * n;
            for (std::size_t j = 0; j < n; ++j) {
                crow[j] += cmul(aik, brow[j]);
            }
        }
    }
}

double norm_sq_scalar(std::size_t len, const Complex *x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
    return acc;
}

double dist_sq_scalar(std::size_t len, const Complex *x, const Complex *y) {
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        const double re = x[i].real() - y[i].real();
        const double im = x[i].imag() - y[i].imag();
        acc += re * re + im * im;
    }
    return acc;
}

void rotate_rows_scalar(std::size_t len, Complex *x, Complex *y, Complex alpha,
                        Complex beta, Complex gamma, Complex delta) {
    for (std::size_t i = 0; i < len; ++i) {
        const Complex xi = x[i];
        const Complex yi = y[i];
        x[i] = cmul(alpha, xi) + cmul(beta, yi);
        y[i] = cmul(gamma, xi) + cmul(delta, yi);
    }
}

constexpr KernelTable kScalarTable{Isa::Scalar, matmul_scalar, norm_sq_scalar,
                                   dist_sq_scalar, rotate_rows_scalar};

} // namespace

const KernelTable &scalar_kernels() noexcept { return kScalarTable; }

} // namespace effectkit::simd
