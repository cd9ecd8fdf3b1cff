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

/**
 * @file
 * Dense complex kernels with a scalar reference implementation and
 * SIMD variants selected at runtime.
 *
 * All matrices are square, row-major, interleaved `std::complex<double>`.
 * Every variant must agree with the scalar reference up to floating-point
 * reassociation (the SIMD path uses fused multiply-add).
 */

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace effectkit::simd {

using Complex = std::complex<double>;

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
    Isa isa;
    /// c = a * b for n x n matrices; c must not alias a or b.
    void (*matmul)(std::size_t n, const Complex *a, const Complex *b,
                   Complex *c);
    /// Sum of |x_i|^2.
    double (*norm_sq)(std::size_t len, const Complex *x);
    /// Sum of |x_i - y_i|^2.
    double (*dist_sq)(std::size_t len, const Complex *x, const Complex *y);
    /// Simultaneous update x <- alpha x + beta y, y <- gamma x + delta y.
    void (*rotate_rows)(std::size_t len, Complex *x, Complex *y, Complex alpha,
                        Complex beta, Complex gamma, Complex delta);
};

const KernelTable &scalar_kernels() noexcept;

/// The AVX2+FMA table, or nullptr when it was not compiled in.
const KernelTable *avx2_kernels() noexcept;

bool cpu_supports_avx2() noexcept;

/// The table used by the library. Chosen once: AVX2 when both compiled in
/// and supported by the CPU, unless EFFECTKIT_SIMD=scalar is set.
const KernelTable &active() noexcept;

} // namespace effectkit::simd
