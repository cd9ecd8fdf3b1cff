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
 * Dense Hermitian numeric kernel: eigendecomposition (cyclic Jacobi), matrix
 * functions, PSD testing and seeded random sampling.
 *
 * Random sampling uses std::mt19937_64. Uniform variates are the top 53 bits
 * of one engine output scaled by 2^-53; normal variates are Box-Muller pairs
 * built from those uniforms. Both are spelled out here rather than taken from
 * <random> distributions so that streams are identical across standard
 * libraries.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "effectkit/matrix.hpp"

namespace effectkit {

/// Numerical slack used by every comparison in the library.
struct ToleranceConfig {
    double eps_psd = 1e-9;  ///< PSD slack
    double eps_rank = 1e-8; ///< relative eigenvalue cutoff for ranges
    double eps_eq = 1e-9;   ///< Frobenius equality tolerance
    double eps_herm = 1e-10;

    /// Throws ParamError unless every field lies in (0, 1e-3).
    void validate() const;
    /// All four fields multiplied by `factor`.
    [[nodiscard]] ToleranceConfig scaled(double factor) const;
};

struct EigenDecomp {
    std::vector<double> values; ///< ascending
    Matrix vectors;             ///< orthonormal eigenvectors as columns

    [[nodiscard]] std::size_t dim() const noexcept { return values.size(); }
    [[nodiscard]] Vector column(std::size_t k) const;
    [[nodiscard]] double min() const { return values.front(); }
    [[nodiscard]] double max() const { return values.back(); }
    /// V diag(f(lambda)) V*
    [[nodiscard]] Matrix map(const std::function<double(double)> &f) const;
    [[nodiscard]] Matrix reconstruct() const;
};

/// Hermiticity test ||M - M*||_F <= eps_herm * max(1, ||M||_F).
bool is_hermitian(const Matrix &m, const ToleranceConfig &tol = {});

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
/// Throws HermiticityViolation, DimensionError for an empty matrix.
EigenDecomp eig_hermitian(const Matrix &m, const ToleranceConfig &tol = {});

/// m <= n in the Loewner order, i.e. min eig(n - m) >= -eps_psd max(1, ||n-m||_F).
bool psd_leq(const Matrix &m, const Matrix &n, const ToleranceConfig &tol = {});

/// Principal square root. Eigenvalues in [-eps_psd, 0) are clamped to zero,
/// and so are positive ones at rounding level (8 n eps lambda_max).
Matrix mat_sqrt(const Matrix &m, const ToleranceConfig &tol = {});
Matrix mat_sqrt(const EigenDecomp &eig, const ToleranceConfig &tol = {});

/// Inverse of the square root on its range: eigenvalues above
/// eps_rank * max go to lambda^{-1/2}, the rest to zero.
Matrix pinv_sqrt(const Matrix &m, const ToleranceConfig &tol = {});
Matrix pinv_sqrt(const EigenDecomp &eig, const ToleranceConfig &tol = {});

/// Seedable 64-bit generator; see the file comment for the exact recipe.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream for trial `index` of a run seeded with `seed`.
    static Rng for_trial(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next() { return engine_(); }
    /// Uniform on [0, 1).
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [0, n).
    std::size_t below(std::size_t n);
    double normal();
    /// Standard complex Gaussian (x + iy) / sqrt(2).
    Complex complex_normal();

  private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Haar-distributed unitary: complex Gaussian matrix, Householder QR,
/// columns rephased so that R has a positive diagonal.
Matrix haar_unitary(std::size_t n, Rng &rng);
Matrix haar_unitary(std::size_t n, std::uint64_t seed);

/// Q diag(d) Q* with Q Haar and d i.i.d. uniform on [0, 1].
Matrix random_effect(std::size_t n, Rng &rng);
Matrix random_effect(std::size_t n, std::uint64_t seed);

/// Uniform random unit vector (normalised complex Gaussian).
Vector random_unit_vector(std::size_t n, Rng &rng);

} // namespace effectkit
