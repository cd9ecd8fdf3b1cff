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
 * The effect algebra E(H) on C^n: validated effects, Loewner order,
 * orthocomplement, zero product, projections and weak atoms.
 */

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>

#include "effectkit/matrix.hpp"
#include "effectkit/numkern.hpp"

namespace effectkit {

/**
 * @brief A Hermitian matrix with spectrum in [0, 1].
 *
 * Immutable and cheap to copy (shared state). The eigendecomposition is
 * computed once at construction. Each effect also carries its
 * orthocomplement I - A, so that taking the orthocomplement twice yields
 * the original matrix bit for bit.
 */
class Effect {
  public:
    /// Validates and clamps; see make_effect().
    static Effect make(const Matrix &m, const ToleranceConfig &tol = {});
    /// Builds from a spectral decomposition whose eigenvalues are within
    /// eps_psd of [0, 1]; throws SpectrumOutOfRange otherwise.
    static Effect from_spectrum(EigenDecomp eig, const ToleranceConfig &tol = {});
    static Effect zero(std::size_t n);
    static Effect identity(std::size_t n);
    static Effect scalar(std::size_t n, double lambda);

    [[nodiscard]] std::size_t dim() const noexcept { return self_->m.dim(); }
    [[nodiscard]] const Matrix &matrix() const noexcept { return self_->m; }
    [[nodiscard]] const EigenDecomp &eig() const noexcept { return self_->eig; }
    /// I - A
    [[nodiscard]] Effect complement() const;

  private:
    struct State {
        Matrix m;
        EigenDecomp eig;
    };
    Effect(std::shared_ptr<const State> self, std::shared_ptr<const State> ortho)
        : self_(std::move(self)), ortho_(std::move(ortho)) {}
    static Effect from_state(Matrix m, EigenDecomp eig);

    std::shared_ptr<const State> self_;
    std::shared_ptr<const State> ortho_;
};

/// Unit vector together with its rank-one projection.
class RayProjection {
  public:
    /// Normalises `v`; throws DomainError for a (numerically) zero vector.
    static RayProjection from_vector(std::span<const Complex> v);
    /// Requires | ||v|| - 1 | <= 1e-12; throws DomainError otherwise.
    static RayProjection from_unit(std::span<const Complex> v);
    static RayProjection basis(std::size_t n, std::size_t k);

    [[nodiscard]] std::size_t dim() const noexcept { return vector_.size(); }
    [[nodiscard]] const Vector &vector() const noexcept { return vector_; }
    [[nodiscard]] const Effect &projection() const noexcept { return projection_; }

  private:
    RayProjection(Vector v, Effect p)
        : vector_(std::move(v)), projection_(std::move(p)) {}

    Vector vector_;
    Effect projection_;
};

/// tr(P_phi P_psi) = |<phi, psi>|^2
double transition_probability(const RayProjection &p, const RayProjection &q);

/// The effect weight * P for a rank-one projection P.
class WeakAtom {
  public:
    /// Throws DomainError unless weight is in [0, 1].
    WeakAtom(double weight, RayProjection ray);

    [[nodiscard]] double weight() const noexcept { return weight_; }
    [[nodiscard]] const RayProjection &ray() const noexcept { return ray_; }
    [[nodiscard]] Effect effect() const;

  private:
    double weight_;
    RayProjection ray_;
};

/**
 * Validates a Hermitian matrix as an effect. Eigenvalues within eps_psd
 * outside [0, 1] are clamped; the matrix is rebuilt from the clamped
 * spectrum only when a clamp actually happened.
 *
 * Throws HermiticityViolation or SpectrumOutOfRange.
 */
Effect make_effect(const Matrix &m, const ToleranceConfig &tol = {});

bool leq(const Effect &a, const Effect &b, const ToleranceConfig &tol = {});

/// Loewner-equality: leq both ways.
bool effect_equal(const Effect &a, const Effect &b,
                  const ToleranceConfig &tol = {});

Effect orthocomplement(const Effect &a);

/// ||AB||_F <= eps_eq max(1, ||A||_F ||B||_F)
bool zero_product(const Effect &a, const Effect &b,
                  const ToleranceConfig &tol = {});

/// Every eigenvalue within eps_psd of 0 or 1.
bool is_projection(const Effect &a, const ToleranceConfig &tol = {});

/// Number of eigenvalues above eps_rank * lambda_max.
std::size_t rank(const Effect &a, const ToleranceConfig &tol = {});

/// Projection onto the span of eigenvectors above the relative cutoff.
Effect range_projection(const Effect &a, const ToleranceConfig &tol = {});

/// lambda with ||A - lambda I||_F <= eps_eq, lambda = tr(A)/n; nullopt when
/// A is not scalar.
std::optional<double> is_scalar(const Effect &a, const ToleranceConfig &tol = {});

/**
 * For rank-one B and A <= B, returns t in [0, 1] with A = tB. Returns
 * nullopt if the recovered multiple misses A by more than eps_eq.
 *
 * Throws RankError when rank(B) != 1, OrderViolation when A is not below B.
 */
std::optional<double> scalar_multiple_of_rank_one(const Effect &a,
                                                  const Effect &b,
                                                  const ToleranceConfig &tol = {});

} // namespace effectkit
