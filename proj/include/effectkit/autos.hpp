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
 * The automorphism family phi(A) = U f_p(K(A)) U* of the effect algebra,
 * where K is either the identity or entrywise complex conjugation in the
 * standard basis (so U K covers both unitary and antiunitary operators),
 * together with randomized suites checking the preservation properties the
 * family has (and, for p != 0, the ones it lacks).
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "effectkit/effects.hpp"
#include "effectkit/fracfun.hpp"

namespace effectkit {

class EffectAutomorphism {
  public:
    /// Throws NotUnitary when ||U*U - I||_F > 1e-10 n.
    EffectAutomorphism(Matrix u, bool conjugate, FpParam p);
    static EffectAutomorphism identity(std::size_t n);

    [[nodiscard]] std::size_t dim() const noexcept { return u_.dim(); }
    [[nodiscard]] const Matrix &unitary() const noexcept { return u_; }
    [[nodiscard]] bool conjugate() const noexcept { return conjugate_; }
    [[nodiscard]] FpParam p() const noexcept { return p_; }

  private:
    Matrix u_;
    bool conjugate_;
    FpParam p_;
};

/// Conjugation (if flagged), then f_p, then A -> U A U*.
Effect apply(const EffectAutomorphism &phi, const Effect &a,
             const ToleranceConfig &tol = {});

/// The family member undoing `phi`: U* (or U^T when conjugating), the same
/// flag and p' = 1 - 1/(1 - p).
EffectAutomorphism inverse(const EffectAutomorphism &phi);

/**
 * f with phi(tP) = f phi(P), computed as tr(phi(tP) phi(P)).
 * Throws DomainError for t outside [0, 1], NotScalarAction when phi(tP) is
 * not a multiple of phi(P) within eps_eq.
 */
double extract_scalar_action(const EffectAutomorphism &phi,
                             const RayProjection &ray, double t,
                             const ToleranceConfig &tol = {});

/// Any map on effects; lets the suites run on negative controls.
using EffectMap = std::function<Effect(const Effect &)>;

EffectMap as_map(const EffectAutomorphism &phi, const ToleranceConfig &tol = {});

struct FitPResult {
    FpParam p;
    double a;
    double c;
    double c_deviation; ///< |c - 1|
    double residual;
};

/// Maximum |c - 1| accepted by fit_p.
inline constexpr double kFitExponentTolerance = 1e-4;

/**
 * Recovers p from the scalar action lambda I -> mu I on `grid` interior
 * points. Throws DomainError when grid < 3, NotInFamily when an image of a
 * scalar is not scalar or |c - 1| > kFitExponentTolerance.
 */
FitPResult fit_p(const EffectMap &phi, std::size_t n, int grid,
                 const ToleranceConfig &tol = {});

struct VerificationReport {
    std::string suite;
    std::size_t trials = 0;
    std::size_t failures = 0;
    double worst_violation = 0.0;
    /// JSON text of the first failing input; present iff failures > 0.
    std::optional<std::string> counterexample;
    std::uint64_t seed = 0;
};

/// A <= B iff phi(A) <= phi(B), on one ordered pair (A = B o C) and one
/// generic pair per trial, each tested in both directions.
VerificationReport verify_order(const EffectMap &phi, std::size_t n,
                                std::size_t trials, std::uint64_t seed,
                                const ToleranceConfig &tol = {});

/// AB = 0 iff phi(A) phi(B) = 0, on one orthogonal-support pair and one
/// generic pair per trial.
VerificationReport verify_zero_product(const EffectMap &phi, std::size_t n,
                                       std::size_t trials, std::uint64_t seed,
                                       const ToleranceConfig &tol = {});

enum class OrthoSampling { Generic, ProjectionsOnly };

/// phi(I - A) = I - phi(A). Generic sampling starts with the scalar points
/// A = I/4 and A = I/2 before moving to random effects.
VerificationReport verify_ortho(const EffectMap &phi, std::size_t n,
                                std::size_t trials, std::uint64_t seed,
                                const ToleranceConfig &tol = {},
                                OrthoSampling sampling = OrthoSampling::Generic);

/// phi(A o B) = phi(A) o phi(B); trial 0 is the scalar pair (I/2, I/2).
VerificationReport verify_sequential(const EffectMap &phi, std::size_t n,
                                     std::size_t trials, std::uint64_t seed,
                                     const ToleranceConfig &tol = {});

/// tr PQ = tr phi(P) phi(Q) on random ray pairs (every fifth pair orthogonal).
VerificationReport verify_transition(const EffectMap &phi, std::size_t n,
                                     std::size_t trials, std::uint64_t seed,
                                     const ToleranceConfig &tol = {});

/// phi(lambda I) = f_p(lambda) I, followed by the zero-product suite.
/// Throws DomainError for lambda outside ]0, 1[.
VerificationReport verify_scalar_pair(const EffectAutomorphism &phi,
                                      double lambda, std::size_t trials,
                                      std::uint64_t seed,
                                      const ToleranceConfig &tol = {});

/// The always-coexistent pairs (lambda P, (1 - lambda) Q), Q close to P,
/// must stay coexistent under phi and under its inverse.
VerificationReport verify_coexist(const EffectAutomorphism &phi,
                                  std::size_t trials, std::uint64_t seed,
                                  const ToleranceConfig &tol = {});

/// Closed-form strength against bisection, plus
/// lambda(phi(E), phi(R)) = f_p(lambda(E, R)).
VerificationReport verify_strength(const EffectAutomorphism &phi,
                                   std::size_t trials, std::uint64_t seed,
                                   const ToleranceConfig &tol = {});

/// Functional-equation residuals, fit round trips and symmetry rejection
/// on random parameters, plus fit_p on phi.
VerificationReport verify_pexider_suite(const EffectAutomorphism &phi,
                                        std::size_t trials, std::uint64_t seed,
                                        const ToleranceConfig &tol = {});

} // namespace effectkit
