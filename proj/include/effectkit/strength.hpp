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
 * Strength of an effect along a ray,
 *
 *     lambda(A, P_phi) = sup { t in [0, 1] : t P_phi <= A },
 *
 * by closed form (||A^{-1/2} phi||^{-2} when phi lies in the range of
 * A^{1/2}, else 0) and by bisection on the Loewner order.
 */

#pragma once

#include "effectkit/effects.hpp"

namespace effectkit {

struct StrengthValue {
    double value = 0.0;
    /// Whether phi lies in the range of A^{1/2}; value is 0 when false.
    bool in_range = false;
    /// Set when range membership is decided by a coefficient or eigenvalue
    /// within a factor of 10 of the cutoff. Such inputs are numerically
    /// ill-posed because the strength is discontinuous across the boundary.
    bool near_threshold = false;
};

StrengthValue strength_closed(const Effect &a, const RayProjection &ray,
                              const ToleranceConfig &tol = {});

/// Number of halvings performed by strength_bisect: ceil(log2(1e8)).
inline constexpr int kStrengthBisectSteps = 27;

/// Independent oracle: bisection of t against psd_leq(t P, A).
double strength_bisect(const Effect &a, const RayProjection &ray,
                       const ToleranceConfig &tol = {});

/**
 * Strength of E = mu P + Q along R for orthogonal rank-one P, Q and R in
 * span(P, Q): mu / (mu + (1 - mu) tr(PR)).
 *
 * Throws DomainError for mu outside ]0, 1[, OrthogonalityError when P and Q
 * are not orthogonal, SpanError when R leaves their span.
 */
double strength_two_block(double mu, const RayProjection &p,
                          const RayProjection &q, const RayProjection &r,
                          const ToleranceConfig &tol = {});

} // namespace effectkit
