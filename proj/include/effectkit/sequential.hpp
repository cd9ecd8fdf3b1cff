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
 * Sequential product A o B = sqrt(A) B sqrt(A) and the order
 * characterisation A <= B iff A = B o C for some effect C.
 */

#pragma once

#include "effectkit/effects.hpp"

namespace effectkit {

struct SeqQuotient {
    Effect quotient;
    /// ||B o C - A||_F
    double residual;
};

Effect seq_product(const Effect &a, const Effect &b,
                   const ToleranceConfig &tol = {});

struct SeqZeroCheck {
    bool sequential_zero; ///< A o B == 0
    bool product_zero;    ///< AB == 0
};

/// Both zero tests side by side; the two flags always agree for effects.
SeqZeroCheck seq_zero_iff_zero(const Effect &a, const Effect &b,
                               const ToleranceConfig &tol = {});

/**
 * C = B^{-1/2} A B^{-1/2} (inverse square root on the range of B), so that
 * B o C = A. When B is singular this is the representative vanishing on
 * ker B.
 *
 * Throws OrderViolation when A is not below B, QuotientFailure when C needs
 * clamping beyond eps_psd or the residual exceeds eps_eq.
 */
SeqQuotient douglas_quotient(const Effect &a, const Effect &b,
                             const ToleranceConfig &tol = {});

/// True iff the quotient construction yields an effect C with B o C = A.
/// Does not consult leq(); used to cross-check it.
bool order_via_seq(const Effect &a, const Effect &b,
                   const ToleranceConfig &tol = {});

} // namespace effectkit
