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
 * Coexistence of effects, limited to the cases with a known answer: explicit
 * witnesses A = E + G, B = F + G with E + F + G an effect, and the rank-one
 * criterion (two rank-one effects with different ranges coexist iff their sum
 * is an effect). There is deliberately no general decision procedure.
 */

#pragma once

#include <cstdint>
#include <optional>

#include "effectkit/effects.hpp"

namespace effectkit {

struct CoexistenceWitness {
    Effect e;
    Effect f;
    Effect g;
};

/// A = E + G, B = F + G within eps_eq and E + F + G <= I.
bool witness_valid(const CoexistenceWitness &w, const Effect &a, const Effect &b,
                   const ToleranceConfig &tol = {});

/// (E, F, G) = (A, B, 0) when A + B <= I.
std::optional<CoexistenceWitness>
coexist_trivial_witness(const Effect &a, const Effect &b,
                        const ToleranceConfig &tol = {});

/**
 * Tries the closed-form witnesses in turn: G = 0 (A + B <= I), nested pairs
 * (G = min of A, B when they are ordered), G = A + B - I when A + B >= I, and
 * G = AB for commuting pairs. Every returned witness has been validated.
 */
std::optional<CoexistenceWitness>
find_coexistence_witness(const Effect &a, const Effect &b,
                         const ToleranceConfig &tol = {});

/**
 * Rank-one criterion for sP and tQ with P != Q: true iff sP + tQ <= I.
 *
 * Throws DomainError for s or t outside ]0, 1], DegenerateRanges when P = Q.
 */
bool coexist_rank_one(double s, const RayProjection &p, double t,
                      const RayProjection &q, const ToleranceConfig &tol = {});

/**
 * PROBE, not a decision procedure. Samples effects B and returns false as
 * soon as one has no closed-form witness with A and, when both are rank
 * one, the rank-one criterion confirms they do not coexist. Returns true if
 * no such B turns up in `trials` samples.
 *
 * A false answer for a rank-one A is a certified counterexample. For higher
 * rank A it only means none of the known witness constructions applied.
 */
bool coexists_with_all_probe(const Effect &a, int trials, std::uint64_t seed,
                             const ToleranceConfig &tol = {});

} // namespace effectkit
