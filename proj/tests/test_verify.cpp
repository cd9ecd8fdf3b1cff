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

#include <doctest.h>

#include <json.hpp>

#include "effectkit/autos.hpp"
#include "effectkit/errors.hpp"
#include "effectkit/sequential.hpp"
#include "support.hpp"

using namespace effectkit;
using namespace effectkit::testing;

namespace {

void check_consistent(const VerificationReport &r) {
    CHECK((r.failures == 0) == !r.counterexample.has_value());
    if (r.counterexample) {
        CHECK_NOTHROW([&] { const auto doc = nlohmann::json::parse(*r.counterexample); return doc.size(); }());
    }
}

const EffectMap kOrthocomplement = [](const Effect &a) { return orthocomplement(a); };
const EffectMap kShrink = [](const Effect &a) {
    const std::size_t n = a.dim();
    return make_effect(((a.matrix() + Matrix::identity(n) * 0.5) * 0.5).hermitian_part());
};

} // namespace

TEST_CASE("order and zero-product hold across the family") {
    Rng rng(1);
    for (std::size_t n = 2; n <= 5; ++n) {
        for (double p : {-3.0, -1.0, 0.0, 0.5, 0.9}) {
            for (bool conj : {false, true}) {
                const EffectAutomorphism phi(haar_unitary(n, rng), conj, FpParam(p));
                const auto order = verify_order(as_map(phi), n, 50, 11);
                const auto zero = verify_zero_product(as_map(phi), n, 50, 12);
                CHECK(order.failures == 0);
                CHECK(zero.failures == 0);
                check_consistent(order);
                check_consistent(zero);
            }
        }
    }
}

TEST_CASE("identity map passes every map-level suite") {
    const EffectMap id = [](const Effect &a) { return a; };
    for (std::size_t n : {1u, 2u, 4u}) {
        CHECK(verify_order(id, n, 30, 1).failures == 0);
        CHECK(verify_zero_product(id, n, 30, 1).failures == 0);
        CHECK(verify_ortho(id, n, 30, 1).failures == 0);
        CHECK(verify_sequential(id, n, 30, 1).failures == 0);
        CHECK(verify_transition(id, n, 30, 1).failures == 0);
    }
}

TEST_CASE("negative controls fail") {
    const auto order = verify_order(kOrthocomplement, 3, 20, 2);
    CHECK(order.failures > 0);
    check_consistent(order);
    const auto zero = verify_zero_product(kShrink, 3, 20, 3);
    CHECK(zero.failures > 0);
    check_consistent(zero);
    CHECK(verify_transition(kShrink, 3, 20, 4).failures > 0);
}

TEST_CASE("rigidity: ortho and sequential pass iff p = 0") {
    Rng rng(5);
    for (double p : {0.0, -1.0, 0.1, 0.5, 0.9}) {
        for (bool conj : {false, true}) {
            const EffectAutomorphism phi(haar_unitary(3, rng), conj, FpParam(p));
            const auto ortho = verify_ortho(as_map(phi), 3, 20, 6);
            const auto seq = verify_sequential(as_map(phi), 3, 20, 7);
            const double fitted = fit_p(as_map(phi), 3, 20).p.value();
            CHECK((ortho.failures == 0) == (std::abs(fitted) <= 1e-6));
            CHECK((seq.failures == 0) == (std::abs(fitted) <= 1e-6));
            check_consistent(ortho);
            check_consistent(seq);
        }
    }
}

TEST_CASE("ortho counterexample for p = 1/2") {
    const EffectAutomorphism phi(Matrix::identity(2), false, FpParam(0.5));
    const auto r = verify_ortho(as_map(phi), 2, 5, 1);
    REQUIRE(r.counterexample);
    const auto doc = nlohmann::json::parse(*r.counterexample);
    CHECK(doc["A"]["rows"][0][0][0].get<double>() == doctest::Approx(0.25));
    // phi(A') = (6/7) I against phi(A)' = 0.6 I.
    const Effect lhs = apply(phi, Effect::scalar(2, 0.75));
    const Effect rhs = orthocomplement(apply(phi, Effect::scalar(2, 0.25)));
    CHECK(lhs.matrix()(0, 0).real() == doctest::Approx(6.0 / 7.0));
    CHECK(rhs.matrix()(0, 0).real() == doctest::Approx(0.6));
    // Projections never witness.
    CHECK(verify_ortho(as_map(phi), 2, 30, 2, {}, OrthoSampling::ProjectionsOnly).failures == 0);
}

TEST_CASE("sequential counterexample for p = 1/2") {
    const EffectAutomorphism phi(Matrix::identity(2), false, FpParam(0.5));
    const Effect half = Effect::scalar(2, 0.5);
    const Effect lhs = apply(phi, seq_product(half, half));
    const Effect rhs = seq_product(apply(phi, half), apply(phi, half));
    CHECK(lhs.matrix()(0, 0).real() == doctest::Approx(0.4));
    CHECK(rhs.matrix()(0, 0).real() == doctest::Approx(4.0 / 9.0));
    CHECK(verify_sequential(as_map(phi), 2, 3, 1).failures == 3);
}

TEST_CASE("transition probabilities are preserved by every member") {
    Rng rng(8);
    for (double p : {-3.0, 0.0, 0.7}) {
        for (bool conj : {false, true}) {
            const EffectAutomorphism phi(haar_unitary(4, rng), conj, FpParam(p));
            const auto r = verify_transition(as_map(phi), 4, 100, 9);
            CHECK(r.failures == 0);
            CHECK(r.worst_violation <= 1e-9);
        }
    }
}

TEST_CASE("scalar pair") {
    const EffectAutomorphism half(Matrix::identity(2), false, FpParam(0.5));
    CHECK(verify_scalar_pair(half, 0.5, 20, 1).failures == 0);
    const EffectAutomorphism id = EffectAutomorphism::identity(3);
    CHECK(verify_scalar_pair(id, 0.3, 20, 1).failures == 0);
    CHECK_THROWS_AS(verify_scalar_pair(id, 0.0, 20, 1), DomainError);
    CHECK_THROWS_AS(verify_scalar_pair(id, 1.0, 20, 1), DomainError);
}

TEST_CASE("coexistence of weighted rank-one pairs survives only p = 0") {
    Rng rng(10);
    for (double p : {0.0, -1.0, 0.5}) {
        for (bool conj : {false, true}) {
            const EffectAutomorphism phi(haar_unitary(3, rng), conj, FpParam(p));
            const auto r = verify_coexist(phi, 30, 11);
            CHECK((r.failures == 0) == (p == 0.0));
        }
    }
}

TEST_CASE("strength and Pexider suites") {
    Rng rng(12);
    for (double p : {-1.0, 0.0, 0.5}) {
        const EffectAutomorphism phi(haar_unitary(3, rng), true, FpParam(p));
        const auto s = verify_strength(phi, 100, 13);
        CHECK(s.failures == 0);
        const auto x = verify_pexider_suite(phi, 20, 14);
        CHECK(x.failures == 0);
    }
}

TEST_CASE("reports are deterministic") {
    Rng rng(15);
    const EffectAutomorphism phi(haar_unitary(3, rng), true, FpParam(0.5));
    const auto a = verify_ortho(as_map(phi), 3, 40, 99);
    const auto b = verify_ortho(as_map(phi), 3, 40, 99);
    CHECK(a.failures == b.failures);
    CHECK(a.worst_violation == b.worst_violation);
    CHECK(a.counterexample == b.counterexample);
    CHECK_THROWS_AS(verify_order(as_map(phi), 3, 0, 1), DomainError);
}
