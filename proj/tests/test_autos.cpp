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

#include <Eigen/Dense>
#include <cmath>

#include "effectkit/autos.hpp"
#include "effectkit/errors.hpp"
#include "support.hpp"

using namespace effectkit;
using namespace effectkit::testing;

namespace {

Eigen::MatrixXcd to_eigen(const Matrix &m) {
    Eigen::MatrixXcd e(m.dim(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) e(i, j) = m(i, j);
    return e;
}

Matrix from_eigen(const Eigen::MatrixXcd &e) {
    Matrix m(static_cast<std::size_t>(e.rows()));
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) m(i, j) = e(i, j);
    return m;
}

// U f_p(K A) U* with f_p(A) = A (pA + (1 - p) I)^{-1}: no eigensolver involved.
Matrix apply_oracle(const Matrix &u, bool conj, double p, const Matrix &a) {
    const std::size_t n = a.dim();
    Eigen::MatrixXcd x = to_eigen(a);
    if (conj) x = x.conjugate().eval();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd denom = p * x + (1.0 - p) * id;
    const Eigen::MatrixXcd fx = x * denom.inverse();
    const Eigen::MatrixXcd uu = to_eigen(u);
    return from_eigen(uu * fx * uu.adjoint());
}

EffectAutomorphism random_auto(std::size_t n, Rng &rng) {
    const double ps[] = {-3.0, -1.0, 0.0, 0.5, 0.9};
    return {haar_unitary(n, rng), rng.below(2) == 1, FpParam(ps[rng.below(5)])};
}

} // namespace

TEST_CASE("construction") {
    Rng rng(1);
    CHECK_NOTHROW(EffectAutomorphism(haar_unitary(3, rng), true, FpParam(0.5)));
    CHECK_THROWS_AS(EffectAutomorphism(Matrix::identity(2) * 1.1, false, FpParam(0.0)),
                    NotUnitary);
    CHECK_THROWS_AS(EffectAutomorphism(Matrix(0), false, FpParam(0.0)), DimensionError);
    const EffectAutomorphism id = EffectAutomorphism::identity(4);
    CHECK(id.dim() == 4);
    CHECK_FALSE(id.conjugate());
    CHECK(id.p().value() == 0.0);
}

TEST_CASE("apply examples") {
    Rng rng(2);
    const Effect a = random_eff(3, rng);
    CHECK(effect_equal(apply(EffectAutomorphism::identity(3), a), a));
    const EffectAutomorphism half(Matrix::identity(2), false, FpParam(0.5));
    CHECK(effect_equal(apply(half, Effect::scalar(2, 0.5)), Effect::scalar(2, 2.0 / 3.0)));
    CHECK_THROWS_AS(apply(half, a), DimensionError);
}

TEST_CASE("apply matches the rational-function oracle") {
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 2 + rng.below(4);
        const EffectAutomorphism phi = random_auto(n, rng);
        const Effect a = random_eff(n, rng);
        const Matrix expected = apply_oracle(phi.unitary(), phi.conjugate(), phi.p().value(), a.matrix());
        CHECK(frobenius_distance(apply(phi, a).matrix(), expected) <= 1e-10);
    }
}

TEST_CASE("projections map to projections of equal rank") {
    Rng rng(4);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 2 + rng.below(4);
        const EffectAutomorphism phi = random_auto(n, rng);
        const std::size_t r = rng.below(n + 1);
        const Effect p = random_projection(n, r, rng);
        const Effect img = apply(phi, p);
        CHECK(is_projection(img));
        CHECK(rank(img) == r);
    }
}

TEST_CASE("inverse") {
    const EffectAutomorphism id = EffectAutomorphism::identity(2);
    const EffectAutomorphism id_inv = inverse(id);
    CHECK(id_inv.p().value() == 0.0);
    CHECK(frobenius_distance(id_inv.unitary(), Matrix::identity(2)) == 0.0);
    Rng rng(5);
    const EffectAutomorphism half(haar_unitary(3, rng), false, FpParam(0.5));
    CHECK(inverse(half).p().value() == doctest::Approx(-1.0));

    for (int m = 0; m < 20; ++m) {
        const std::size_t n = 2 + rng.below(4);
        const EffectAutomorphism phi = random_auto(n, rng);
        const EffectAutomorphism inv = inverse(phi);
        CHECK(inv.conjugate() == phi.conjugate());
        for (int i = 0; i < 200; ++i) {
            const Effect a = random_eff(n, rng);
            CHECK(frobenius_distance(apply(inv, apply(phi, a)).matrix(), a.matrix()) <= 1e-8);
            CHECK(frobenius_distance(apply(phi, apply(inv, a)).matrix(), a.matrix()) <= 1e-8);
        }
    }
}

TEST_CASE("scalar action") {
    Rng rng(6);
    const EffectAutomorphism half(haar_unitary(3, rng), true, FpParam(0.5));
    const RayProjection r = random_ray(3, rng);
    CHECK(extract_scalar_action(half, r, 0.5) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(extract_scalar_action(half, r, 0.0) == doctest::Approx(0.0));
    CHECK(extract_scalar_action(half, r, 1.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(extract_scalar_action(half, r, 1.5), DomainError);

    for (int m = 0; m < 10; ++m) {
        const std::size_t n = 2 + rng.below(4);
        const EffectAutomorphism phi = random_auto(n, rng);
        for (int k = 1; k <= 10; ++k) {
            const double t = k / 11.0;
            const double expected = f_eval(phi.p().frac(), t);
            for (int j = 0; j < 10; ++j) {
                CHECK(std::abs(extract_scalar_action(phi, random_ray(n, rng), t) - expected) <= 1e-9);
            }
        }
    }
}

TEST_CASE("fit_p recovers the parameter") {
    Rng rng(7);
    for (double p : {0.5, 0.0, -3.0, -1.0, 0.9}) {
        const EffectAutomorphism phi(haar_unitary(3, rng), p < 0, FpParam(p));
        const FitPResult fit = fit_p(as_map(phi), 3, 20);
        CHECK(std::abs(fit.p.value() - p) <= 1e-6);
        CHECK(fit.c_deviation <= 1e-6);
    }
    CHECK_THROWS_AS(fit_p(as_map(EffectAutomorphism::identity(2)), 2, 2), DomainError);

    // Maps outside the family.
    const EffectMap squash = [](const Effect &a) {
        return make_effect((a.matrix() * a.matrix()).hermitian_part());
    };
    CHECK_THROWS_AS(fit_p(squash, 2, 20), NotInFamily);
    const EffectMap tilt = [](const Effect &a) {
        const double d[] = {0.2, 0.0};
        return make_effect((a.matrix() * 0.8 + Matrix::diagonal(d)).hermitian_part());
    };
    CHECK_THROWS_AS(fit_p(tilt, 2, 20), NotInFamily);
}
