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

#include "effectkit/autos.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "effectkit/errors.hpp"

namespace effectkit {

EffectAutomorphism::EffectAutomorphism(Matrix u, bool conjugate, FpParam p)
    : u_(std::move(u)), conjugate_(conjugate), p_(p) {
    const std::size_t n = u_.dim();
    if (n == 0) {
        throw DimensionError("unitary must be at least 1 x 1");
    }
    const double defect =
        frobenius_distance(u_.adjoint() * u_, Matrix::identity(n));
    if (defect > 1e-10 * static_cast<double>(n)) {
        throw NotUnitary("||U*U - I||_F = " + std::to_string(defect));
    }
}

EffectAutomorphism EffectAutomorphism::identity(std::size_t n) {
    return {Matrix::identity(n), false, FpParam(0.0)};
}

Effect apply(const EffectAutomorphism &phi, const Effect &a,
             const ToleranceConfig &tol) {
    require_same_dim(phi.unitary(), a.matrix());
    // Work on the spectral data: K(A) has the same eigenvalues and
    // conjugated eigenvectors, f_p acts on the eigenvalues, U rotates the
    // eigenvectors.
    EigenDecomp eig = a.eig();
    const Matrix vectors = phi.conjugate() ? eig.vectors.conjugate() : eig.vectors;
    eig.vectors = phi.unitary() * vectors;
    for (double &v : eig.values) {
        v = fp_eval(phi.p(), std::clamp(v, 0.0, 1.0));
    }
    return Effect::from_spectrum(std::move(eig), tol);
}

EffectAutomorphism inverse(const EffectAutomorphism &phi) {
    // phi^{-1}(B) = f_{p'}(K(U* B U)); when K is conjugation,
    // K(U* B U) = U^T K(B) conj(U), i.e. the unitary becomes U^T.
    Matrix v = phi.conjugate() ? phi.unitary().adjoint().conjugate()
                               : phi.unitary().adjoint();
    return {std::move(v), phi.conjugate(), phi.p().inverse()};
}

double extract_scalar_action(const EffectAutomorphism &phi,
                             const RayProjection &ray, double t,
                             const ToleranceConfig &tol) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("t must lie in [0, 1]");
    }
    const Effect scaled = make_effect(ray.projection().matrix() * t, tol);
    const Effect image = apply(phi, scaled, tol);
    const Effect base = apply(phi, ray.projection(), tol);
    const double f = (image.matrix() * base.matrix()).trace().real();
    const double residual =
        frobenius_distance(image.matrix(), base.matrix() * f);
    if (residual > tol.eps_eq) {
        throw NotScalarAction("phi(tP) differs from f phi(P) by " +
                              std::to_string(residual));
    }
    return f;
}

EffectMap as_map(const EffectAutomorphism &phi, const ToleranceConfig &tol) {
    return [phi, tol](const Effect &a) { return apply(phi, a, tol); };
}

FitPResult fit_p(const EffectMap &phi, std::size_t n, int grid,
                 const ToleranceConfig &tol) {
    if (grid < 3) {
        throw DomainError("grid must have at least 3 points");
    }
    std::vector<std::pair<double, double>> samples;
    samples.reserve(static_cast<std::size_t>(grid));
    for (int i = 1; i <= grid; ++i) {
        const double lambda = grid_point(i, grid);
        const Effect image = phi(Effect::scalar(n, lambda));
        const auto mu = is_scalar(image, tol);
        if (!mu) {
            throw NotInFamily("image of a scalar effect is not scalar");
        }
        samples.emplace_back(lambda, *mu);
    }
    FracFit fit;
    try {
        fit = fit_frac(samples);
    } catch (const FitError &e) {
        throw NotInFamily(e.what());
    }
    const double deviation = std::abs(fit.params.c - 1.0);
    if (deviation > kFitExponentTolerance) {
        throw NotInFamily("fitted exponent deviates from 1 by " +
                          std::to_string(deviation));
    }
    return {FpParam(1.0 - fit.params.a), fit.params.a, fit.params.c, deviation,
            fit.residual};
}

} // namespace effectkit
