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

#include "effectkit/strength.hpp"

#include <algorithm>
#include <cmath>

#include "effectkit/errors.hpp"

namespace effectkit {

StrengthValue strength_closed(const Effect &a, const RayProjection &ray,
                              const ToleranceConfig &tol) {
    require_same_dim(a.matrix(), ray.projection().matrix());
    const EigenDecomp &eig = a.eig();
    const double cut = tol.eps_rank * std::max(eig.max(), 0.0);

    StrengthValue out;
    bool outside = false;
    double weighted = 0.0;
    for (std::size_t k = 0; k < eig.dim(); ++k) {
        const double lam = eig.values[k];
        const double c = std::abs(inner(eig.column(k), ray.vector()));
        if (lam > cut && lam > 0.0) {
            weighted += c * c / lam;
            if (lam <= 10.0 * cut && c > tol.eps_rank) {
                out.near_threshold = true;
            }
        } else {
            if (c > tol.eps_rank) {
                outside = true;
            }
            if (c > 0.1 * tol.eps_rank && c <= 10.0 * tol.eps_rank) {
                out.near_threshold = true;
            }
        }
    }
    if (outside || weighted <= 0.0) {
        out.value = 0.0;
        out.in_range = false;
        return out;
    }
    out.value = std::min(1.0, 1.0 / weighted);
    out.in_range = true;
    return out;
}

double strength_bisect(const Effect &a, const RayProjection &ray,
                       const ToleranceConfig &tol) {
    require_same_dim(a.matrix(), ray.projection().matrix());
    const Matrix &p = ray.projection().matrix();
    auto feasible = [&](double t) { return psd_leq(p * t, a.matrix(), tol); };
    if (feasible(1.0)) {
        return 1.0;
    }
    double lo = 0.0;
    double hi = 1.0;
    for (int step = 0; step < kStrengthBisectSteps; ++step) {
        const double mid = 0.5 * (lo + hi);
        if (feasible(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

double strength_two_block(double mu, const RayProjection &p,
                          const RayProjection &q, const RayProjection &r,
                          const ToleranceConfig &tol) {
    if (!(mu > 0.0 && mu < 1.0)) {
        throw DomainError("mu must lie in ]0, 1[");
    }
    if (p.dim() != q.dim() || p.dim() != r.dim()) {
        throw DimensionError("rays must share a dimension");
    }
    if (transition_probability(p, q) > tol.eps_eq) {
        throw OrthogonalityError("P and Q must be orthogonal");
    }
    const Complex cp = inner(p.vector(), r.vector());
    const Complex cq = inner(q.vector(), r.vector());
    Vector residual = r.vector();
    for (std::size_t i = 0; i < residual.size(); ++i) {
        residual[i] -= cp * p.vector()[i] + cq * q.vector()[i];
    }
    if (norm(residual) > tol.eps_rank) {
        throw SpanError("R must lie in the span of the ranges of P and Q");
    }
    const double tr_pr = std::norm(cp);
    return mu / (mu + (1.0 - mu) * tr_pr);
}

} // namespace effectkit
