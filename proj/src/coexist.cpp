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

#include "effectkit/coexist.hpp"

#include <cmath>

#include "effectkit/errors.hpp"

namespace effectkit {

bool witness_valid(const CoexistenceWitness &w, const Effect &a, const Effect &b,
                   const ToleranceConfig &tol) {
    if (frobenius_distance(w.e.matrix() + w.g.matrix(), a.matrix()) > tol.eps_eq ||
        frobenius_distance(w.f.matrix() + w.g.matrix(), b.matrix()) > tol.eps_eq) {
        return false;
    }
    const Matrix total = w.e.matrix() + w.f.matrix() + w.g.matrix();
    return psd_leq(total, Matrix::identity(a.dim()), tol);
}

namespace {

// Builds (E, F, G) from raw matrices, or nullopt if any part is not an effect
// or the decomposition does not check out.
std::optional<CoexistenceWitness> assemble(const Matrix &e, const Matrix &f,
                                           const Matrix &g, const Effect &a,
                                           const Effect &b,
                                           const ToleranceConfig &tol) {
    try {
        CoexistenceWitness w{make_effect(e.hermitian_part(), tol),
                             make_effect(f.hermitian_part(), tol),
                             make_effect(g.hermitian_part(), tol)};
        if (witness_valid(w, a, b, tol)) {
            return w;
        }
    } catch (const SpectrumOutOfRange &) {
    }
    return std::nullopt;
}

} // namespace

std::optional<CoexistenceWitness>
coexist_trivial_witness(const Effect &a, const Effect &b,
                        const ToleranceConfig &tol) {
    require_same_dim(a.matrix(), b.matrix());
    const std::size_t n = a.dim();
    if (!psd_leq(a.matrix() + b.matrix(), Matrix::identity(n), tol)) {
        return std::nullopt;
    }
    return assemble(a.matrix(), b.matrix(), Matrix(n), a, b, tol);
}

std::optional<CoexistenceWitness>
find_coexistence_witness(const Effect &a, const Effect &b,
                         const ToleranceConfig &tol) {
    if (auto w = coexist_trivial_witness(a, b, tol)) {
        return w;
    }
    const std::size_t n = a.dim();
    const Matrix &am = a.matrix();
    const Matrix &bm = b.matrix();
    if (leq(a, b, tol)) {
        if (auto w = assemble(Matrix(n), bm - am, am, a, b, tol)) {
            return w;
        }
    }
    if (leq(b, a, tol)) {
        if (auto w = assemble(am - bm, Matrix(n), bm, a, b, tol)) {
            return w;
        }
    }
    const Matrix id = Matrix::identity(n);
    if (psd_leq(id, am + bm, tol)) {
        if (auto w = assemble(id - bm, id - am, am + bm - id, a, b, tol)) {
            return w;
        }
    }
    const Matrix ab = am * bm;
    if (frobenius_distance(ab, bm * am) <= tol.eps_eq) {
        if (auto w = assemble(am - ab, bm - ab, ab, a, b, tol)) {
            return w;
        }
    }
    return std::nullopt;
}

bool coexist_rank_one(double s, const RayProjection &p, double t,
                      const RayProjection &q, const ToleranceConfig &tol) {
    if (!(s > 0.0 && s <= 1.0) || !(t > 0.0 && t <= 1.0)) {
        throw DomainError("weights must lie in ]0, 1]");
    }
    if (p.dim() != q.dim()) {
        throw DimensionError("rays must share a dimension");
    }
    if (1.0 - transition_probability(p, q) <= tol.eps_eq) {
        throw DegenerateRanges("the rank-one criterion needs different ranges");
    }
    const Matrix sum =
        p.projection().matrix() * s + q.projection().matrix() * t;
    return psd_leq(sum, Matrix::identity(p.dim()), tol);
}

namespace {

// Rank-one decomposition (weight, ray) of an effect of rank one.
std::optional<std::pair<double, RayProjection>>
as_rank_one(const Effect &a, const ToleranceConfig &tol) {
    if (rank(a, tol) != 1) {
        return std::nullopt;
    }
    const EigenDecomp &eig = a.eig();
    return std::pair{eig.max(),
                     RayProjection::from_vector(eig.column(eig.dim() - 1))};
}

} // namespace

bool coexists_with_all_probe(const Effect &a, int trials, std::uint64_t seed,
                             const ToleranceConfig &tol) {
    if (trials < 1) {
        throw DomainError("trials must be at least 1");
    }
    const std::size_t n = a.dim();
    const auto a_rank_one = as_rank_one(a, tol);

    for (int trial = 0; trial < trials; ++trial) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(trial));
        std::optional<Effect> b;
        std::optional<std::pair<double, RayProjection>> b_rank_one;
        if (trial % 2 == 0) {
            // Rank-one B, aimed near the range of A when A is rank one.
            Vector v = random_unit_vector(n, rng);
            if (a_rank_one) {
                const double spread = rng.uniform(0.05, 1.0);
                const Vector &base = a_rank_one->second.vector();
                for (std::size_t i = 0; i < n; ++i) {
                    v[i] = base[i] + spread * v[i];
                }
            }
            RayProjection ray = RayProjection::from_vector(v);
            const double weight = rng.uniform(0.5, 1.0);
            b = make_effect(ray.projection().matrix() * weight, tol);
            b_rank_one = std::pair{weight, std::move(ray)};
        } else {
            b = make_effect(random_effect(n, rng), tol);
        }

        if (find_coexistence_witness(a, *b, tol)) {
            continue;
        }
        if (a_rank_one && b_rank_one &&
            1.0 - transition_probability(a_rank_one->second,
                                         b_rank_one->second) >
                tol.eps_eq) {
            if (!coexist_rank_one(a_rank_one->first, a_rank_one->second,
                                  b_rank_one->first, b_rank_one->second, tol)) {
                return false;
            }
            continue;
        }
        return false;
    }
    return true;
}

} // namespace effectkit
