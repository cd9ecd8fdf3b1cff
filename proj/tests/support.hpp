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

// Shared generators for the test binaries.

#pragma once

#include <cstddef>
#include <vector>

#include "effectkit/effects.hpp"
#include "effectkit/numkern.hpp"

namespace effectkit::testing {

inline Effect random_eff(std::size_t n, Rng &rng) {
    return make_effect(random_effect(n, rng));
}

inline RayProjection random_ray(std::size_t n, Rng &rng) {
    return RayProjection::from_unit(random_unit_vector(n, rng));
}

inline Vector column(const Matrix &m, std::size_t k) {
    Vector v(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) v[i] = m(i, k);
    return v;
}

// Effect with the given eigenvalues in a random basis.
inline Effect effect_with_spectrum(const std::vector<double> &values, Rng &rng) {
    const std::size_t n = values.size();
    const Matrix q = haar_unitary(n, rng);
    return make_effect((q * Matrix::diagonal(values) * q.adjoint()).hermitian_part());
}

// Projection onto the first `rank` columns of a Haar unitary.
inline Effect random_projection(std::size_t n, std::size_t rank, Rng &rng) {
    const Matrix q = haar_unitary(n, rng);
    Matrix p(n);
    for (std::size_t k = 0; k < rank; ++k) p += Matrix::outer(column(q, k));
    return make_effect(p.hermitian_part());
}

// Vector at angle theta from the unit vector u.
inline Vector tilted(const Vector &u, double theta, Rng &rng) {
    Vector w = random_unit_vector(u.size(), rng);
    const Complex c = inner(u, w);
    for (std::size_t k = 0; k < u.size(); ++k) w[k] -= c * u[k];
    const double wn = norm(w);
    for (std::size_t k = 0; k < u.size(); ++k)
        w[k] = std::cos(theta) * u[k] + std::sin(theta) * w[k] / wn;
    return w;
}

// Two effects supported on complementary blocks of a random basis.
inline std::pair<Effect, Effect> orthogonal_effects(std::size_t n, Rng &rng) {
    const Matrix q = haar_unitary(n, rng);
    const std::size_t split = 1 + rng.below(n - 1);
    Matrix a(n), b(n);
    for (std::size_t k = 0; k < n; ++k) {
        (k < split ? a : b) += Matrix::outer(column(q, k)) * rng.uniform(0.05, 1.0);
    }
    return {make_effect(a.hermitian_part()), make_effect(b.hermitian_part())};
}

} // namespace effectkit::testing
