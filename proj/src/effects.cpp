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

#include "effectkit/effects.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "effectkit/errors.hpp"

namespace effectkit {

Effect Effect::from_state(Matrix m, EigenDecomp eig) {
    const std::size_t n = m.dim();
    Matrix om = Matrix::identity(n) - m;
    EigenDecomp oeig{std::vector<double>(n), Matrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = n - 1 - k;
        oeig.values[k] = 1.0 - eig.values[src];
        for (std::size_t i = 0; i < n; ++i) {
            oeig.vectors(i, k) = eig.vectors(i, src);
        }
    }
    auto self = std::make_shared<const State>(State{std::move(m), std::move(eig)});
    auto ortho =
        std::make_shared<const State>(State{std::move(om), std::move(oeig)});
    return Effect(std::move(self), std::move(ortho));
}

Effect Effect::from_spectrum(EigenDecomp eig, const ToleranceConfig &tol) {
    for (double &v : eig.values) {
        if (v < -tol.eps_psd || v > 1.0 + tol.eps_psd) {
            throw SpectrumOutOfRange("eigenvalue " + std::to_string(v) +
                                     " outside [0, 1]");
        }
        v = std::clamp(v, 0.0, 1.0);
    }
    Matrix m = eig.reconstruct();
    return from_state(std::move(m), std::move(eig));
}

Effect Effect::make(const Matrix &m, const ToleranceConfig &tol) {
    EigenDecomp eig = eig_hermitian(m, tol);
    bool clamped = false;
    for (double &v : eig.values) {
        if (v < -tol.eps_psd || v > 1.0 + tol.eps_psd) {
            throw SpectrumOutOfRange("eigenvalue " + std::to_string(v) +
                                     " outside [0, 1]");
        }
        if (v < 0.0 || v > 1.0) {
            v = std::clamp(v, 0.0, 1.0);
            clamped = true;
        }
    }
    Matrix stored = clamped ? eig.reconstruct() : m.hermitian_part();
    return from_state(std::move(stored), std::move(eig));
}

Effect Effect::zero(std::size_t n) { return scalar(n, 0.0); }

Effect Effect::identity(std::size_t n) { return scalar(n, 1.0); }

Effect Effect::scalar(std::size_t n, double lambda) {
    if (n == 0) {
        throw DimensionError("effect dimension must be at least 1");
    }
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw DomainError("scalar effect weight must lie in [0, 1]");
    }
    EigenDecomp eig{std::vector<double>(n, lambda), Matrix::identity(n)};
    return from_state(Matrix::identity(n) * lambda, std::move(eig));
}

Effect Effect::complement() const { return Effect(ortho_, self_); }

RayProjection RayProjection::from_vector(std::span<const Complex> v) {
    const double nrm = norm(v);
    if (v.empty() || !(nrm > 1e-300) || !std::isfinite(nrm)) {
        throw DomainError("ray vector must be finite and nonzero");
    }
    Vector u(v.begin(), v.end());
    for (auto &z : u) {
        z /= nrm;
    }
    Effect p = make_effect(Matrix::outer(u));
    return RayProjection(std::move(u), std::move(p));
}

RayProjection RayProjection::from_unit(std::span<const Complex> v) {
    if (v.empty() || std::abs(norm(v) - 1.0) > 1e-12) {
        throw DomainError("ray vector must have unit norm");
    }
    Vector u(v.begin(), v.end());
    Effect p = make_effect(Matrix::outer(u));
    return RayProjection(std::move(u), std::move(p));
}

RayProjection RayProjection::basis(std::size_t n, std::size_t k) {
    if (k >= n) {
        throw DimensionError("basis index out of range");
    }
    Vector e(n);
    e[k] = 1.0;
    return from_unit(e);
}

double transition_probability(const RayProjection &p, const RayProjection &q) {
    return std::norm(inner(p.vector(), q.vector()));
}

WeakAtom::WeakAtom(double weight, RayProjection ray)
    : weight_(weight), ray_(std::move(ray)) {
    if (!(weight >= 0.0 && weight <= 1.0)) {
        throw DomainError("weak atom weight must lie in [0, 1]");
    }
}

Effect WeakAtom::effect() const {
    return make_effect(ray_.projection().matrix() * weight_);
}

Effect make_effect(const Matrix &m, const ToleranceConfig &tol) {
    return Effect::make(m, tol);
}

bool leq(const Effect &a, const Effect &b, const ToleranceConfig &tol) {
    return psd_leq(a.matrix(), b.matrix(), tol);
}

bool effect_equal(const Effect &a, const Effect &b, const ToleranceConfig &tol) {
    return leq(a, b, tol) && leq(b, a, tol);
}

Effect orthocomplement(const Effect &a) { return a.complement(); }

bool zero_product(const Effect &a, const Effect &b, const ToleranceConfig &tol) {
    require_same_dim(a.matrix(), b.matrix());
    const double scale =
        std::max(1.0, a.matrix().frobenius() * b.matrix().frobenius());
    return (a.matrix() * b.matrix()).frobenius() <= tol.eps_eq * scale;
}

bool is_projection(const Effect &a, const ToleranceConfig &tol) {
    return std::all_of(a.eig().values.begin(), a.eig().values.end(),
                       [&](double v) {
                           return std::abs(v) <= tol.eps_psd ||
                                  std::abs(v - 1.0) <= tol.eps_psd;
                       });
}

namespace {

double rank_cutoff(const EigenDecomp &eig, const ToleranceConfig &tol) {
    return tol.eps_rank * std::max(eig.max(), 0.0);
}

} // namespace

std::size_t rank(const Effect &a, const ToleranceConfig &tol) {
    const double cut = rank_cutoff(a.eig(), tol);
    return static_cast<std::size_t>(
        std::count_if(a.eig().values.begin(), a.eig().values.end(),
                      [cut](double v) { return v > cut && v > 0.0; }));
}

Effect range_projection(const Effect &a, const ToleranceConfig &tol) {
    const double cut = rank_cutoff(a.eig(), tol);
    EigenDecomp eig = a.eig();
    for (double &v : eig.values) {
        v = (v > cut && v > 0.0) ? 1.0 : 0.0;
    }
    return Effect::from_spectrum(std::move(eig), tol);
}

std::optional<double> is_scalar(const Effect &a, const ToleranceConfig &tol) {
    const std::size_t n = a.dim();
    const double lambda = a.matrix().trace().real() / static_cast<double>(n);
    const double dist =
        frobenius_distance(a.matrix(), Matrix::identity(n) * lambda);
    if (dist <= tol.eps_eq) {
        return lambda;
    }
    return std::nullopt;
}

std::optional<double> scalar_multiple_of_rank_one(const Effect &a,
                                                  const Effect &b,
                                                  const ToleranceConfig &tol) {
    require_same_dim(a.matrix(), b.matrix());
    if (rank(b, tol) != 1) {
        throw RankError("second argument must have rank one");
    }
    if (!leq(a, b, tol)) {
        throw OrderViolation("first argument is not below the second");
    }
    const double bb = (b.matrix() * b.matrix()).trace().real();
    const double ab = (a.matrix() * b.matrix()).trace().real();
    const double t = std::clamp(ab / bb, 0.0, 1.0);
    if (frobenius_distance(a.matrix(), b.matrix() * t) > tol.eps_eq) {
        return std::nullopt;
    }
    return t;
}

} // namespace effectkit
