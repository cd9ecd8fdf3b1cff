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

#include "effectkit/numkern.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "effectkit/errors.hpp"
#include "effectkit/simd/kernels.hpp"

namespace effectkit {

void ToleranceConfig::validate() const {
    for (double v : {eps_psd, eps_rank, eps_eq, eps_herm}) {
        if (!(v > 0.0 && v < 1e-3)) {
            throw ParamError("tolerances must lie in (0, 1e-3), got " +
                             std::to_string(v));
        }
    }
}

ToleranceConfig ToleranceConfig::scaled(double factor) const {
    return {eps_psd * factor, eps_rank * factor, eps_eq * factor,
            eps_herm * factor};
}

Vector EigenDecomp::column(std::size_t k) const {
    Vector v(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        v[i] = vectors(i, k);
    }
    return v;
}

Matrix EigenDecomp::map(const std::function<double(double)> &f) const {
    const std::size_t n = dim();
    // V diag(f) V*, accumulated as a sum of weighted outer products so that
    // zero weights contribute exactly nothing.
    Matrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double w = f(values[k]);
        if (w == 0.0) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vi = w * vectors(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += vi * std::conj(vectors(j, k));
            }
        }
    }
    return out.hermitian_part();
}

Matrix EigenDecomp::reconstruct() const {
    return map([](double x) { return x; });
}

bool is_hermitian(const Matrix &m, const ToleranceConfig &tol) {
    return frobenius_distance(m, m.adjoint()) <=
           tol.eps_herm * std::max(1.0, m.frobenius());
}

namespace {

double off_diagonal_norm(const Matrix &m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (i != j) {
                acc += std::norm(m(i, j));
            }
        }
    }
    return std::sqrt(acc);
}

constexpr int kMaxSweeps = 60;

} // namespace

EigenDecomp eig_hermitian(const Matrix &input, const ToleranceConfig &tol) {
    const std::size_t n = input.dim();
    if (n == 0) {
        throw DimensionError("cannot diagonalise an empty matrix");
    }
    if (!is_hermitian(input, tol)) {
        throw HermiticityViolation("matrix is not Hermitian within eps_herm");
    }
    const auto &kernels = simd::active();

    Matrix a = input.hermitian_part();
    // Rows of vt are the eigenvector columns; V <- V J becomes a row update.
    Matrix vt = Matrix::identity(n);

    const double scale = a.frobenius();
    const double stop = 1e-15 * scale;
    const double negligible = 1e-18 * scale;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= stop) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double g = std::abs(apq);
                if (g <= negligible || g == 0.0) {
                    continue;
                }
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const Complex phase = apq / g; // e^{i theta}
                const double theta = (aqq - app) / (2.0 * g);
                const double t =
                    std::abs(theta) > 1e150
                        ? 0.5 / theta
                        : std::copysign(1.0, theta) /
                              (std::abs(theta) + std::hypot(theta, 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex pconj = std::conj(phase);

                // Rows: a <- J* a.
                kernels.rotate_rows(n, a.row(p).data(), a.row(q).data(), c,
                                    -s * phase, s, c * phase);
                // Columns: a <- a J.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * pconj * akq;
                    a(k, q) = s * akp + c * pconj * akq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = app - t * g;
                a(q, q) = aqq + t * g;

                // Eigenvectors: V <- V J, i.e. vt <- J^T vt.
                kernels.rotate_rows(n, vt.row(p).data(), vt.row(q).data(), c,
                                    -s * pconj, s, c * pconj);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) {
        return a(i, i).real() < a(j, j).real();
    });

    EigenDecomp out{std::vector<double>(n), Matrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        out.values[k] = a(src, src).real();
        for (std::size_t i = 0; i < n; ++i) {
            out.vectors(i, k) = vt(src, i);
        }
    }
    return out;
}

bool psd_leq(const Matrix &m, const Matrix &n, const ToleranceConfig &tol) {
    require_same_dim(m, n);
    const Matrix diff = n - m;
    const EigenDecomp eig = eig_hermitian(diff, tol);
    return eig.min() >= -tol.eps_psd * std::max(1.0, diff.frobenius());
}

namespace {

void require_psd(const EigenDecomp &eig, const ToleranceConfig &tol) {
    if (eig.min() < -tol.eps_psd) {
        throw NotPositiveSemidefinite("smallest eigenvalue " +
                                      std::to_string(eig.min()) +
                                      " is below -eps_psd");
    }
}

} // namespace

Matrix mat_sqrt(const EigenDecomp &eig, const ToleranceConfig &tol) {
    require_psd(eig, tol);
    // Eigenvalues at rounding level are zeros that picked up noise; their
    // square roots would be ~1e-8 and leak into products.
    const double floor = 8.0 * static_cast<double>(eig.dim()) *
                         std::numeric_limits<double>::epsilon() *
                         std::max(eig.max(), 0.0);
    return eig.map([floor](double x) { return x > floor ? std::sqrt(x) : 0.0; });
}

Matrix mat_sqrt(const Matrix &m, const ToleranceConfig &tol) {
    return mat_sqrt(eig_hermitian(m, tol), tol);
}

Matrix pinv_sqrt(const EigenDecomp &eig, const ToleranceConfig &tol) {
    require_psd(eig, tol);
    const double cut = tol.eps_rank * std::max(eig.max(), 0.0);
    return eig.map([cut](double x) {
        return (x > cut && x > 0.0) ? 1.0 / std::sqrt(x) : 0.0;
    });
}

Matrix pinv_sqrt(const Matrix &m, const ToleranceConfig &tol) {
    return pinv_sqrt(eig_hermitian(m, tol), tol);
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 1)));
}

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::below(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n));
}

double Rng::normal() {
    if (spare_) {
        const double v = *spare_;
        spare_.reset();
        return v;
    }
    double u1 = uniform();
    while (u1 <= 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(angle);
    return r * std::cos(angle);
}

Complex Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

Matrix haar_unitary(std::size_t n, Rng &rng) {
    if (n == 0) {
        throw DimensionError("unitary dimension must be at least 1");
    }
    Matrix a(n);
    for (auto &z : a.data()) {
        z = rng.complex_normal();
    }

    Matrix q = Matrix::identity(n);
    std::vector<Complex> rdiag(n, Complex{1.0, 0.0});
    Vector v(n);
    for (std::size_t k = 0; k < n; ++k) {
        double xnorm = 0.0;
        for (std::size_t i = k; i < n; ++i) {
            xnorm += std::norm(a(i, k));
        }
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0) {
            continue;
        }
        const Complex x0 = a(k, k);
        const Complex phase =
            std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex{1.0, 0.0};
        const Complex alpha = -phase * xnorm;
        rdiag[k] = alpha;

        std::fill(v.begin(), v.end(), Complex{});
        for (std::size_t i = k; i < n; ++i) {
            v[i] = a(i, k);
        }
        v[k] -= alpha;
        double vnorm2 = 0.0;
        for (std::size_t i = k; i < n; ++i) {
            vnorm2 += std::norm(v[i]);
        }
        if (vnorm2 == 0.0) {
            continue;
        }
        // a <- (I - 2 v v* / |v|^2) a on the trailing block.
        for (std::size_t j = k; j < n; ++j) {
            Complex dot{};
            for (std::size_t i = k; i < n; ++i) {
                dot += std::conj(v[i]) * a(i, j);
            }
            const Complex coef = 2.0 * dot / vnorm2;
            for (std::size_t i = k; i < n; ++i) {
                a(i, j) -= coef * v[i];
            }
        }
        // q <- q (I - 2 v v* / |v|^2).
        for (std::size_t i = 0; i < n; ++i) {
            Complex dot{};
            for (std::size_t j = k; j < n; ++j) {
                dot += q(i, j) * v[j];
            }
            const Complex coef = 2.0 * dot / vnorm2;
            for (std::size_t j = k; j < n; ++j) {
                q(i, j) -= coef * std::conj(v[j]);
            }
        }
    }
    // Rephase so that R has a positive real diagonal.
    for (std::size_t j = 0; j < n; ++j) {
        const Complex d = rdiag[j] / std::abs(rdiag[j]);
        for (std::size_t i = 0; i < n; ++i) {
            q(i, j) *= d;
        }
    }
    return q;
}

Matrix haar_unitary(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return haar_unitary(n, rng);
}

Matrix random_effect(std::size_t n, Rng &rng) {
    const Matrix q = haar_unitary(n, rng);
    std::vector<double> d(n);
    for (auto &x : d) {
        x = rng.uniform();
    }
    return (q * Matrix::diagonal(d) * q.adjoint()).hermitian_part();
}

Matrix random_effect(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return random_effect(n, rng);
}

Vector random_unit_vector(std::size_t n, Rng &rng) {
    if (n == 0) {
        throw DimensionError("vector dimension must be at least 1");
    }
    Vector v(n);
    double nrm = 0.0;
    while (nrm < 1e-12) {
        for (auto &z : v) {
            z = rng.complex_normal();
        }
        nrm = norm(v);
    }
    for (auto &z : v) {
        z /= nrm;
    }
    return v;
}

} // namespace effectkit
