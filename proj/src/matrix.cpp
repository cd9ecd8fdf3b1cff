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

#include "effectkit/matrix.hpp"

#include <cmath>
#include <string>

#include "effectkit/errors.hpp"
#include "effectkit/simd/kernels.hpp"

namespace effectkit {

Matrix::Matrix(std::size_t n, std::vector<Complex> entries)
    : n_(n), data_(std::move(entries)) {
    if (data_.size() != n * n) {
        throw DimensionError("expected " + std::to_string(n * n) +
                             " entries, got " + std::to_string(data_.size()));
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
    Matrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

Matrix Matrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t n = rows.size();
    std::vector<Complex> entries;
    entries.reserve(n * n);
    for (const auto &r : rows) {
        if (r.size() != n) {
            throw DimensionError("matrix rows must all have length " +
                                 std::to_string(n));
        }
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return Matrix(n, std::move(entries));
}

Matrix Matrix::outer(std::span<const Complex> v) {
    Matrix m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            m(i, j) = v[i] * std::conj(v[j]);
        }
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            m(j, i) = std::conj((*this)(i, j));
        }
    }
    return m;
}

Matrix Matrix::conjugate() const {
    Matrix m(*this);
    for (auto &z : m.data_) {
        z = std::conj(z);
    }
    return m;
}

Complex Matrix::trace() const noexcept {
    Complex t{};
    for (std::size_t i = 0; i < n_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double Matrix::frobenius() const noexcept {
    return std::sqrt(simd::active().norm_sq(data_.size(), data_.data()));
}

Matrix Matrix::hermitian_part() const {
    Matrix m(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        m(i, i) = (*this)(i, i).real();
        for (std::size_t j = i + 1; j < n_; ++j) {
            const Complex z = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

Matrix &Matrix::operator+=(const Matrix &other) {
    require_same_dim(*this, other);
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += other.data_[k];
    }
    return *this;
}

Matrix &Matrix::operator-=(const Matrix &other) {
    require_same_dim(*this, other);
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

Matrix &Matrix::operator*=(Complex s) noexcept {
    for (auto &z : data_) {
        z *= s;
    }
    return *this;
}

Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
Matrix operator*(Matrix a, Complex s) noexcept { return a *= s; }
Matrix operator*(Complex s, Matrix a) noexcept { return a *= s; }

Matrix operator*(const Matrix &a, const Matrix &b) {
    require_same_dim(a, b);
    Matrix c(a.dim());
    simd::active().matmul(a.dim(), a.data().data(), b.data().data(),
                          c.data().data());
    return c;
}

Vector operator*(const Matrix &a, std::span<const Complex> v) {
    if (v.size() != a.dim()) {
        throw DimensionError("vector length " + std::to_string(v.size()) +
                             " does not match matrix dimension " +
                             std::to_string(a.dim()));
    }
    Vector out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < a.dim(); ++j) {
            acc += a(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
    if (u.size() != v.size()) {
        throw DimensionError("inner product of vectors with lengths " +
                             std::to_string(u.size()) + " and " +
                             std::to_string(v.size()));
    }
    Complex acc{};
    for (std::size_t i = 0; i < u.size(); ++i) {
        acc += std::conj(u[i]) * v[i];
    }
    return acc;
}

double norm(std::span<const Complex> v) {
    return std::sqrt(simd::active().norm_sq(v.size(), v.data()));
}

double frobenius_distance(const Matrix &a, const Matrix &b) {
    require_same_dim(a, b);
    return std::sqrt(simd::active().dist_sq(a.data().size(), a.data().data(),
                                            b.data().data()));
}

void require_same_dim(const Matrix &a, const Matrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) +
                             " vs " + std::to_string(b.dim()));
    }
}

} // namespace effectkit
