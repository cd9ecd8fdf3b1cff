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
 * Square dense complex matrix used throughout effectkit.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace effectkit {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

/**
 * @brief n x n complex matrix, row-major.
 *
 * A value type: copies are deep, equality is bitwise on entries. Hermitian
 * matrices (the `HermMatrix` of the docs) use this same type; Hermiticity is
 * checked by the operations that require it.
 */
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}
    Matrix(std::size_t n, std::vector<Complex> entries);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> diag);
    static Matrix from_rows(
        std::initializer_list<std::initializer_list<Complex>> rows);
    /// v v* for a column vector v.
    static Matrix outer(std::span<const Complex> v);

    [[nodiscard]] std::size_t dim() const noexcept { return n_; }
    [[nodiscard]] bool empty() const noexcept { return n_ == 0; }

    Complex &operator()(std::size_t i, std::size_t j) noexcept {
        return data_[i * n_ + j];
    }
    const Complex &operator()(std::size_t i, std::size_t j) const noexcept {
        return data_[i * n_ + j];
    }

    [[nodiscard]] std::span<Complex> data() noexcept { return data_; }
    [[nodiscard]] std::span<const Complex> data() const noexcept {
        return data_;
    }
    [[nodiscard]] std::span<Complex> row(std::size_t i) noexcept {
        return {data_.data() + i * n_, n_};
    }
    [[nodiscard]] std::span<const Complex> row(std::size_t i) const noexcept {
        return {data_.data() + i * n_, n_};
    }

    [[nodiscard]] Matrix adjoint() const;
    /// Entrywise complex conjugate in the standard basis.
    [[nodiscard]] Matrix conjugate() const;
    [[nodiscard]] Complex trace() const noexcept;
    [[nodiscard]] double frobenius() const noexcept;
    /// (M + M*) / 2
    [[nodiscard]] Matrix hermitian_part() const;

    Matrix &operator+=(const Matrix &other);
    Matrix &operator-=(const Matrix &other);
    Matrix &operator*=(Complex s) noexcept;

    bool operator==(const Matrix &) const = default;

  private:
    std::size_t n_ = 0;
    std::vector<Complex> data_;
};

Matrix operator+(Matrix a, const Matrix &b);
Matrix operator-(Matrix a, const Matrix &b);
Matrix operator*(Matrix a, Complex s) noexcept;
Matrix operator*(Complex s, Matrix a) noexcept;
Matrix operator*(const Matrix &a, const Matrix &b);
Vector operator*(const Matrix &a, std::span<const Complex> v);

/// u* v
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm(std::span<const Complex> v);

/// ||a - b||_F
double frobenius_distance(const Matrix &a, const Matrix &b);

/// Throws DimensionError when the two matrices differ in size.
void require_same_dim(const Matrix &a, const Matrix &b);

} // namespace effectkit
