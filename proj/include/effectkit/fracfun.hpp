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
 * The fractional family
 *
 *     f(x) = x^c / (x^c + a (1 - x)^c),   g(y) = b y^c,
 *
 * which solves the functional equation
 *
 *     f(x / (x + (1 - x) y)) = f(x) / (f(x) + (1 - f(x)) g(y)),
 *
 * and its one-parameter slice f_p(x) = x / (x p + (1 - p)), p < 1, which is
 * the member with c = 1, a = 1 - p.
 */

#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "effectkit/effects.hpp"

namespace effectkit {

struct FracParams {
    double a = 1.0;
    double b = 1.0;
    double c = 1.0;

    /// Throws ParamError unless a, b, c are finite and strictly positive.
    void validate() const;
};

/// The parameter p < 1 of f_p.
class FpParam {
  public:
    /// Throws ParamError unless p < 1 (and finite).
    explicit FpParam(double p);

    [[nodiscard]] double value() const noexcept { return p_; }
    /// (a = 1 - p, b = 1, c = 1)
    [[nodiscard]] FracParams frac() const noexcept { return {1.0 - p_, 1.0, 1.0}; }
    /// p' with f_{p'} the inverse function of f_p: 1 - 1 / (1 - p).
    [[nodiscard]] FpParam inverse() const { return FpParam(1.0 - 1.0 / (1.0 - p_)); }

  private:
    double p_;
};

/// f(x) on [0, 1] with f(0) = 0 and f(1) = 1. Throws DomainError outside.
double f_eval(const FracParams &params, double x);

/// The x with f(x) = y. Throws DomainError for y outside [0, 1].
double f_inverse(const FracParams &params, double y);

/// f_p(x) = x / (x p + (1 - p)). Throws DomainError for x outside [0, 1].
double fp_eval(FpParam p, double x);

/// g(y) = b y^c.
double g_eval(const FracParams &params, double y);

/// f_p applied through the spectral decomposition of `a`.
Effect fp_apply(FpParam p, const Effect &a, const ToleranceConfig &tol = {});

/// Interior lattice point i of a grid with `grid` points: i / (grid + 1),
/// for i = 1 .. grid.
double grid_point(int i, int grid) noexcept;

/**
 * Maximum of |LHS - RHS| of the functional equation over a grid x grid
 * interior lattice, with f from (f.a, f.c) and g from (g.b, g.c).
 * Throws DomainError when grid < 2.
 */
double verify_pexider(const FracParams &f, const FracParams &g, int grid);

/**
 * The logit change of variables turning the functional equation into
 * F(u + v) = G(u) + H(v), with
 *
 *     alpha(t) = 1 / (1 + e^t),  beta(x) = ln((1 - x) / x),  gamma(y) = ln y,
 *     F = alpha^{-1} o f o alpha,  G = beta o f o beta^{-1},
 *     H = gamma o g o gamma^{-1}.
 *
 * Probabilities are carried as (x, 1 - x) pairs so that nothing is lost
 * when f pushes values towards 0 or 1.
 */
class PexiderDecomposition {
  public:
    PexiderDecomposition(FracParams f, FracParams g);

    [[nodiscard]] double F(double w) const;
    [[nodiscard]] double G(double u) const;
    /// Defined for v < 0.
    [[nodiscard]] double H(double v) const;

    /// Max |F(u + v) - G(u) - H(v)| for u in [-span, span], v in
    /// [-span, -span / grid], on a grid x grid lattice.
    [[nodiscard]] double residual(int grid, double span = 4.0) const;

  private:
    FracParams f_;
    FracParams g_;
};

struct FracFit {
    FracParams params; ///< b is left at 1
    double residual;   ///< RMS residual of the log-logit line
};

/**
 * Least-squares line through (beta(x), beta(f(x))): slope c, intercept ln a.
 * Throws FitError for fewer than 3 samples, samples outside ]0, 1[, repeated
 * x, a degenerate design or a non-positive slope.
 */
FracFit fit_frac(std::span<const std::pair<double, double>> samples);

/// max |b (1 - x)^c - (1 - b x^c)| <= 1e-9 over an interior grid.
bool g_symmetry_check(double b, double c, int grid);

enum class RigidityKind { FixedPoint, Symmetry, Multiplicative };

struct RigidityWitness {
    double x;
    std::optional<double> y; ///< second point, multiplicative only
    double violation;
};

/// Threshold a rigidity violation must exceed to count as a witness.
inline constexpr double kRigidityThreshold = 1e-9;

/**
 * Searches an interior grid for the point where f_p most violates
 *   FixedPoint:     f(x) = x
 *   Symmetry:       f(1 - x) = 1 - f(x)
 *   Multiplicative: f(xy) = f(x) f(y)
 * and returns it if the violation exceeds kRigidityThreshold.
 * Throws DomainError when grid < 3.
 */
std::optional<RigidityWitness> rigidity_probe(FpParam p, RigidityKind kind,
                                              int grid);

} // namespace effectkit
