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

#include "effectkit/fracfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "effectkit/errors.hpp"

namespace effectkit {

void FracParams::validate() const {
    for (double v : {a, b, c}) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw ParamError("fractional parameters must be finite and positive");
        }
    }
}

FpParam::FpParam(double p) : p_(p) {
    if (!(p < 1.0) || !std::isfinite(p)) {
        throw ParamError("p must be a finite real number below 1, got " +
                         std::to_string(p));
    }
}

namespace {

void require_unit_interval(double x, const char *what) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError(std::string(what) + " must lie in [0, 1]");
    }
}

// (x, 1 - x) carried separately.
struct Prob {
    double p;
    double q;
};

// f on a complementary pair; exact algebra for both halves.
Prob f_pair(const FracParams &params, Prob x) {
    const double num = params.c == 1.0 ? x.p : std::pow(x.p, params.c);
    const double rest =
        params.a * (params.c == 1.0 ? x.q : std::pow(x.q, params.c));
    const double den = num + rest;
    return {num / den, rest / den};
}

} // namespace

double f_eval(const FracParams &params, double x) {
    require_unit_interval(x, "x");
    if (x == 0.0 || x == 1.0) {
        return x;
    }
    return f_pair(params, {x, 1.0 - x}).p;
}

double f_inverse(const FracParams &params, double y) {
    require_unit_interval(y, "y");
    if (y == 0.0 || y == 1.0) {
        return y;
    }
    if (params.c == 1.0) {
        return params.a * y / (1.0 - y + params.a * y);
    }
    // beta(x) = (beta(y) - ln a) / c, then x = 1 / (1 + e^{beta(x)}).
    const double bx = (std::log((1.0 - y) / y) - std::log(params.a)) / params.c;
    double x = 1.0 / (1.0 + std::exp(bx));
    // Near the endpoints f is steep enough that one ulp of x matters; keep
    // the neighbouring double with the smallest round-trip error.
    double best = std::abs(f_eval(params, x) - y);
    for (double dir : {0.0, 1.0}) {
        double probe = x;
        for (int step = 0; step < 4; ++step) {
            probe = std::nextafter(probe, dir);
            if (probe <= 0.0 || probe >= 1.0) {
                break;
            }
            const double err = std::abs(f_eval(params, probe) - y);
            if (err < best) {
                best = err;
                x = probe;
            }
        }
    }
    return x;
}

double fp_eval(FpParam p, double x) {
    require_unit_interval(x, "x");
    return std::clamp(x / (x * p.value() + (1.0 - p.value())), 0.0, 1.0);
}

double g_eval(const FracParams &params, double y) {
    return params.b * std::pow(y, params.c);
}

Effect fp_apply(FpParam p, const Effect &a, const ToleranceConfig &tol) {
    EigenDecomp eig = a.eig();
    for (double &v : eig.values) {
        v = fp_eval(p, std::clamp(v, 0.0, 1.0));
    }
    return Effect::from_spectrum(std::move(eig), tol);
}

double grid_point(int i, int grid) noexcept {
    return static_cast<double>(i) / static_cast<double>(grid + 1);
}

double verify_pexider(const FracParams &f, const FracParams &g, int grid) {
    if (grid < 2) {
        throw DomainError("grid must have at least 2 points");
    }
    double worst = 0.0;
    for (int i = 1; i <= grid; ++i) {
        const double x = grid_point(i, grid);
        const double fx = f_eval(f, x);
        for (int j = 1; j <= grid; ++j) {
            const double y = grid_point(j, grid);
            const double lhs = f_eval(f, x / (x + (1.0 - x) * y));
            const double rhs = fx / (fx + (1.0 - fx) * g_eval(g, y));
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

namespace {

Prob alpha(double t) { return {1.0 / (1.0 + std::exp(t)), 1.0 / (1.0 + std::exp(-t))}; }
double beta(Prob x) { return std::log(x.q) - std::log(x.p); }

} // namespace

PexiderDecomposition::PexiderDecomposition(FracParams f, FracParams g)
    : f_(f), g_(g) {
    f_.validate();
    g_.validate();
}

// alpha^{-1} is beta, and beta^{-1} is alpha, so F and G share one code path;
// they are kept as separate members to mirror the equation.
double PexiderDecomposition::F(double w) const { return beta(f_pair(f_, alpha(w))); }

double PexiderDecomposition::G(double u) const { return beta(f_pair(f_, alpha(u))); }

double PexiderDecomposition::H(double v) const {
    if (!(v < 0.0)) {
        throw DomainError("H is defined for v < 0");
    }
    return std::log(g_eval(g_, std::exp(v)));
}

double PexiderDecomposition::residual(int grid, double span) const {
    if (grid < 2) {
        throw DomainError("grid must have at least 2 points");
    }
    double worst = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double u = -span + 2.0 * span * i / (grid - 1);
        for (int j = 1; j <= grid; ++j) {
            const double v = -span * j / grid;
            worst = std::max(worst, std::abs(F(u + v) - G(u) - H(v)));
        }
    }
    return worst;
}

FracFit fit_frac(std::span<const std::pair<double, double>> samples) {
    if (samples.size() < 3) {
        throw FitError("need at least 3 samples");
    }
    std::vector<double> xs;
    std::vector<double> ys;
    xs.reserve(samples.size());
    ys.reserve(samples.size());
    std::vector<double> seen;
    for (const auto &[x, fx] : samples) {
        if (!(x > 0.0 && x < 1.0) || !(fx > 0.0 && fx < 1.0)) {
            throw FitError("samples must lie in ]0, 1[");
        }
        seen.push_back(x);
        xs.push_back(std::log((1.0 - x) / x));
        ys.push_back(std::log((1.0 - fx) / fx));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        throw FitError("sample abscissae must be distinct");
    }

    const double m = static_cast<double>(xs.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= m;
    my /= m;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (!(sxx > 1e-12 * m)) {
        throw FitError("degenerate design: abscissae are (nearly) collinear");
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    if (!(slope > 0.0)) {
        throw FitError("fitted exponent must be positive");
    }
    double rss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (slope * xs[i] + intercept);
        rss += r * r;
    }
    return {FracParams{std::exp(intercept), 1.0, slope}, std::sqrt(rss / m)};
}

bool g_symmetry_check(double b, double c, int grid) {
    if (grid < 2) {
        throw DomainError("grid must have at least 2 points");
    }
    double worst = 0.0;
    for (int i = 1; i <= grid; ++i) {
        const double x = grid_point(i, grid);
        worst = std::max(worst, std::abs(b * std::pow(1.0 - x, c) -
                                          (1.0 - b * std::pow(x, c))));
    }
    return worst <= 1e-9;
}

std::optional<RigidityWitness> rigidity_probe(FpParam p, RigidityKind kind,
                                              int grid) {
    if (grid < 3) {
        throw DomainError("grid must have at least 3 points");
    }
    RigidityWitness worst{0.0, std::nullopt, 0.0};
    auto consider = [&](double violation, double x, std::optional<double> y) {
        if (violation > worst.violation) {
            worst = {x, y, violation};
        }
    };
    for (int i = 1; i <= grid; ++i) {
        const double x = grid_point(i, grid);
        const double fx = fp_eval(p, x);
        switch (kind) {
        case RigidityKind::FixedPoint:
            consider(std::abs(fx - x), x, std::nullopt);
            break;
        case RigidityKind::Symmetry:
            consider(std::abs(fp_eval(p, 1.0 - x) - (1.0 - fx)), x,
                     std::nullopt);
            break;
        case RigidityKind::Multiplicative:
            for (int j = i; j <= grid; ++j) {
                const double y = grid_point(j, grid);
                consider(std::abs(fp_eval(p, x * y) - fx * fp_eval(p, y)), x,
                         y);
            }
            break;
        }
    }
    if (worst.violation > kRigidityThreshold) {
        return worst;
    }
    return std::nullopt;
}

} // namespace effectkit
