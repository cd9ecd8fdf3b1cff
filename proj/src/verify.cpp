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

// Randomized verification suites for the automorphism family.
//
// Every trial draws from its own stream Rng::for_trial(seed, index), and the
// per-trial outcomes are reduced in index order, so reports do not depend on
// how trials are scheduled across threads.

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "effectkit/autos.hpp"
#include "effectkit/coexist.hpp"
#include "effectkit/errors.hpp"
#include "effectkit/io.hpp"
#include "effectkit/sequential.hpp"
#include "effectkit/strength.hpp"
#include "parallel.hpp"

namespace effectkit {

namespace {

struct TrialOutcome {
    bool failed = false;
    double violation = 0.0;
    std::string counterexample;

    // Merge another check of the same trial; the first failure wins.
    void absorb(bool check_failed, double v, const std::string &witness) {
        violation = std::max(violation, v);
        if (check_failed && !failed) {
            failed = true;
            counterexample = witness;
        }
    }
};

template <class Trial>
VerificationReport run_suite(std::string name, std::size_t trials,
                             std::uint64_t seed, Trial &&trial) {
    if (trials < 1) {
        throw DomainError("trials must be at least 1");
    }
    std::vector<TrialOutcome> outcomes(trials);
    detail::parallel_for(trials, [&](std::size_t i) {
        Rng rng = Rng::for_trial(seed, i);
        try {
            outcomes[i] = trial(i, rng);
        } catch (const std::exception &e) {
            io::Json doc = io::Json::object();
            doc["trial"] = i;
            doc["error"] = e.what();
            outcomes[i] = {true, 0.0, io::dump(doc)};
        }
    });

    VerificationReport report;
    report.suite = std::move(name);
    report.trials = trials;
    report.seed = seed;
    for (std::size_t i = 0; i < trials; ++i) {
        const TrialOutcome &o = outcomes[i];
        report.worst_violation = std::max(report.worst_violation, o.violation);
        if (o.failed) {
            ++report.failures;
            if (!report.counterexample) {
                report.counterexample = o.counterexample;
            }
        }
    }
    return report;
}

std::string witness(std::initializer_list<std::pair<const char *, const Matrix *>> items) {
    io::Json doc = io::Json::object();
    for (const auto &[key, m] : items) {
        doc[key] = io::matrix_to_json(*m);
    }
    return io::dump(doc);
}

// How far `x <= y` is from flipping: min eig(y - x) normalised by the slack
// scale used in psd_leq.
double order_margin(const Matrix &x, const Matrix &y, const ToleranceConfig &tol) {
    const Matrix diff = y - x;
    return std::abs(eig_hermitian(diff, tol).min()) /
           std::max(1.0, diff.frobenius());
}

double product_size(const Effect &a, const Effect &b) {
    return (a.matrix() * b.matrix()).frobenius() /
           std::max(1.0, a.matrix().frobenius() * b.matrix().frobenius());
}

Effect random_effect_of(std::size_t n, Rng &rng, const ToleranceConfig &tol) {
    return make_effect(random_effect(n, rng), tol);
}

// Effects supported on complementary blocks of a random orthonormal basis.
std::pair<Effect, Effect> orthogonal_pair(std::size_t n, Rng &rng,
                                          const ToleranceConfig &tol) {
    const Matrix q = haar_unitary(n, rng);
    const std::size_t split = n == 1 ? 1 : 1 + rng.below(n - 1);
    Matrix a(n);
    Matrix b(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double w = 1.0 - rng.uniform();
        Vector col(n);
        for (std::size_t i = 0; i < n; ++i) {
            col[i] = q(i, k);
        }
        (k < split ? a : b) += Matrix::outer(col) * w;
    }
    return {make_effect(a.hermitian_part(), tol),
            make_effect(b.hermitian_part(), tol)};
}

Effect random_projection(std::size_t n, Rng &rng, const ToleranceConfig &tol) {
    const Matrix q = haar_unitary(n, rng);
    const std::size_t r = rng.below(n + 1);
    Matrix p(n);
    for (std::size_t k = 0; k < r; ++k) {
        Vector col(n);
        for (std::size_t i = 0; i < n; ++i) {
            col[i] = q(i, k);
        }
        p += Matrix::outer(col);
    }
    return make_effect(p.hermitian_part(), tol);
}

// Weight and ray of a rank-one effect, read off its top eigenpair.
std::pair<double, RayProjection> rank_one_parts(const Effect &a) {
    const EigenDecomp &eig = a.eig();
    return {eig.max(), RayProjection::from_vector(eig.column(eig.dim() - 1))};
}

} // namespace

VerificationReport verify_order(const EffectMap &phi, std::size_t n,
                                std::size_t trials, std::uint64_t seed,
                                const ToleranceConfig &tol) {
    return run_suite("order", trials, seed, [&](std::size_t, Rng &rng) {
        TrialOutcome out;
        const Effect b = random_effect_of(n, rng, tol);
        const Effect c = random_effect_of(n, rng, tol);
        const Effect ordered = seq_product(b, c, tol);
        const Effect g1 = random_effect_of(n, rng, tol);
        const Effect g2 = random_effect_of(n, rng, tol);

        const std::pair<const Effect *, const Effect *> pairs[] = {
            {&ordered, &b}, {&b, &ordered}, {&g1, &g2}, {&g2, &g1}};
        for (const auto &[x, y] : pairs) {
            const Effect px = phi(*x);
            const Effect py = phi(*y);
            const bool before = leq(*x, *y, tol);
            const bool after = leq(px, py, tol);
            if (before != after) {
                const double margin =
                    std::max(order_margin(x->matrix(), y->matrix(), tol),
                             order_margin(px.matrix(), py.matrix(), tol));
                out.absorb(true, margin,
                           witness({{"A", &x->matrix()}, {"B", &y->matrix()}}));
            }
        }
        return out;
    });
}

VerificationReport verify_zero_product(const EffectMap &phi, std::size_t n,
                                       std::size_t trials, std::uint64_t seed,
                                       const ToleranceConfig &tol) {
    return run_suite("zero-product", trials, seed, [&](std::size_t, Rng &rng) {
        TrialOutcome out;
        const auto [a, b] = orthogonal_pair(n, rng, tol);
        const Effect g1 = random_effect_of(n, rng, tol);
        const Effect g2 = random_effect_of(n, rng, tol);

        const std::pair<const Effect *, const Effect *> pairs[] = {
            {&a, &b}, {&g1, &g2}};
        for (const auto &[x, y] : pairs) {
            const Effect px = phi(*x);
            const Effect py = phi(*y);
            const bool before = zero_product(*x, *y, tol);
            const bool after = zero_product(px, py, tol);
            if (before != after) {
                out.absorb(true,
                           std::max(product_size(*x, *y), product_size(px, py)),
                           witness({{"A", &x->matrix()}, {"B", &y->matrix()}}));
            }
        }
        return out;
    });
}

VerificationReport verify_ortho(const EffectMap &phi, std::size_t n,
                                std::size_t trials, std::uint64_t seed,
                                const ToleranceConfig &tol,
                                OrthoSampling sampling) {
    return run_suite("ortho", trials, seed, [&](std::size_t i, Rng &rng) {
        TrialOutcome out;
        Effect a = Effect::zero(n);
        if (sampling == OrthoSampling::ProjectionsOnly) {
            a = random_projection(n, rng, tol);
        } else if (i == 0) {
            a = Effect::scalar(n, 0.25);
        } else if (i == 1) {
            a = Effect::scalar(n, 0.5);
        } else {
            a = random_effect_of(n, rng, tol);
        }
        const Effect lhs = phi(orthocomplement(a));
        const Effect rhs = orthocomplement(phi(a));
        const double gap = frobenius_distance(lhs.matrix(), rhs.matrix());
        out.absorb(gap > tol.eps_eq * std::max(1.0, lhs.matrix().frobenius()),
                   gap, witness({{"A", &a.matrix()}}));
        return out;
    });
}

VerificationReport verify_sequential(const EffectMap &phi, std::size_t n,
                                     std::size_t trials, std::uint64_t seed,
                                     const ToleranceConfig &tol) {
    return run_suite("sequential", trials, seed, [&](std::size_t i, Rng &rng) {
        TrialOutcome out;
        const Effect a =
            i == 0 ? Effect::scalar(n, 0.5) : random_effect_of(n, rng, tol);
        const Effect b =
            i == 0 ? Effect::scalar(n, 0.5) : random_effect_of(n, rng, tol);
        const Effect lhs = phi(seq_product(a, b, tol));
        const Effect rhs = seq_product(phi(a), phi(b), tol);
        const double gap = frobenius_distance(lhs.matrix(), rhs.matrix());
        out.absorb(gap > tol.eps_eq * std::max(1.0, lhs.matrix().frobenius()),
                   gap, witness({{"A", &a.matrix()}, {"B", &b.matrix()}}));
        return out;
    });
}

VerificationReport verify_transition(const EffectMap &phi, std::size_t n,
                                     std::size_t trials, std::uint64_t seed,
                                     const ToleranceConfig &tol) {
    return run_suite("transition", trials, seed, [&](std::size_t i, Rng &rng) {
        TrialOutcome out;
        const RayProjection p = RayProjection::from_unit(random_unit_vector(n, rng));
        Vector w = random_unit_vector(n, rng);
        if (i % 5 == 4 && n > 1) {
            const Complex c = inner(p.vector(), w);
            for (std::size_t k = 0; k < n; ++k) {
                w[k] -= c * p.vector()[k];
            }
        }
        const RayProjection q = RayProjection::from_vector(w);
        const double before = transition_probability(p, q);
        const double after =
            (phi(p.projection()).matrix() * phi(q.projection()).matrix())
                .trace()
                .real();
        const double gap = std::abs(before - after);
        const Matrix &pm = p.projection().matrix();
        const Matrix &qm = q.projection().matrix();
        out.absorb(gap > tol.eps_eq, gap, witness({{"P", &pm}, {"Q", &qm}}));
        return out;
    });
}

VerificationReport verify_scalar_pair(const EffectAutomorphism &phi,
                                      double lambda, std::size_t trials,
                                      std::uint64_t seed,
                                      const ToleranceConfig &tol) {
    if (!(lambda > 0.0 && lambda < 1.0)) {
        throw DomainError("lambda must lie in ]0, 1[");
    }
    const std::size_t n = phi.dim();
    VerificationReport report =
        verify_zero_product(as_map(phi, tol), n, trials, seed, tol);
    report.suite = "scalar-pair";

    const Effect scalar = Effect::scalar(n, lambda);
    const Effect image = apply(phi, scalar, tol);
    const auto mu = is_scalar(image, tol);
    const double expected = fp_eval(phi.p(), lambda);
    const double gap = mu ? std::abs(*mu - expected) : 1.0;
    report.worst_violation = std::max(report.worst_violation, gap);
    if (!mu || gap > tol.eps_eq) {
        ++report.failures;
        report.counterexample = witness({{"A", &scalar.matrix()}});
    }
    return report;
}

VerificationReport verify_coexist(const EffectAutomorphism &phi,
                                  std::size_t trials, std::uint64_t seed,
                                  const ToleranceConfig &tol) {
    const std::size_t n = phi.dim();
    const EffectAutomorphism inv = inverse(phi);
    return run_suite("coexist", trials, seed, [&](std::size_t, Rng &rng) {
        TrialOutcome out;
        if (n < 2) {
            return out;
        }
        const double lambda = rng.uniform(0.05, 0.95);
        const Vector u = random_unit_vector(n, rng);
        // A second unit vector at angle theta from u.
        Vector w = random_unit_vector(n, rng);
        const Complex c = inner(u, w);
        for (std::size_t k = 0; k < n; ++k) {
            w[k] -= c * u[k];
        }
        const double wn = norm(w);
        const double theta = rng.uniform(1e-3, 0.05);
        for (std::size_t k = 0; k < n; ++k) {
            w[k] = std::cos(theta) * u[k] + std::sin(theta) * w[k] / wn;
        }
        const RayProjection p = RayProjection::from_unit(u);
        const RayProjection q = RayProjection::from_vector(w);

        const Effect a = make_effect(p.projection().matrix() * lambda, tol);
        const Effect b = make_effect(q.projection().matrix() * (1.0 - lambda), tol);
        if (!coexist_rank_one(lambda, p, 1.0 - lambda, q, tol)) {
            out.absorb(true, 0.0, witness({{"A", &a.matrix()}, {"B", &b.matrix()}}));
            return out;
        }
        for (const EffectAutomorphism *map : {&phi, &inv}) {
            const auto [s, pr] = rank_one_parts(apply(*map, a, tol));
            const auto [t, qr] = rank_one_parts(apply(*map, b, tol));
            const bool ok = coexist_rank_one(s, pr, t, qr, tol);
            const Matrix sum =
                pr.projection().matrix() * s + qr.projection().matrix() * t;
            const double excess = std::max(0.0, eig_hermitian(sum, tol).max() - 1.0);
            out.absorb(!ok, excess,
                       witness({{"A", &a.matrix()}, {"B", &b.matrix()}}));
        }
        return out;
    });
}

VerificationReport verify_strength(const EffectAutomorphism &phi,
                                   std::size_t trials, std::uint64_t seed,
                                   const ToleranceConfig &tol) {
    const std::size_t n = phi.dim();
    return run_suite("strength-oracle", trials, seed, [&](std::size_t, Rng &rng) {
        TrialOutcome out;
        const Effect a = random_effect_of(n, rng, tol);
        const RayProjection r = RayProjection::from_unit(random_unit_vector(n, rng));
        const StrengthValue closed = strength_closed(a, r, tol);
        if (closed.near_threshold) {
            return out;
        }
        const std::string w = witness({{"A", &a.matrix()},
                                       {"R", &r.projection().matrix()}});
        const double oracle_gap = std::abs(closed.value - strength_bisect(a, r, tol));
        out.absorb(oracle_gap > 1e-6, oracle_gap, w);

        const Effect image = apply(phi, a, tol);
        const auto [weight, image_ray] = rank_one_parts(apply(phi, r.projection(), tol));
        (void)weight;
        const double moved = strength_closed(image, image_ray, tol).value;
        const double equiv_gap = std::abs(moved - fp_eval(phi.p(), closed.value));
        out.absorb(equiv_gap > 1e-7, equiv_gap, w);
        return out;
    });
}

VerificationReport verify_pexider_suite(const EffectAutomorphism &phi,
                                        std::size_t trials, std::uint64_t seed,
                                        const ToleranceConfig &tol) {
    VerificationReport report =
        run_suite("pexider", trials, seed, [&](std::size_t, Rng &rng) {
            TrialOutcome out;
            const FracParams f{std::exp(rng.uniform(std::log(0.1), std::log(10.0))),
                               1.0, rng.uniform(0.2, 5.0)};
            io::Json doc = io::Json::object();
            doc["a"] = f.a;
            doc["c"] = f.c;
            const std::string w = io::dump(doc);

            const double fe = verify_pexider(f, f, 20);
            out.absorb(fe > 1e-10, fe, w);

            const double decomposed = PexiderDecomposition(f, f).residual(20);
            out.absorb(decomposed > 1e-9, decomposed, w);

            std::vector<std::pair<double, double>> samples;
            for (int i = 1; i <= 50; ++i) {
                const double x = grid_point(i, 50);
                samples.emplace_back(x, f_eval(f, x));
            }
            const FracFit fit = fit_frac(samples);
            const double fit_gap = std::max(std::abs(fit.params.a - f.a),
                                            std::abs(fit.params.c - f.c));
            out.absorb(fit_gap > 1e-6, fit_gap, w);

            // Off the (1, 1) point the symmetry g(1 - x) = 1 - g(x) must fail.
            double b = 1.0;
            double c = 1.0;
            while (std::hypot(b - 1.0, c - 1.0) <= 1e-3) {
                b = rng.uniform(0.1, 3.0);
                c = rng.uniform(0.2, 5.0);
            }
            out.absorb(g_symmetry_check(b, c, 20), 0.0, w);
            return out;
        });

    try {
        const FitPResult fit = fit_p(as_map(phi, tol), phi.dim(), 20, tol);
        const double gap = std::abs(fit.p.value() - phi.p().value());
        report.worst_violation = std::max(report.worst_violation, gap);
        if (gap > 1e-6) {
            ++report.failures;
            if (!report.counterexample) {
                report.counterexample = io::dump(io::map_to_json(phi));
            }
        }
    } catch (const NotInFamily &) {
        ++report.failures;
        if (!report.counterexample) {
            report.counterexample = io::dump(io::map_to_json(phi));
        }
    }
    return report;
}

} // namespace effectkit
