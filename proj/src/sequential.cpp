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

#include "effectkit/sequential.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "effectkit/errors.hpp"

namespace effectkit {

Effect seq_product(const Effect &a, const Effect &b, const ToleranceConfig &tol) {
    require_same_dim(a.matrix(), b.matrix());
    const Matrix root = mat_sqrt(a.eig(), tol);
    return make_effect((root * b.matrix() * root).hermitian_part(), tol);
}

SeqZeroCheck seq_zero_iff_zero(const Effect &a, const Effect &b,
                               const ToleranceConfig &tol) {
    require_same_dim(a.matrix(), b.matrix());
    const double scale =
        std::max(1.0, a.matrix().frobenius() * b.matrix().frobenius());
    const Effect s = seq_product(a, b, tol);
    return {s.matrix().frobenius() <= tol.eps_eq * scale,
            zero_product(a, b, tol)};
}

namespace {

struct QuotientAttempt {
    std::optional<SeqQuotient> result;
    std::string failure;
};

QuotientAttempt try_quotient(const Effect &a, const Effect &b,
                             const ToleranceConfig &tol) {
    const Matrix r = pinv_sqrt(b.eig(), tol);
    const Matrix c = (r * a.matrix() * r).hermitian_part();
    EigenDecomp eig = eig_hermitian(c, tol);
    if (eig.min() < -tol.eps_psd || eig.max() > 1.0 + tol.eps_psd) {
        return {std::nullopt, "quotient spectrum [" + std::to_string(eig.min()) +
                                  ", " + std::to_string(eig.max()) +
                                  "] leaves [0, 1]"};
    }
    Effect quotient = Effect::make(c, tol);
    const double residual =
        frobenius_distance(seq_product(b, quotient, tol).matrix(), a.matrix());
    if (residual > tol.eps_eq) {
        return {std::nullopt,
                "residual " + std::to_string(residual) + " exceeds eps_eq"};
    }
    return {SeqQuotient{std::move(quotient), residual}, {}};
}

} // namespace

SeqQuotient douglas_quotient(const Effect &a, const Effect &b,
                             const ToleranceConfig &tol) {
    require_same_dim(a.matrix(), b.matrix());
    if (!leq(a, b, tol)) {
        throw OrderViolation("A is not below B");
    }
    QuotientAttempt attempt = try_quotient(a, b, tol);
    if (!attempt.result) {
        throw QuotientFailure(attempt.failure);
    }
    return std::move(*attempt.result);
}

bool order_via_seq(const Effect &a, const Effect &b, const ToleranceConfig &tol) {
    require_same_dim(a.matrix(), b.matrix());
    return try_quotient(a, b, tol).result.has_value();
}

} // namespace effectkit
