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
 * Exception hierarchy shared by every effectkit module.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace effectkit {

/// Base class of all effectkit errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Errors caused by malformed arguments (wrong shapes, out-of-domain
/// parameters). The CLI maps these to usage failures.
class UsageError : public Error {
  public:
    using Error::Error;
};

/// Errors raised when a mathematical check fails on well-formed input.
class NumericError : public Error {
  public:
    using Error::Error;
};

#define EFFECTKIT_DEFINE_ERROR(Name, Base)                                     \
    class Name : public Base {                                                 \
      public:                                                                  \
        explicit Name(const std::string &what) : Base(#Name ": " + what) {}    \
    }

EFFECTKIT_DEFINE_ERROR(DimensionError, UsageError);
EFFECTKIT_DEFINE_ERROR(DomainError, UsageError);
EFFECTKIT_DEFINE_ERROR(ParamError, UsageError);
EFFECTKIT_DEFINE_ERROR(DegenerateRanges, UsageError);
EFFECTKIT_DEFINE_ERROR(ParseError, UsageError);

EFFECTKIT_DEFINE_ERROR(HermiticityViolation, NumericError);
EFFECTKIT_DEFINE_ERROR(NotPositiveSemidefinite, NumericError);
EFFECTKIT_DEFINE_ERROR(SpectrumOutOfRange, NumericError);
EFFECTKIT_DEFINE_ERROR(RankError, NumericError);
EFFECTKIT_DEFINE_ERROR(OrderViolation, NumericError);
EFFECTKIT_DEFINE_ERROR(OrthogonalityError, NumericError);
EFFECTKIT_DEFINE_ERROR(SpanError, NumericError);
EFFECTKIT_DEFINE_ERROR(QuotientFailure, NumericError);
EFFECTKIT_DEFINE_ERROR(FitError, NumericError);
EFFECTKIT_DEFINE_ERROR(NotScalarAction, NumericError);
EFFECTKIT_DEFINE_ERROR(NotInFamily, NumericError);
EFFECTKIT_DEFINE_ERROR(NotUnitary, UsageError);

#undef EFFECTKIT_DEFINE_ERROR

} // namespace effectkit
