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
 * JSON documents used by the command-line tool.
 *
 * Matrix document: {"n": 2, "rows": [[[re, im], [re, im]], [[re, im], [re, im]]]}
 * Ray document:    {"vector": [[re, im], ...]}  (normalised on load)
 * Map document:    {"U": <matrix document>, "conjugate": false, "p": 0.5}
 *
 * Doubles are written with 17 significant digits so every value round trips.
 */

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "effectkit/autos.hpp"
#include "effectkit/matrix.hpp"

namespace effectkit::io {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const Matrix &m);
/// Throws ParseError on any shape or type problem, or a non-finite entry.
Matrix matrix_from_json(const Json &doc);

Json vector_to_json(std::span<const Complex> v);
/// Accepts {"vector": [...]} or a bare array of [re, im] pairs.
Vector vector_from_json(const Json &doc);

Json map_to_json(const EffectAutomorphism &phi);
/// Throws ParseError for malformed input, NotUnitary or ParamError for an
/// invalid map.
EffectAutomorphism map_from_json(const Json &doc);

Json report_to_json(const VerificationReport &report);

/// Compact or indented JSON text; floating-point values use %.17g.
std::string dump(const Json &doc, int indent = -1);

/// Throws ParseError when the file is missing or not valid JSON.
Json read_file(const std::filesystem::path &path);

} // namespace effectkit::io
