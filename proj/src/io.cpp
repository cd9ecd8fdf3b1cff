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

#include "effectkit/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "effectkit/errors.hpp"

namespace effectkit::io {

namespace {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json &entry) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
        throw ParseError("entries must be [re, im] pairs of numbers");
    }
    const double re = entry[0].get<double>();
    const double im = entry[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw ParseError("entries must be finite");
    }
    return {re, im};
}

} // namespace

Json matrix_to_json(const Matrix &m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            row.push_back(complex_to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    Json doc = Json::object();
    doc["n"] = m.dim();
    doc["rows"] = std::move(rows);
    return doc;
}

Matrix matrix_from_json(const Json &doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows")) {
        throw ParseError("matrix document needs \"n\" and \"rows\"");
    }
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
        throw ParseError("\"n\" must be a positive integer");
    }
    const auto n = static_cast<std::size_t>(doc["n"].get<long long>());
    const Json &rows = doc["rows"];
    if (!rows.is_array() || rows.size() != n) {
        throw ParseError("\"rows\" must hold n rows");
    }
    std::vector<Complex> entries;
    entries.reserve(n * n);
    for (const Json &row : rows) {
        if (!row.is_array() || row.size() != n) {
            throw ParseError("every row must hold n entries");
        }
        for (const Json &entry : row) {
            entries.push_back(complex_from_json(entry));
        }
    }
    return Matrix(n, std::move(entries));
}

Json vector_to_json(std::span<const Complex> v) {
    Json arr = Json::array();
    for (Complex z : v) {
        arr.push_back(complex_to_json(z));
    }
    Json doc = Json::object();
    doc["vector"] = std::move(arr);
    return doc;
}

Vector vector_from_json(const Json &doc) {
    const Json *arr = &doc;
    if (doc.is_object()) {
        if (!doc.contains("vector")) {
            throw ParseError("ray document needs \"vector\"");
        }
        arr = &doc["vector"];
    }
    if (!arr->is_array() || arr->empty()) {
        throw ParseError("ray vector must be a non-empty array");
    }
    Vector v;
    v.reserve(arr->size());
    for (const Json &entry : *arr) {
        v.push_back(complex_from_json(entry));
    }
    return v;
}

Json map_to_json(const EffectAutomorphism &phi) {
    Json doc = Json::object();
    doc["U"] = matrix_to_json(phi.unitary());
    doc["conjugate"] = phi.conjugate();
    doc["p"] = phi.p().value();
    return doc;
}

EffectAutomorphism map_from_json(const Json &doc) {
    if (!doc.is_object() || !doc.contains("U") || !doc.contains("p")) {
        throw ParseError("map document needs \"U\" and \"p\"");
    }
    bool conjugate = false;
    if (doc.contains("conjugate")) {
        if (!doc["conjugate"].is_boolean()) {
            throw ParseError("\"conjugate\" must be a boolean");
        }
        conjugate = doc["conjugate"].get<bool>();
    }
    if (!doc["p"].is_number()) {
        throw ParseError("\"p\" must be a number");
    }
    return {matrix_from_json(doc["U"]), conjugate, FpParam(doc["p"].get<double>())};
}

Json report_to_json(const VerificationReport &report) {
    Json doc = Json::object();
    doc["suite"] = report.suite;
    doc["trials"] = report.trials;
    doc["failures"] = report.failures;
    doc["worst_violation"] = report.worst_violation;
    doc["counterexample"] =
        report.counterexample ? Json::parse(*report.counterexample) : Json();
    doc["seed"] = report.seed;
    return doc;
}

namespace {

void format_double(std::ostream &out, double v) {
    if (!std::isfinite(v)) {
        out << "null";
        return;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string_view s(buf);
    out << s;
    if (s.find_first_of(".eE") == std::string_view::npos) {
        out << ".0";
    }
}

void write(std::ostream &out, const Json &doc, int indent, int depth) {
    const bool pretty = indent >= 0;
    auto newline = [&](int d) {
        if (pretty) {
            out << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
        }
    };
    switch (doc.type()) {
    case Json::value_t::object: {
        if (doc.empty()) {
            out << "{}";
            return;
        }
        out << '{';
        bool first = true;
        for (const auto &[key, value] : doc.items()) {
            if (!first) {
                out << ',';
            }
            first = false;
            newline(depth + 1);
            out << Json(key).dump() << (pretty ? ": " : ":");
            write(out, value, indent, depth + 1);
        }
        newline(depth);
        out << '}';
        return;
    }
    case Json::value_t::array: {
        if (doc.empty()) {
            out << "[]";
            return;
        }
        // Short numeric arrays ([re, im] pairs) stay on one line.
        const bool inline_array =
            std::all_of(doc.begin(), doc.end(),
                        [](const Json &e) { return e.is_primitive(); });
        out << '[';
        bool first = true;
        for (const Json &value : doc) {
            if (!first) {
                out << (pretty && inline_array ? ", " : ",");
            }
            first = false;
            if (!inline_array) {
                newline(depth + 1);
            }
            write(out, value, indent, depth + 1);
        }
        if (!inline_array) {
            newline(depth);
        }
        out << ']';
        return;
    }
    case Json::value_t::number_float:
        format_double(out, doc.get<double>());
        return;
    default:
        out << doc.dump();
        return;
    }
}

} // namespace

std::string dump(const Json &doc, int indent) {
    std::ostringstream out;
    write(out, doc, indent, 0);
    return out.str();
}

Json read_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

} // namespace effectkit::io
