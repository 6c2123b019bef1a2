// Copyright 2026 The teq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef TEQ_IO_HPP_
#define TEQ_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"
#include "teq/decompose.hpp"
#include "teq/hilbert.hpp"
#include "teq/hunt.hpp"
#include "teq/matrix.hpp"
#include "teq/triangulation.hpp"

namespace teq {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

// Matrix text: one row per line, entries "p" or "p/q" separated by
// whitespace; "#" lines and blank lines are skipped. Throws ParseError with
// the 1-based line and column of the offending token.
Matrix parse_matrix(std::string_view text);
Matrix read_matrix_file(const std::string& path);
std::string format_matrix(const Matrix& a);

// Exact values travel as strings.
Json to_json(const Rat& value);
Json to_json(const Vector& v);
Json to_json(const Matrix& a);
Rat rat_from_json(const Json& j);
Vector vector_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);

Json decomposition_json(const DecompositionResult& result);
Json hilbert_json(const HilbertBasis& basis);
Json triangulation_json(const Triangulation& t, const TriangulationReport& report);
Triangulation triangulation_from_json(const Json& j);
Json search_report_json(const SearchReport& report);

// {command, input, result, certificates, version}.
Json certificate(const std::string& command, const Json& input, const Json& result,
                 const Json& certificates);

}  // namespace teq

#endif  // TEQ_IO_HPP_
