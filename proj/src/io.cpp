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
#include "teq/io.hpp"

#include <fstream>
#include <sstream>

#include "teq/errors.hpp"

namespace teq {

Matrix parse_matrix(std::string_view text) {
  std::vector<Vector> rows;
  Index width = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    Vector row;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t') {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      try {
        row.push_back(parse_rat(line.substr(start, i - start)));
      } catch (const DomainError& e) {
        throw ParseError(e.what(), line_no, int(start) + 1);
      }
    }
    if (rows.empty()) {
      width = row.size();
    } else if (row.size() != width) {
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(width),
                       line_no, 1);
    }
    rows.push_back(std::move(row));
    if (end == text.size()) break;
  }
  if (rows.empty()) throw ParseError("no matrix rows", line_no, 1);
  return Matrix::from_rows(rows, width);
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::string format_matrix(const Matrix& a) {
  std::string out;
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ' ';
      out += to_string(a(i, j));
    }
    out += '\n';
  }
  return out;
}

Json to_json(const Rat& value) { return to_string(value); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const Matrix& a) {
  Json out = Json::array();
  for (Index i = 0; i < a.rows(); ++i) out.push_back(to_json(a.row(i)));
  return out;
}

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("expected an exact number as a string", 0, 0);
  try {
    return parse_rat(j.get<std::string>());
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array", 0, 0);
  Vector v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty array of rows", 0, 0);
  std::vector<Vector> rows;
  for (const auto& r : j) {
    rows.push_back(vector_from_json(r));
    if (rows.back().size() != rows.front().size()) throw ParseError("ragged matrix", 0, 0);
  }
  return Matrix::from_rows(rows, rows.front().size());
}

namespace {

Json index_sets(const std::vector<IndexList>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

}  // namespace

Json decomposition_json(const DecompositionResult& result) {
  Json out;
  out["ok"] = result.ok();
  if (result.not_te_witness) out["notTeWitness"] = *result.not_te_witness;
  if (result.not_mutually_tu_witness) out["notMutuallyTuWitness"] = *result.not_mutually_tu_witness;
  if (!result.decomposition) return out;
  const Decomposition& d = *result.decomposition;
  Json bricks = Json::array();
  if (!d.tu_set.empty()) bricks.push_back({{"type", "tu-set"}, {"rows", d.tu_set}});
  for (const auto& s : d.laces) bricks.push_back({{"type", "te-lace"}, {"rows", s}});
  for (const auto& s : d.thin) bricks.push_back({{"type", "thin te-interlace"}, {"rows", s}});
  for (const auto& s : d.thick) bricks.push_back({{"type", "thick te-interlace"}, {"rows", s}});
  out["bricks"] = bricks;
  out["minimalNonTu"] = index_sets(d.minimal_non_tu);
  out["equideterminant"] = to_string(eqdet_from_decomposition(d));
  return out;
}

Json hilbert_json(const HilbertBasis& basis) {
  Json out = Json::array();
  for (Index i = 0; i < basis.elements.size(); ++i) {
    out.push_back({{"vector", to_json(basis.elements[i])}, {"origin", to_string(basis.origins[i])}});
  }
  return out;
}

Json triangulation_json(const Triangulation& t, const TriangulationReport& report) {
  Json out;
  Json points = Json::array();
  for (const auto& p : t.points) points.push_back(to_json(p));
  out["points"] = points;
  out["cells"] = index_sets(t.cells);
  const auto& lifting = t.lifting ? t.lifting : report.found_lifting;
  out["lifting"] = lifting ? to_json(*lifting) : Json(nullptr);
  out["checks"] = {{"hilbert", report.hilbert},
                   {"unimodular", report.unimodular},
                   {"covering", report.covering},
                   {"disjoint", report.disjoint},
                   {"regular", report.regular},
                   {"normalizedVolume", to_string(report.normalized_volume)},
                   {"rawVolume", to_string(report.raw_volume)}};
  return out;
}

Triangulation triangulation_from_json(const Json& j) {
  try {
    Triangulation t;
    for (const auto& p : j.at("points")) t.points.push_back(vector_from_json(p));
    for (const auto& c : j.at("cells")) t.cells.push_back(c.get<IndexList>());
    if (j.contains("lifting") && !j.at("lifting").is_null()) t.lifting = vector_from_json(j.at("lifting"));
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad triangulation: ") + e.what(), 0, 0);
  }
}

Json search_report_json(const SearchReport& report) {
  Json reps = Json::array();
  for (const auto& r : report.representatives) {
    reps.push_back({{"key", r.key}, {"matrix", to_json(r.matrix)}});
  }
  Json out;
  out["size"] = report.size;
  out["representatives"] = reps;
  out["candidatesExamined"] = report.candidates_examined;
  out["coreClassesExamined"] = report.core_classes_examined;
  out["shards"] = report.shards;
  return out;
}

Json certificate(const std::string& command, const Json& input, const Json& result,
                 const Json& certificates) {
  Json out;
  out["command"] = command;
  out["input"] = input;
  out["result"] = result;
  out["certificates"] = certificates;
  out["version"] = kVersion;
  return out;
}

}  // namespace teq
