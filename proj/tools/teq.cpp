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
// Command-line front end. Exit status: 0 when the verdict holds or the
// command succeeds, 1 when it fails with a witness, 2 on usage or input
// errors.
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "teq/calculus.hpp"
#include "teq/classify.hpp"
#include "teq/decompose.hpp"
#include "teq/errors.hpp"
#include "teq/hilbert.hpp"
#include "teq/hunt.hpp"
#include "teq/io.hpp"
#include "teq/parallel.hpp"
#include "teq/triangulation.hpp"

namespace {

using namespace teq;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

std::string one_based(const IndexList& idx) {
  std::string s = "{";
  for (Index i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i] + 1);
  return s + "}";
}

struct Args {
  std::string file;
  std::string out;
  std::string resume;
  unsigned jobs = default_jobs();
  Index size = 0;
};

void emit(const Json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f) throw ParseError("cannot write " + out, 0, 0);
  f << text;
}

Json input_of(const Args& args, const Matrix& a) { return {{"file", args.file}, {"matrix", to_json(a)}}; }

int check_tu(const Args& args) {
  const Matrix a = read_matrix_file(args.file);
  const TuVerdict v = check_totally_unimodular(a);
  std::cout << "totally unimodular: " << (v.holds ? "true" : "false") << "\n";
  if (v.holds) return kHolds;
  const auto& w = *v.witness;
  std::cout << "witness: rows " << one_based(w.rows) << " cols " << one_based(w.cols)
            << " determinant " << to_string(det(a.submatrix(w.rows, w.cols))) << "\n";
  return kFails;
}

int check_te(const Args& args) {
  const Matrix a = read_matrix_file(args.file);
  const TeVerdict v = check_totally_equimodular(a);
  std::cout << "totally equimodular: " << (v.holds ? "true" : "false") << "\n";
  if (v.holds) return kHolds;
  std::cout << "witness: independent rows " << one_based(*v.witness) << " are not equimodular\n";
  return kFails;
}

int classify(const Args& args) {
  const Matrix a = read_matrix_file(args.file);
  const auto type = brick_type(a);
  if (!type) {
    std::cout << "not a te-brick\n";
    return kFails;
  }
  std::cout << to_string(type->tag) << " (size " << type->size << ", equideterminant "
            << to_string(type->equideterminant) << ")\n";
  return kHolds;
}

int decompose(const Args& args) {
  const Matrix a = read_matrix_file(args.file);
  const DecompositionResult r = decompose_te_set(a);
  Json certs = Json::object();
  if (r.ok()) {
    certs["mutuallyTu"] = verify_mutually_tu(*r.decomposition).holds;
    certs["directEquideterminant"] = to_string(eqdet(a));
  }
  emit(certificate("decompose", input_of(args, a), decomposition_json(r), certs), args.out);
  return r.ok() ? kHolds : kFails;
}

int hilbert(const Args& args, bool oracle) {
  const Matrix a = read_matrix_file(args.file);
  const TeCone cone(a);
  const HilbertBasis basis = oracle ? hilbert_oracle(cone) : hilbert_basis_te_cone(cone);
  Json certs = {{"gcddet", to_string(gcddet(a))}};
  if (oracle) certs["zonotopePoints"] = zonotope_points(cone).points.size();
  emit(certificate(oracle ? "oracle" : "hilbert", input_of(args, a), hilbert_json(basis), certs),
       args.out);
  return kHolds;
}

int triangulate(const Args& args) {
  const Matrix a = read_matrix_file(args.file);
  const TeCone cone(a);
  VerifyOptions options;
  options.jobs = args.jobs;
  const Triangulation t = triangulate_te_cone(cone, options);
  const TriangulationReport report = verify_triangulation(cone, t, options);
  Json certs = {{"cellCount", t.cells.size()}, {"normalizedVolume", to_string(report.normalized_volume)}};
  emit(certificate("triangulate", input_of(args, a), triangulation_json(t, report), certs), args.out);
  return report.ok() ? kHolds : kFails;
}

Json hunt_json(const SearchReport& r) {
  Json certs = Json::object();
  if (r.size <= 4) certs["rawOracleAgrees"] = raw_thick_interlaces(r.size) == r.representatives;
  return certs;
}

int hunt(const Args& args) {
  HuntOptions options;
  options.jobs = args.jobs;
  if (!args.resume.empty()) options.checkpoint = args.resume;
  const SearchReport r = enumerate_thick_interlaces(args.size, options);
  std::cerr << "shards: " << r.shards << " (resumed " << r.shards_resumed << ")\n";
  emit(certificate("hunt", {{"size", args.size}}, search_report_json(r), hunt_json(r)), args.out);
  return kHolds;
}

// Recomputes or re-checks a certificate written by another subcommand.
int verify(const Args& args) {
  std::ifstream in(args.file, std::ios::binary);
  if (!in) throw ParseError("cannot open " + args.file, 0, 0);
  const Json cert = Json::parse(in, nullptr, false);
  if (cert.is_discarded() || !cert.is_object()) throw ParseError("certificate is not JSON", 0, 0);
  const std::string command = cert.value("command", "");
  bool ok = false;
  try {
    if (command == "hunt") {
      const Index size = cert.at("input").at("size").get<Index>();
      HuntOptions options;
      options.jobs = args.jobs;
      const SearchReport r = enumerate_thick_interlaces(size, options);
      ok = search_report_json(r) == cert.at("result") && hunt_json(r) == cert.at("certificates");
      for (const auto& rep : r.representatives) {
        const auto type = brick_type(rep.matrix);
        ok = ok && type && type->tag == BrickTag::ThickInterlace;
      }
      std::cout << "representatives reproduced: " << (ok ? "true" : "false") << "\n";
    } else {
      const Matrix a = matrix_from_json(cert.at("input").at("matrix"));
      if (command == "decompose") {
        const DecompositionResult r = decompose_te_set(a);
        ok = decomposition_json(r) == cert.at("result") && r.ok() &&
             verify_mutually_tu(*r.decomposition).holds &&
             eqdet_from_decomposition(*r.decomposition) == eqdet(a);
        std::cout << "decomposition reproduced: " << (ok ? "true" : "false") << "\n";
      } else if (command == "hilbert" || command == "oracle") {
        const TeCone cone(a);
        std::set<Vector> claimed;
        for (const auto& e : cert.at("result")) claimed.insert(vector_from_json(e.at("vector")));
        // Cross-check against the other method when the grid allows it.
        std::vector<Vector> expected;
        if (command == "oracle") {
          expected = hilbert_basis_te_cone(cone).sorted();
        } else {
          try {
            expected = hilbert_oracle(cone).sorted();
          } catch (const UnsupportedError&) {
            expected = hilbert_basis_te_cone(cone).sorted();
          }
        }
        ok = claimed == std::set<Vector>(expected.begin(), expected.end());
        for (const auto& v : claimed) ok = ok && is_hilbert_element(cone, v);
        std::cout << "hilbert basis confirmed: " << (ok ? "true" : "false") << "\n";
      } else if (command == "triangulate") {
        const TeCone cone(a);
        VerifyOptions options;
        options.jobs = args.jobs;
        const TriangulationReport r = verify_triangulation(cone, triangulation_from_json(cert.at("result")), options);
        std::cout << "hilbert: " << r.hilbert << "\nunimodular: " << r.unimodular
                  << "\ncovering: " << r.covering << "\ndisjoint: " << r.disjoint
                  << "\nregular: " << r.regular << "\n";
        for (const auto& f : r.failures) std::cout << "failure: " << f << "\n";
        ok = r.ok();
      } else {
        throw ParseError("unknown certificate command '" + command + "'", 0, 0);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what(), 0, 0);
  }
  std::cout << "certificate verified: " << (ok ? "true" : "false") << "\n";
  return ok ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for totally equimodular matrices and their cones"};
  app.require_subcommand(1);
  Args args;
  std::function<int()> run;

  auto with_file = [&](const std::string& name, const std::string& help, auto body, bool json) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", args.file, "matrix file")->required();
    if (json) sub->add_option("--out", args.out, "write JSON here instead of stdout");
    sub->add_option("--jobs", args.jobs, "worker threads (default TEQ_JOBS)")->check(CLI::PositiveNumber);
    sub->callback([&, body] { run = [&, body] { return body(args); }; });
  };
  with_file("check-tu", "decide total unimodularity", check_tu, false);
  with_file("check-te", "decide total equimodularity", check_te, false);
  with_file("classify", "name the te-brick type", classify, false);
  with_file("decompose", "split a te-set into mutually-tu bricks", decompose, true);
  with_file("hilbert", "Hilbert basis from the brick formulas", [](const Args& a) { return hilbert(a, false); }, true);
  with_file("oracle", "Hilbert basis by zonotope enumeration", [](const Args& a) { return hilbert(a, true); }, true);
  with_file("triangulate", "regular unimodular triangulation", triangulate, true);
  with_file("verify", "re-check a JSON certificate", verify, false);

  CLI::App* h = app.add_subcommand("hunt", "enumerate thick te-interlaces of one size");
  h->add_option("--size", args.size, "matrix size")->required();
  h->add_option("--resume", args.resume, "checkpoint file to resume from and append to");
  h->add_option("--jobs", args.jobs, "worker threads (default TEQ_JOBS)")->check(CLI::PositiveNumber);
  h->add_option("--out", args.out, "write JSON here instead of stdout");
  h->callback([&] { run = [&] { return hunt(args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kHolds : kUsage;
  }
  const auto start = std::chrono::steady_clock::now();
  int code = kUsage;
  try {
    code = run();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const ClassificationError& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    code = kFails;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  std::cerr << "elapsed: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
            << " s\n";
  return code;
}
