// Copyright 2026 The geodex Authors
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

// geodex command-line tool. Exit codes: 0 success / all claims pass,
// 1 a claim failed, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "geodex/analyze.h"
#include "geodex/census.h"
#include "geodex/families.h"
#include "geodex/graph_io.h"
#include "geodex/report.h"
#include "geodex/verify.h"

namespace {

constexpr int kClaimFailure = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void Emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct CayleyInput {
  geodex::FiniteGroup group;
  geodex::ConnectionSet s;
};

std::optional<CayleyInput> CayleyPresentationOf(const geodex::FamilySpec& spec) {
  using geodex::Family;
  switch (spec.family) {
    case Family::kEp3FamilyA:
    case Family::kEp3FamilyB: {
      geodex::FiniteGroup e = geodex::ExtraspecialP3(spec.params[0]);
      geodex::ConnectionSet s = spec.family == Family::kEp3FamilyA ? geodex::ExtraspecialSetA(e)
                                                                   : geodex::ExtraspecialSetB(e);
      return CayleyInput{std::move(e), std::move(s)};
    }
    case Family::kCayley: {
      geodex::FiniteGroup g = geodex::ParseGroupSpec(spec.group);
      geodex::ConnectionSet s(g, spec.connection);
      return CayleyInput{std::move(g), std::move(s)};
    }
    default:
      return std::nullopt;
  }
}

int RunBuild(const std::string& spec_text, const std::string& format, const std::string& out) {
  const geodex::Graph g = geodex::Build(geodex::ParseFamilySpec(spec_text));
  Emit(format == "graph6" ? geodex::WriteGraph6(g) + "\n" : geodex::WriteEdgeList(g), out);
  return 0;
}

int RunAnalyze(const std::string& spec_text, const std::string& in_path, bool machine) {
  if (spec_text.empty() == in_path.empty()) {
    throw UsageError("analyze needs exactly one of <spec> or --in");
  }
  geodex::Graph g;
  std::optional<CayleyInput> cayley;
  std::string source;
  if (!in_path.empty()) {
    g = geodex::ReadGraphAuto(ReadFile(in_path));
    source = in_path;
  } else {
    const geodex::FamilySpec spec = geodex::ParseFamilySpec(spec_text);
    g = geodex::Build(spec);
    cayley = CayleyPresentationOf(spec);
    source = geodex::FormatFamilySpec(spec);
  }
  if (!geodex::IsConnected(g)) throw UsageError("graph is disconnected");
  const geodex::SearchResult search = geodex::SearchAutomorphisms(g);
  const geodex::PermGroup aut = geodex::GroupFromSearch(g, search);
  geodex::TransitivityReport report = geodex::Analyze(g, aut, true);
  if (cayley) report.normal_cayley = geodex::IsNormalCayley(cayley->group, cayley->s, aut);

  geodex::Fields fields = {{"graph", source}};
  try {
    const geodex::Classification c = geodex::ClassifyNamed(g, search.key);
    fields.emplace_back("classification",
                        c.tag + (c.parameter_match ? " (parameter-match)" : ""));
  } catch (const std::invalid_argument&) {
    fields.emplace_back("classification", "n/a");
  }
  for (auto& f : geodex::ReportFields(report)) fields.push_back(std::move(f));
  std::cout << geodex::RenderFields(fields, machine);
  return 0;
}

int RunCensusCommand(int order, int jobs, const std::string& out) {
  Emit(geodex::FormatCensus(geodex::RunCensus(order, jobs)), out);
  return 0;
}

int RunVerify(const std::string& suite, int p, std::optional<int> m, int jobs) {
  geodex::VerifyOptions options;
  options.p = p;
  options.m = m;
  options.jobs = jobs;
  const auto outcomes = geodex::RunSuite(suite, options);
  std::cout << geodex::FormatOutcomes(outcomes);
  return geodex::AllPass(outcomes) ? 0 : kClaimFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geodex: 2-geodesic transitive graphs of prime-power order"};
  app.require_subcommand(1);

  std::string build_spec, build_format = "edges", build_out;
  auto* build = app.add_subcommand("build", "Build a named graph and write it out");
  build->add_option("spec", build_spec, "Family spec, e.g. ep3B:3, hamming:2,3, kmb:9,3")
      ->required();
  build->add_option("--format", build_format, "edges or graph6")
      ->check(CLI::IsMember({"edges", "graph6"}));
  build->add_option("--out", build_out, "Output path (default stdout)");

  std::string analyze_spec, analyze_in;
  bool analyze_machine = false;
  auto* analyze = app.add_subcommand("analyze", "Print the transitivity report of a graph");
  analyze->add_option("spec", analyze_spec, "Family spec");
  analyze->add_option("--in", analyze_in, "Edge-list or graph6 file");
  analyze->add_flag("--machine", analyze_machine, "key=value output");

  int census_order = 0, census_jobs = 1;
  std::string census_out;
  auto* census = app.add_subcommand("census", "Exhaustive Cayley-graph census");
  census->add_option("--order", census_order, "4, 8, 9, 25 or 27")->required();
  census->add_option("--jobs", census_jobs, "Worker threads")->check(CLI::PositiveNumber);
  census->add_option("--out", census_out, "Output path (default stdout)");

  std::string verify_suite;
  int verify_p = 0, verify_jobs = 1;
  std::optional<int> verify_m;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", verify_suite, "thm4.3, ex3.4, cor6.3, prop3.5, thm1.2, thm1.4, thm1.5")
      ->required()
      ->check(CLI::IsMember(geodex::SuiteNames()));
  verify->add_option("--p", verify_p, "Prime")->required();
  verify->add_option("--m", verify_m, "Divisor of p-1 (thm4.3)");
  verify->add_option("--jobs", verify_jobs, "Census worker threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*build) return RunBuild(build_spec, build_format, build_out);
    if (*analyze) return RunAnalyze(analyze_spec, analyze_in, analyze_machine);
    if (*census) return RunCensusCommand(census_order, census_jobs, census_out);
    if (*verify) return RunVerify(verify_suite, verify_p, verify_m, verify_jobs);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const geodex::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const geodex::SearchBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
