// Copyright 2026 The hyperee Authors
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

#include "hyperee/cli.h"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperee/families.h"
#include "hyperee/hypergraph.h"
#include "hyperee/hypergraph_io.h"
#include "hyperee/report.h"
#include "hyperee/theorems.h"

namespace hyperee {
namespace {

struct RunConfig {
  std::string input;
  std::string suite;
  std::string out_path;
  std::string format = "text";
  std::string variant;
  std::optional<std::size_t> k;
  std::optional<std::size_t> t;
  std::size_t n_over = 0;
  std::size_t budget = 16;
  std::size_t s_max = 0;
  std::size_t instances = 1000;
  std::uint64_t seed = 0;
};

// An input is a file when one exists at that path, otherwise a family string.
Hypergraph LoadInput(const std::string& input) {
  if (std::filesystem::exists(input)) return ReadHypergraphFile(input);
  try {
    return Build(ParseFamily(input));
  } catch (const HypergraphError& e) {
    if (e.code() != ErrorCode::kParse) throw;
    throw HypergraphError(ErrorCode::kParse,
                          "'" + input + "' is neither a readable file nor a family (" +
                              e.what() + ")");
  }
}

std::size_t ResolveK(const Hypergraph& h, const std::optional<std::size_t>& k) {
  if (k) {
    RequireUniform(h, *k);
    return *k;
  }
  const Uniformity u = GetUniformity(h);
  if (u.kind == Uniformity::Kind::kUniform) return u.k;
  throw HypergraphError(ErrorCode::kInvalidArgument,
                        u.kind == Uniformity::Kind::kVacuous
                            ? "edgeless input: pass --k"
                            : "input is not uniform");
}

void Emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw HypergraphError(ErrorCode::kInvalidArgument, "cannot write " + cfg.out_path);
  file << text;
}

void EmitHypergraph(const RunConfig& cfg, const Hypergraph& h, std::ostream& out) {
  if (!cfg.out_path.empty()) {
    WriteHypergraphFile(cfg.out_path, h);
    return;
  }
  out << (cfg.format == "json" ? ToJson(h) + "\n" : ToText(h));
}

OutputFormat Format(const RunConfig& cfg) { return *ParseOutputFormat(cfg.format); }

int RunCheck(const RunConfig& cfg, std::ostream& out) {
  const Hypergraph h = LoadInput(cfg.input);
  const std::size_t k = ResolveK(h, cfg.k);
  CheckOptions options;
  options.t = cfg.t;
  if (cfg.variant == "as-written") options.variants = {SumBoundVariant::kAsWritten};
  if (cfg.variant == "theta-plus-one") options.variants = {SumBoundVariant::kThetaPlusOne};
  const auto reports = CheckAllBounds(h, k, options);
  Emit(cfg, FormatBoundReports(reports, Format(cfg)), out);
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const BoundReport& r) { return r.holds; });
  return ok ? kExitOk : kExitCheckFailed;
}

int RunVerify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::size_t k = cfg.k.value_or(3);
  if (cfg.suite == "extremal") {
    if (cfg.n_over == 0) throw HypergraphError(ErrorCode::kInvalidArgument, "verify extremal needs --nover");
    const ExtremalReport r = VerifyExtremal(cfg.n_over, k);
    Emit(cfg, FormatExtremalReport(r, Format(cfg)), out);
    if (!r.passed) err << "extremal verification failed\n";
    return r.passed ? kExitOk : kExitCheckFailed;
  }
  if (cfg.suite == "orderings") {
    const auto reports = VerifyOrderingLemmas(k, cfg.budget);
    Emit(cfg, FormatOrderingReports(reports, Format(cfg)), out);
    const bool ok = std::all_of(reports.begin(), reports.end(),
                                [](const OrderingReport& r) { return r.AllStrict(); });
    if (!ok) err << "an ordering instance is not strict\n";
    return ok ? kExitOk : kExitCheckFailed;
  }
  const BoundSweepResult r = RunRandomBoundSweep(cfg.instances, cfg.seed);
  Emit(cfg, FormatSweep(r, cfg.seed, Format(cfg)), out);
  if (!r.failures.empty()) err << r.failures.size() << " bound failures\n";
  return r.failures.empty() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Estrada index and spectral bounds for uniform hypergraphs", "hyperee"};
  app.require_subcommand(1, 1);

  const std::vector<std::string> formats = {"json", "csv", "text"};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", cfg.out_path, "Write to this path instead of stdout");
  };
  auto add_k = [&](CLI::App* sub) { sub->add_option("--k", cfg.k, "Uniformity")->check(CLI::Range(2, 64)); };

  CLI::App* gen = app.add_subcommand("gen", "Generate a family member (e.g. cm:3:4,0, fano)");
  gen->add_option("family", cfg.input, "Family string")->required();
  add_format(gen);

  CLI::App* spectrum = app.add_subcommand("spectrum", "Eigenvalues, Estrada index, energy, moments");
  spectrum->add_option("input", cfg.input, "Hypergraph file or family string")->required();
  spectrum->add_option("--smax", cfg.s_max, "Also report exact closed-walk totals up to this length");
  add_format(spectrum);

  CLI::App* check = app.add_subcommand("check", "Evaluate every bound on one hypergraph");
  check->add_option("input", cfg.input, "Hypergraph file or family string")->required();
  add_k(check);
  check->add_option("--t", cfg.t, "Only this t for the sum-of-largest bounds");
  check->add_option("--variant", cfg.variant, "Denominator of the sum-of-largest bound")
      ->check(CLI::IsMember({"as-written", "theta-plus-one"}));
  add_format(check);

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", cfg.suite, "extremal, orderings or bounds")
      ->required()
      ->check(CLI::IsMember({"extremal", "orderings", "bounds"}));
  add_k(verify);
  verify->add_option("--nover", cfg.n_over, "n/(k-1) for the extremal suite");
  verify->add_option("--budget", cfg.budget, "Largest vertex count for the ordering suite");
  verify->add_option("--seed", cfg.seed, "Seed for the random bound sweep");
  verify->add_option("--instances", cfg.instances, "Hypergraphs in the random bound sweep");
  add_format(verify);

  CLI::App* enumerate = app.add_subcommand("enumerate", "List the unicyclic catalog with Estrada indices");
  enumerate->add_option("--nover", cfg.n_over, "n/(k-1)")->required();
  add_k(enumerate);
  add_format(enumerate);

  CLI::App* complement = app.add_subcommand("complement", "All absent k-subsets as edges");
  complement->add_option("input", cfg.input, "Hypergraph file or family string")->required();
  add_k(complement);
  add_format(complement);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (gen->parsed()) {
      EmitHypergraph(cfg, Build(ParseFamily(cfg.input)), out);
      return kExitOk;
    }
    if (spectrum->parsed()) {
      Emit(cfg, FormatSpectrum(LoadInput(cfg.input), Format(cfg), cfg.s_max), out);
      return kExitOk;
    }
    if (check->parsed()) return RunCheck(cfg, out);
    if (verify->parsed()) return RunVerify(cfg, out, err);
    if (enumerate->parsed()) {
      Emit(cfg, FormatCatalog(UnicyclicCatalog(cfg.n_over, cfg.k.value_or(3)), Format(cfg)), out);
      return kExitOk;
    }
    const Hypergraph h = LoadInput(cfg.input);
    EmitHypergraph(cfg, ComplementUniform(h, ResolveK(h, cfg.k)), out);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace hyperee
