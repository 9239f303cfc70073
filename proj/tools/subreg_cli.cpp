// Copyright 2026 The polysubreg Authors
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

// Command-line front end: analyze, verify-chain, generate, catalog, lemma21.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subreg/subreg.hpp"

namespace {

using namespace subreg;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitChain = 3;

constexpr double kChainThreshold = 0.05;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kIterationCap:
    case ErrorCode::kNoWitness:
      return kExitNumerical;
    default:
      return kExitInvalid;
  }
}

struct AnalyzeArgs {
  std::string file;
  std::vector<double> deltas;
  int samples = 20000;
  std::uint64_t seed = 0;
  std::string norm;
  bool exact = false;
  bool sampled = false;
  std::string format = "json";
  std::string out;
};

void add_analysis_options(CLI::App* cmd, AnalyzeArgs& a) {
  cmd->add_option("file", a.file, "instance JSON file")->required();
  cmd->add_option("--delta-schedule", a.deltas, "decreasing radii, comma separated")
      ->delimiter(',');
  cmd->add_option("--samples", a.samples, "samples per radius")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", a.seed, "random seed");
  cmd->add_option("--norm", a.norm, "override the instance norm")
      ->check(CLI::IsMember({"linf", "l1"}));
  auto* ex = cmd->add_flag("--exact", a.exact, "exact polyhedral paths (default)");
  auto* sa = cmd->add_flag("--sampled", a.sampled, "sampling only");
  ex->excludes(sa);
}

AnalysisConfig config_from(const AnalyzeArgs& a) {
  AnalysisConfig cfg;
  if (!a.deltas.empty()) cfg.delta_schedule = a.deltas;
  cfg.n_samples = a.samples;
  cfg.seed = a.seed;
  cfg.mode = a.sampled ? Mode::kSampled : Mode::kExact;
  if (!a.norm.empty()) cfg.norm = PolyNorm::parse(a.norm);
  return cfg;
}

int run_analyze(const AnalyzeArgs& a) {
  const ConstraintSystem sys = load_instance(a.file);
  const Analysis res = analyze(sys, config_from(a));
  emit_report({res}, parse_format(a.format), a.out);
  return kExitOk;
}

int run_verify(const AnalyzeArgs& a) {
  const ConstraintSystem sys = load_instance(a.file);
  const Analysis res = analyze(sys, config_from(a));
  const double c = res.modulus.chain_residual;
  const bool ok = c <= kChainThreshold;
  std::cout << sys.name() << " chain_residual " << detail::cell(c)
            << (ok ? " ok" : " violated") << "\n";
  return ok ? kExitOk : kExitChain;
}

struct GenerateArgs {
  int nx = 2;
  int ny = 1;
  int rows = 4;
  std::uint64_t seed = 0;
  std::string out;
};

int run_generate(const GenerateArgs& g) {
  const InstanceFile f = generate(g.nx, g.ny, g.rows, g.seed);
  f.to_system();
  if (g.out.empty() || g.out == "-") {
    std::cout << instance_to_json(f).dump(2) << "\n";
  } else {
    write_instance(f, g.out);
  }
  return kExitOk;
}

struct CatalogArgs {
  std::string id;
  std::vector<double> deltas;
  int samples = 20000;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
};

int run_catalog_cmd(const CatalogArgs& c) {
  const std::vector<double> sched = c.deltas.empty() ? default_catalog_schedule() : c.deltas;
  const CatalogReport r = run_catalog(c.id, sched, c.samples, c.seed);
  const std::string text = parse_format(c.format) == Format::kText
                               ? catalog_to_text(r)
                               : dump17(catalog_to_json(r)) + "\n";
  emit_text(text, c.out);
  return kExitOk;
}

struct LemmaArgs {
  std::string file;
  double gamma = 0.99;
  std::string format = "json";
};

int run_lemma(const LemmaArgs& l) {
  const auto j = subreg::detail::parse_text(subreg::detail::read_file(l.file), l.file);
  if (!j.is_object()) fail(ErrorCode::kParse, l.file + ": not a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    fail(ErrorCode::kParse, l.file + ": dim must be an integer");
  }
  const auto dim = j["dim"].get<Eigen::Index>();
  if (dim < 1) fail(ErrorCode::kInvalidInstance, "dim must be positive");
  const Polyhedron omega(subreg::detail::json_mat(j, "omega_ineq", dim),
                         subreg::detail::json_vec(j, "omega_rhs"),
                         subreg::detail::json_mat(j, "omega_eq", dim),
                         subreg::detail::json_vec(j, "omega_eq_rhs"));
  const Vec x = subreg::detail::json_vec(j, "x");
  require_dim(x.size(), dim, "x");
  const PolyNorm nm = PolyNorm::parse(j.value("norm", std::string("linf")));
  const Lemma21Witness w = lemma21_witness(omega, x, l.gamma, nm);
  if (parse_format(l.format) == Format::kText) {
    std::cout << "z " << w.z.transpose() << "\nlhs " << detail::cell(w.lhs) << "\nrhs "
              << detail::cell(w.rhs) << "\nmargin " << detail::cell(w.margin()) << "\n";
  } else {
    ojson o;
    o["gamma"] = l.gamma;
    o["z"] = encode_array(std::vector<double>(w.z.data(), w.z.data() + w.z.size()));
    o["lhs"] = w.lhs;
    o["rhs"] = w.rhs;
    o["margin"] = w.margin();
    std::cout << dump17(o) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric subregularity moduli of polyhedral constraint systems"};
  app.set_version_flag("--version", SUBREG_VERSION);
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "compute all moduli and the chain residual");
  add_analysis_options(analyze_cmd, analyze_args);
  analyze_cmd->add_option("--format", analyze_args.format)->check(CLI::IsMember({"json", "text"}));
  analyze_cmd->add_option("--out", analyze_args.out, "output path (default stdout)");

  AnalyzeArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify-chain", "exit 0 iff chain_residual <= 0.05");
  add_analysis_options(verify_cmd, verify_args);

  GenerateArgs gen_args;
  auto* gen_cmd = app.add_subcommand("generate", "write a random instance");
  gen_cmd->add_option("--nx", gen_args.nx)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--ny", gen_args.ny)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--rows", gen_args.rows)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen_args.seed);
  gen_cmd->add_option("--out", gen_args.out, "output path (default stdout)");

  CatalogArgs cat_args;
  auto* cat_cmd = app.add_subcommand("catalog", "sampled moduli of a closed-form entry");
  cat_cmd->add_option("id", cat_args.id, "one of: parabola, halfline, vee, tilted_parabola")
      ->required();
  cat_cmd->add_option("--delta", cat_args.deltas, "decreasing radii, comma separated")
      ->delimiter(',');
  cat_cmd->add_option("--samples", cat_args.samples)->check(CLI::PositiveNumber);
  cat_cmd->add_option("--seed", cat_args.seed);
  cat_cmd->add_option("--format", cat_args.format)->check(CLI::IsMember({"json", "text"}));
  cat_cmd->add_option("--out", cat_args.out);

  LemmaArgs lemma_args;
  auto* lemma_cmd = app.add_subcommand("lemma21", "tangent-cone witness z for a point outside omega");
  lemma_cmd->add_option("file", lemma_args.file, "JSON with dim, omega_*, x, norm")->required();
  lemma_cmd->add_option("--gamma", lemma_args.gamma)->required();
  lemma_cmd->add_option("--format", lemma_args.format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze_args);
    if (*verify_cmd) return run_verify(verify_args);
    if (*gen_cmd) return run_generate(gen_args);
    if (*cat_cmd) return run_catalog_cmd(cat_args);
    if (*lemma_cmd) return run_lemma(lemma_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitInvalid;
}
