// Copyright 2026 The qpriv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qpriv command-line front end.
//
// Exit codes: 0 success or certified, 1 negative finding, 2 I/O or parse
// failure, 3 validation failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpriv/divergences.hpp"
#include "qpriv/error.hpp"
#include "qpriv/experiments.hpp"
#include "qpriv/json_io.hpp"
#include "qpriv/privacy.hpp"

namespace {

using namespace qpriv;

constexpr int kExitNegative = 1;
constexpr int kExitIo = 2;
constexpr int kExitValidation = 3;

std::string Number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

int Divergence(const std::string& kind, const std::string& path_a, const std::string& path_b,
               std::optional<double> gamma) {
  const DensityMatrix a = ReadDensityMatrix(path_a);
  const DensityMatrix b = ReadDensityMatrix(path_b);
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "states have dimensions " +
                                                   std::to_string(a.dim()) + " and " +
                                                   std::to_string(b.dim()));
  }
  const bool needs_gamma = kind == "hockey" || kind == "hockey-ext";
  if (needs_gamma && !gamma) throw Error(ErrorCode::kInvalidGamma, kind + " needs --gamma");
  double value = 0.0;
  if (kind == "trace") {
    value = TraceDistance(a, b);
  } else if (kind == "fidelity") {
    value = Fidelity(a, b);
  } else if (kind == "bures") {
    value = BuresSquared(a, b);
  } else if (kind == "hockey") {
    value = HockeyStick(a, b, *gamma);
  } else if (kind == "hockey-ext") {
    value = HockeyStickExtended(a, b, *gamma);
  } else if (kind == "relent") {
    value = RelativeEntropy(a, b);
  } else if (kind == "dmax") {
    value = MaxRelativeEntropy(a, b);
  } else if (kind == "kl-integral") {
    value = FDivergence(a, b, KlFunction());
  }
  std::cout << Number(value) << "\n";
  return 0;
}

int CertifyCommand(const std::string& path, const PrivacyParams& params,
                   const SearchBudget& budget) {
  const KrausChannel channel = ReadChannel(path);
  params.Validate();
  const CertificationResult r = Certify(channel, params, budget);
  std::cout << "certified: " << (r.certified ? "true" : "false") << "\n"
            << "epsilon: " << Number(params.epsilon) << "\n"
            << "delta: " << Number(params.delta) << "\n"
            << "worst_value: " << Number(r.worst_value) << "\n"
            << "iterations: " << r.iterations << "\n";
  return r.certified ? 0 : kExitNegative;
}

int EstimateCommand(const std::string& path, const SearchBudget& budget) {
  const KrausChannel channel = ReadChannel(path);
  std::cout << Number(EstimateEpsilon(channel, budget)) << "\n";
  return 0;
}

int MechanismCommand(const std::string& effect_path, const PrivacyParams& params,
                     const std::string& out) {
  const Matrix effect = ReadMatrix(effect_path);
  params.Validate();
  const std::string text = ChannelToJson(BuildEpsDeltaMechanism(effect, params));
  if (out.empty() || out == "-") {
    std::cout << text << "\n";
  } else {
    WriteTextFile(out, text + "\n");
  }
  return 0;
}

int ReproduceCommand(const std::string& suite, const std::string& config_path,
                     std::optional<std::uint64_t> seed, std::optional<int> trials,
                     const std::vector<std::string>& tolerances, std::optional<std::string> out,
                     std::optional<std::string> format) {
  RunConfig config = config_path.empty() ? RunConfig{} : ParseRunConfig(ReadTextFile(config_path));
  if (seed) config.seed = *seed;
  if (trials) config.trials = *trials;
  if (out) config.output_path = *out;
  if (format) config.format = *format;
  for (const std::string& kv : tolerances) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::kInvalidParams, "--tol expects key=value, got '" + kv + "'");
    }
    try {
      config.tolerances[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidParams, "bad tolerance value in '" + kv + "'");
    }
  }
  config.Validate();
  const SuiteResult result = RunSuite(suite, config);

  std::error_code ec;
  std::filesystem::create_directories(config.output_path, ec);
  if (ec) throw Error(ErrorCode::kParseError, "cannot create " + config.output_path);
  for (const Table& table : result.tables) {
    const std::filesystem::path file =
        std::filesystem::path(config.output_path) / (table.name + "." + config.format);
    WriteTextFile(file.string(), config.format == "json" ? ToJson(table) : ToCsv(table));
    std::cout << "wrote " << file.string() << " (" << table.rows.size() << " rows)\n";
  }
  std::cout << "violations: " << result.violations << "\n";
  return result.violations == 0 ? 0 : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum local differential privacy toolkit"};
  app.require_subcommand(1);

  std::string kind, path_a, path_b;
  std::optional<double> gamma;
  auto* divergence = app.add_subcommand("divergence", "Evaluate a divergence between two states");
  divergence->add_option("kind", kind, "Divergence kind")
      ->required()
      ->check(CLI::IsMember(
          {"trace", "fidelity", "bures", "hockey", "hockey-ext", "relent", "dmax", "kl-integral"}));
  divergence->add_option("a", path_a, "First state (JSON)")->required();
  divergence->add_option("b", path_b, "Second state (JSON)")->required();
  divergence->add_option("--gamma", gamma, "Hockey-stick parameter");

  std::string channel_path;
  PrivacyParams params;
  SearchBudget budget;
  auto* certify = app.add_subcommand("certify", "Search for a privacy violation of a channel");
  certify->add_option("channel", channel_path, "Channel (JSON)")->required();
  certify->add_option("--epsilon", params.epsilon, "Privacy parameter epsilon")->required();
  certify->add_option("--delta", params.delta, "Privacy parameter delta");
  certify->add_option("--restarts", budget.restarts, "Search restarts")
      ->check(CLI::PositiveNumber);
  certify->add_option("--polish", budget.polish_steps, "Polish steps per restart")
      ->check(CLI::NonNegativeNumber);
  certify->add_option("--seed", budget.seed, "Search seed");

  auto* estimate = app.add_subcommand("estimate-epsilon", "Lower-bound the epsilon of a channel");
  estimate->add_option("channel", channel_path, "Channel (JSON)")->required();
  estimate->add_option("--restarts", budget.restarts, "Search restarts")
      ->check(CLI::PositiveNumber);
  estimate->add_option("--polish", budget.polish_steps, "Polish steps per restart")
      ->check(CLI::NonNegativeNumber);
  estimate->add_option("--seed", budget.seed, "Search seed");

  std::string effect_path, mech_out;
  PrivacyParams mech_params;
  auto* mechanism = app.add_subcommand("mechanism", "Build the depolarised readout mechanism");
  mechanism->add_option("--effect", effect_path, "Effect operator (JSON)")->required();
  mechanism->add_option("--epsilon", mech_params.epsilon, "Privacy parameter epsilon")
      ->required();
  mechanism->add_option("--delta", mech_params.delta, "Privacy parameter delta");
  mechanism->add_option("--out", mech_out, "Output file (default stdout)");

  std::string suite, config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::vector<std::string> tolerances;
  std::optional<std::string> out, format;
  auto* reproduce = app.add_subcommand("reproduce", "Run an experiment suite");
  reproduce->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"contraction", "sample_complexity", "applications", "all"}));
  reproduce->add_option("--seed", seed, "Experiment seed");
  reproduce->add_option("--trials", trials, "Trials per scan");
  reproduce->add_option("--tol", tolerances, "Tolerance override key=value (repeatable)")
      ->take_all();
  reproduce->add_option("--out", out, "Output directory");
  reproduce->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  reproduce->add_option("--config", config_path, "RunConfig JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitIo;
  }

  try {
    if (*divergence) return Divergence(kind, path_a, path_b, gamma);
    if (*certify) return CertifyCommand(channel_path, params, budget);
    if (*estimate) return EstimateCommand(channel_path, budget);
    if (*mechanism) return MechanismCommand(effect_path, mech_params, mech_out);
    if (*reproduce) {
      return ReproduceCommand(suite, config_path, seed, trials, tolerances, out, format);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kParseError ? kExitIo : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}
