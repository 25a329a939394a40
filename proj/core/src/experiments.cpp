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

#include "qpriv/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "qpriv/applications.hpp"
#include "qpriv/contraction.hpp"
#include "qpriv/error.hpp"
#include "qpriv/hypothesis.hpp"
#include "qpriv/parallel.hpp"
#include "qpriv/random.hpp"

namespace qpriv {
namespace {

const double kLn3 = std::log(3.0);

const std::map<std::string, double>& DefaultTolerances() {
  static const std::map<std::string, double> kDefaults = {
      {"scan", 1e-6}, {"cert", kTolCert}, {"denom", tol::kDenominator}};
  return kDefaults;
}

std::string FormatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string CsvCell(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(double v) const { return FormatDouble(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::json JsonCell(const Cell& c) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(const std::string& s) const { return s; }
    nlohmann::json operator()(double v) const {
      if (!std::isfinite(v)) return FormatDouble(v);
      return v;
    }
    nlohmann::json operator()(long long v) const { return v; }
    nlohmann::json operator()(bool v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

Cell OptionalCell(const std::optional<double>& v) {
  return v ? Cell(*v) : Cell(std::monostate{});
}

std::vector<double> GammaGrid(double epsilon) {
  std::vector<double> g;
  for (int i = 0; i <= 10; ++i) g.push_back(std::exp(epsilon * (-1.0 + 0.2 * i)));
  g.front() = std::exp(-epsilon);
  g.back() = std::exp(epsilon);
  return g;
}

double ExtremalTraceRatio(const PrivacyParams& params) {
  Rng rng(0);
  const ExtremalInstance e = MakeExtremalInstance(params, 2, rng);
  return TraceDistance(Apply(e.channel, e.rho), Apply(e.channel, e.sigma)) /
         TraceDistance(e.rho, e.sigma);
}

}  // namespace

double RunConfig::Tolerance(const std::string& key) const {
  if (auto it = tolerances.find(key); it != tolerances.end()) return it->second;
  return DefaultTolerances().at(key);
}

void RunConfig::Validate() const {
  if (trials < 1) throw Error(ErrorCode::kInvalidParams, "trials must be >= 1");
  if (format != "csv" && format != "json") {
    throw Error(ErrorCode::kInvalidParams, "format must be csv or json");
  }
  for (const auto& [key, value] : tolerances) {
    if (!DefaultTolerances().count(key)) {
      throw Error(ErrorCode::kInvalidParams, "unknown tolerance '" + key + "'");
    }
    if (!std::isfinite(value)) throw Error(ErrorCode::kInvalidParams, "tolerance not finite");
  }
}

RunConfig ParseRunConfig(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kParseError, "run config must be an object");
  RunConfig c;
  try {
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("trials")) c.trials = j["trials"].get<int>();
    if (j.contains("output_path")) c.output_path = j["output_path"].get<std::string>();
    if (j.contains("format")) c.format = j["format"].get<std::string>();
    if (j.contains("tolerances")) {
      for (const auto& [k, v] : j["tolerances"].items()) c.tolerances[k] = v.get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  c.Validate();
  return c;
}

SuiteResult RunContractionSuite(const RunConfig& config) {
  config.Validate();
  Table t{"contraction",
          {"divergence", "epsilon", "delta", "gamma", "theory_bound", "empirical_sup",
           "extremal_ratio", "witness_source", "trials", "valid_pairs", "violation"},
          {}};
  SuiteResult result;
  std::uint64_t scan_index = 0;
  auto run = [&](DivergenceId id, PrivacyParams params, std::optional<double> gamma, int trials,
                 std::optional<double> extremal) {
    ScanConfig sc;
    sc.divergence = id;
    sc.params = params;
    sc.gamma = gamma.value_or(1.0);
    sc.trials = std::max(1, trials);
    sc.seed = DeriveSeed(config.seed, scan_index++);
    sc.tol_scan = config.Tolerance("scan");
    sc.tol_denom = config.Tolerance("denom");
    const ContractionReport r = Scan(sc);
    if (r.violation) ++result.violations;
    t.rows.push_back({ToString(id), params.epsilon, params.delta, OptionalCell(r.gamma),
                      r.theory_bound, r.empirical_sup, OptionalCell(extremal),
                      ToString(r.witness_source), static_cast<long long>(r.trials),
                      static_cast<long long>(r.valid_pairs), r.violation});
  };

  for (double eps : {0.25, 1.0, kLn3, 2.0}) {
    run(DivergenceId::kTrace, {eps, 0.0}, std::nullopt, config.trials,
        ExtremalTraceRatio({eps, 0.0}));
  }
  for (double eps : {0.5, 1.0, 2.0}) {
    for (double gamma : GammaGrid(eps)) {
      run(DivergenceId::kHockey, {eps, 0.0}, gamma, config.trials, std::nullopt);
    }
  }
  for (double eps : {0.5, 1.0, kLn3}) {
    for (double delta : {0.0, 0.1, 0.3}) {
      run(DivergenceId::kTrace, {eps, delta}, std::nullopt, config.trials,
          ExtremalTraceRatio({eps, delta}));
    }
  }
  for (double eps : {0.5, 1.0, 2.0}) {
    run(DivergenceId::kBures, {eps, 0.0}, std::nullopt, config.trials / 2, std::nullopt);
    run(DivergenceId::kRelativeEntropy, {eps, 0.0}, std::nullopt, config.trials / 2,
        std::nullopt);
  }
  run(DivergenceId::kFDivergence, {kLn3, 0.0}, std::nullopt, std::min(config.trials, 200),
      std::nullopt);
  result.tables.push_back(std::move(t));
  return result;
}

SuiteResult RunSampleComplexitySuite(const RunConfig& config) {
  config.Validate();
  Table t{"sample_complexity",
          {"epsilon", "delta", "alpha", "p", "T", "dB2", "sc_exact", "sc_lower", "sc_upper",
           "method", "seed"},
          {}};
  SuiteResult result;
  const double alpha = 0.1;
  const double prior = 0.5;

  auto add_row = [&](double eps, const HypothesisInstance& input, const SampleComplexityResult& exact,
                     double lower, double upper, std::uint64_t seed) {
    const bool found = exact.exact.has_value();
    if (found && (static_cast<double>(*exact.exact) < lower - 1e-9 ||
                  static_cast<double>(*exact.exact) > upper + 1e-9)) {
      ++result.violations;
    }
    t.rows.push_back({eps, 0.0, alpha, prior, TraceDistance(input.rho, input.sigma),
                      BuresSquared(input.rho, input.sigma),
                      found ? Cell(static_cast<long long>(*exact.exact)) : Cell(std::monostate{}),
                      lower, upper, ToString(exact.method), static_cast<long long>(seed)});
  };

  const DensityMatrix zero = DensityMatrix::FromPure(PureState::Basis(2, 0));
  const DensityMatrix one = DensityMatrix::FromPure(PureState::Basis(2, 1));
  for (double eps : {0.25, 0.5, 1.0, kLn3, 2.0}) {
    const HypothesisInstance input{zero, one, prior, alpha};
    const KrausChannel mech = BuildQldpMechanism(zero.matrix(), eps);
    const SampleComplexityResult exact = ExactSampleComplexity(PushForward(input, mech));
    const SampleComplexityResult bounds = OrthogonalScBounds(eps, prior, alpha);
    add_row(eps, input, exact, bounds.lower, bounds.upper, config.seed);
  }

  const int instances = std::min(config.trials, 50);
  const std::vector<double> eps_grid = {0.5, 1.0, kLn3};
  struct Row {
    double eps;
    std::optional<HypothesisInstance> input;
    SampleComplexityResult exact;
    SampleComplexityResult bounds;
    std::uint64_t seed;
  };
  std::vector<Row> rows(static_cast<std::size_t>(instances));
  ParallelFor(rows.size(), [&](std::size_t i) {
    Row& row = rows[i];
    row.seed = DeriveSeed(config.seed, i);
    row.eps = eps_grid[i % eps_grid.size()];
    Rng rng(row.seed);
    HypothesisInstance input{RandomDensityMatrix(2, 2, rng), RandomDensityMatrix(2, 2, rng),
                             prior, alpha};
    const Matrix effect = PositiveEigenprojector(input.rho.matrix() - input.sigma.matrix());
    const KrausChannel mech = BuildQldpMechanism(effect, row.eps);
    row.exact = ExactSampleComplexity(PushForward(input, mech));
    row.bounds = PrivateScBounds(input, row.eps);
    row.input = std::move(input);
  });
  for (const Row& row : rows) {
    add_row(row.eps, *row.input, row.exact, row.bounds.lower, row.bounds.upper, row.seed);
  }
  result.tables.push_back(std::move(t));
  return result;
}

SuiteResult RunApplicationsSuite(const RunConfig& config) {
  config.Validate();
  Table t{"applications",
          {"check", "epsilon", "delta", "samples", "value", "bound", "margin", "holds"},
          {}};
  SuiteResult result;
  std::uint64_t index = 0;

  for (const PrivacyParams params : {PrivacyParams{kLn3, 0.0}, PrivacyParams{1.0, 0.1},
                                     PrivacyParams{0.5, 0.3}}) {
    Rng rng(DeriveSeed(config.seed, index++));
    const KrausChannel channel = BuildEpsDeltaMechanism(RandomEffect(2, rng), params);
    const Povm povm(2, {Projector(Vector::Unit(2, 0)), Projector(Vector::Unit(2, 1))});
    FairnessOptions options;
    options.seed = DeriveSeed(config.seed, index++);
    const FairnessCertificate c = CertifyFairness(channel, povm, params, 0.4, options);
    if (!c.holds) ++result.violations;
    t.rows.push_back({std::string("fairness"), params.epsilon, params.delta,
                      static_cast<long long>(c.pairs), c.bound - c.margin, c.bound, c.margin,
                      c.holds});
  }

  const int ensembles = std::min(config.trials, 100);
  for (double eps : {0.5, 1.0, 2.0}) {
    const std::uint64_t base = DeriveSeed(config.seed, index++);
    std::vector<HolevoStability> checks(static_cast<std::size_t>(ensembles));
    ParallelFor(checks.size(), [&](std::size_t i) {
      Rng rng(DeriveSeed(base, i));
      Ensemble ensemble;
      std::uniform_real_distribution<double> unit(0.05, 1.0);
      double total = 0.0;
      for (int x = 0; x < 4; ++x) {
        ensemble.priors.push_back(unit(rng));
        total += ensemble.priors.back();
        std::uniform_int_distribution<int> rank(1, 2);
        ensemble.states.push_back(RandomDensityMatrix(2, rank(rng), rng));
      }
      for (double& p : ensemble.priors) p /= total;
      const double drift = 1.0 - std::accumulate(ensemble.priors.begin(), ensemble.priors.end(), 0.0);
      ensemble.priors.back() += drift;
      const KrausChannel channel = RandomPrivateChannel({eps, 0.0}, 2, 2, rng);
      checks[i] = HolevoStabilityCheck(ensemble, channel, eps);
    });
    double worst = 0.0;
    bool holds = true;
    for (const HolevoStability& c : checks) {
      worst = std::max(worst, c.value);
      holds = holds && c.holds;
    }
    if (!holds) ++result.violations;
    const double bound = HolevoBound(eps);
    t.rows.push_back({std::string("holevo"), eps, 0.0, static_cast<long long>(ensembles), worst,
                      bound, bound - worst, holds});
  }

  for (double eps : {0.1, 0.25, 0.5, 1.0, 2.0, 4.0}) {
    const double bound = HolevoBound(eps);
    const double previous = std::min(eps, eps * eps / 2.0);
    const bool holds = bound <= previous + 1e-15;
    if (!holds) ++result.violations;
    t.rows.push_back({std::string("holevo_vs_min_bound"), eps, 0.0, 1LL, bound, previous,
                      previous - bound, holds});
  }
  result.tables.push_back(std::move(t));
  return result;
}

SuiteResult RunSuite(const std::string& suite, const RunConfig& config) {
  if (suite == "contraction") return RunContractionSuite(config);
  if (suite == "sample_complexity") return RunSampleComplexitySuite(config);
  if (suite == "applications") return RunApplicationsSuite(config);
  if (suite == "all") {
    SuiteResult all;
    for (const char* name : {"contraction", "sample_complexity", "applications"}) {
      SuiteResult r = RunSuite(name, config);
      all.violations += r.violations;
      for (Table& t : r.tables) all.tables.push_back(std::move(t));
    }
    return all;
  }
  throw Error(ErrorCode::kInvalidParams, "unknown suite '" + suite + "'");
}

std::string ToCsv(const Table& table) {
  std::ostringstream out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << CsvCell(row[i]);
    out << "\n";
  }
  return out.str();
}

std::string ToJson(const Table& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      obj[table.columns[i]] = JsonCell(row[i]);
    }
    rows.push_back(std::move(obj));
  }
  nlohmann::json doc;
  doc["table"] = table.name;
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace qpriv
