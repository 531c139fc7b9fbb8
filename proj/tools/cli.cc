// Copyright 2026 The transparency-game Authors
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

#include "cli.h"

#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report.h"
#include "sweep.h"
#include "tgame/analysis.h"
#include "tgame/errors.h"
#include "tgame/model.h"
#include "tgame/oracle.h"
#include "tgame/sampling.h"
#include "tgame/solver.h"

namespace tgame::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AssumptionFailure {
  std::vector<AssumptionViolation> violations;
};

struct NonConvergence {};

struct ParamFlags {
  std::string config;
  std::optional<double> theta, lambda, alpha, beta, reward, cost_h, cost_l;
  std::string selection = "published";
};

void AddParamFlags(CLI::App* cmd, ParamFlags& f) {
  cmd->add_option("--config", f.config,
                  "JSON file with any of theta, lambda, alpha, beta, reward, "
                  "cost_h, cost_l; flags override it");
  cmd->add_option("--theta", f.theta, "share of H-type agents");
  cmd->add_option("--lambda", f.lambda, "correlational feature accuracy");
  cmd->add_option("--alpha", f.alpha, "H-type productivity premium");
  cmd->add_option("--beta", f.beta, "education productivity premium");
  cmd->add_option("--reward", f.reward, "wage R");
  cmd->add_option("--cost-h", f.cost_h, "H-type education cost");
  cmd->add_option("--cost-l", f.cost_l, "L-type education cost");
  cmd->add_option("--selection", f.selection,
                  "opaque case selection: published | nash-consistent")
      ->capture_default_str();
}

SelectionRule Rule(const ParamFlags& f) {
  auto rule = ParseSelectionRule(f.selection);
  if (!rule) throw UsageError("unknown --selection '" + f.selection + "'");
  return *rule;
}

Json ReadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  Json cfg;
  try {
    cfg = Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError("config file '" + path + "' is not valid JSON: " +
                     e.what());
  }
  if (!cfg.is_object()) {
    throw UsageError("config file must hold a flat JSON object");
  }
  static const char* kKeys[] = {"theta", "lambda", "alpha", "beta",
                                "reward", "cost_h", "cost_l"};
  for (const auto& [key, value] : cfg.items()) {
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      throw UsageError("unknown config key '" + key + "'");
    }
    if (!value.is_number()) {
      throw UsageError("config key '" + key + "' must be a number");
    }
  }
  return cfg;
}

// Merges flags over the config file. Parameters not in `required` default to
// 0 (and C_L to R) when absent.
RawParams Resolve(const ParamFlags& f, const std::vector<std::string>& required) {
  Json cfg = f.config.empty() ? Json::object() : ReadConfig(f.config);
  std::vector<std::string> missing;
  auto pick = [&](const char* key, const std::optional<double>& flag,
                  double fallback) {
    if (flag) return *flag;
    if (cfg.contains(key)) return cfg[key].get<double>();
    if (std::find(required.begin(), required.end(), key) != required.end()) {
      missing.push_back(key);
    }
    return fallback;
  };
  RawParams raw;
  raw.theta = pick("theta", f.theta, 0);
  raw.lambda = pick("lambda", f.lambda, 0);
  raw.alpha = pick("alpha", f.alpha, 0);
  raw.beta = pick("beta", f.beta, 0);
  raw.reward = pick("reward", f.reward, 0);
  raw.cost_h = pick("cost_h", f.cost_h, 0);
  raw.cost_l = pick("cost_l", f.cost_l, raw.reward);
  if (!missing.empty()) {
    std::string list;
    for (const std::string& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw UsageError("missing parameter(s): " + list);
  }
  return raw;
}

const std::vector<std::string> kAllParams = {
    "theta", "lambda", "alpha", "beta", "reward", "cost_h", "cost_l"};
const std::vector<std::string> kBaseParams = {"theta", "lambda", "alpha",
                                              "beta", "reward"};

ModelParams ValidateOrFail(const RawParams& raw) {
  ValidationResult v = ModelParams::Validate(raw);
  if (!v.ok()) throw AssumptionFailure{v.violations()};
  return v.value();
}

// Output stream for `path`, or `fallback` when the path is empty or "-".
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw UsageError("cannot write '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }
  void Close() {
    stream_->flush();
    if (!*stream_) throw UsageError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

// ----- analyze ---------------------------------------------------------------

struct AnalyzeFlags {
  ParamFlags params;
  std::string out;
};

void RunAnalyze(const AnalyzeFlags& f, std::ostream& out) {
  const ModelParams params = ValidateOrFail(Resolve(f.params, kAllParams));
  const AnalysisReport report = Analyze(params, Rule(f.params));
  Output o(f.out, out);
  o.get() << ToJson(report).dump(2) << '\n';
  o.Close();
}

// ----- sweep -----------------------------------------------------------------

struct SweepFlags {
  ParamFlags params;
  std::optional<double> c_min, c_max;
  int steps = 101;
  std::string format = "csv";
  bool verify = false;
  int threads = 0;
  std::string out;
};

void RunSweepCommand(const SweepFlags& f, std::ostream& out) {
  RawParams base = Resolve(f.params, kBaseParams);
  base.cost_h = 0;
  base.cost_l = base.reward;
  ValidateOrFail(base);
  if (f.format != "csv" && f.format != "json") {
    throw UsageError("--format must be csv or json");
  }
  SweepSpec spec{.base = base,
                 .c_min = f.c_min.value_or(0),
                 .c_max = f.c_max.value_or(1.5 * base.reward),
                 .steps = f.steps,
                 .verify = f.verify,
                 .rule = Rule(f.params),
                 .threads = f.threads};
  std::vector<SweepRow> rows;
  try {
    rows = RunSweep(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Output o(f.out, out);
  if (f.format == "csv") {
    WriteSweepCsv(rows, f.verify, o.get());
  } else {
    WriteSweepJson(rows, f.verify, o.get());
  }
  o.Close();
}

// ----- thresholds ------------------------------------------------------------

struct ThresholdFlags {
  ParamFlags params;
  std::string vary = "alpha";
  std::optional<double> from, to;
  int steps = 51;
  std::string out;
};

bool ThresholdFeasible(double theta, double lambda, double alpha,
                       double reward) {
  if (!(theta > 0 && theta < 1 && lambda > 0.5 && lambda <= 1 && reward > 0)) {
    return false;
  }
  const AssumptionBounds b = ComputeBounds(theta, lambda, alpha, reward);
  return alpha > reward && alpha > b.alpha_lower && alpha < b.alpha_upper;
}

void RunThresholds(const ThresholdFlags& f, std::ostream& out) {
  std::vector<std::string> required = {"theta", "lambda", "alpha", "reward"};
  std::erase(required, f.vary);
  if (f.vary != "alpha" && f.vary != "lambda" && f.vary != "theta") {
    throw UsageError("--vary must be alpha, lambda or theta");
  }
  if (f.steps < 2) throw UsageError("--steps must be >= 2");
  const RawParams raw = Resolve(f.params, required);

  double lo, hi;
  if (f.vary == "alpha") {
    const AssumptionBounds b =
        ComputeBounds(raw.theta, raw.lambda, 0, raw.reward);
    lo = b.alpha_lower;
    hi = b.alpha_upper;
  } else if (f.vary == "lambda") {
    lo = 0.5;
    hi = 1;
  } else {
    lo = 0;
    hi = 1;
  }
  // Defaults stay just inside the open interval.
  const double pad = std::isfinite(hi - lo) ? (hi - lo) * 1e-6 : 0;
  const double from = f.from.value_or(lo + pad);
  const double to = f.to.value_or(hi - pad);
  if (!std::isfinite(from) || !std::isfinite(to) || !(to > from)) {
    throw UsageError("threshold range needs finite --from < --to");
  }

  std::ostringstream csv;
  csv << f.vary << ",feasible,beta1,beta2,beta3,beta_lower,beta_upper\n";
  int feasible_rows = 0;
  for (int i = 0; i < f.steps; ++i) {
    const double x =
        i == f.steps - 1 ? to : from + i * (to - from) / (f.steps - 1);
    double theta = raw.theta, lambda = raw.lambda, alpha = raw.alpha;
    (f.vary == "alpha" ? alpha : f.vary == "lambda" ? lambda : theta) = x;
    csv << FormatDouble(x) << ',';
    if (!ThresholdFeasible(theta, lambda, alpha, raw.reward)) {
      csv << "false,,,,,\n";
      continue;
    }
    ++feasible_rows;
    const BetaThresholds t =
        ComputeBetaThresholds(theta, lambda, alpha, raw.reward);
    const AssumptionBounds b = ComputeBounds(theta, lambda, alpha, raw.reward);
    csv << "true," << FormatDouble(t.beta1) << ',' << FormatDouble(t.beta2)
        << ',' << FormatDouble(t.beta3) << ',' << FormatDouble(b.beta_lower)
        << ',' << FormatDouble(b.beta_upper) << '\n';
  }
  if (feasible_rows == 0) {
    throw AssumptionFailure{{AssumptionViolation{
        .id = AssumptionId::kEmptyInterval,
        .detail = "no " + f.vary + " in the requested range satisfies the "
                  "assumptions",
        .value = from,
        .bound = to}}};
  }
  Output o(f.out, out);
  o.get() << csv.str();
  o.Close();
}

// ----- simulate --------------------------------------------------------------

struct SimulateFlags {
  ParamFlags params;
  std::string scenario = "opaque";
  double damping = 1.0;
  int max_rounds = 1000;
  double start_h = 0;
  double start_l = 0;
  std::string trace_out;
  bool strict = false;
};

void RunSimulate(const SimulateFlags& f, std::ostream& out, std::ostream& err) {
  const ModelParams params = ValidateOrFail(Resolve(f.params, kAllParams));
  const auto scenario = ParseScenario(f.scenario);
  if (!scenario) throw UsageError("--scenario must be opaque or transparent");
  if (!(f.damping > 0 && f.damping <= 1)) {
    throw UsageError("--damping must lie in (0, 1]");
  }
  if (f.max_rounds < 0) throw UsageError("--max-rounds must be >= 0");
  if (!(f.start_h >= 0 && f.start_h <= 1 && f.start_l >= 0 && f.start_l <= 1)) {
    throw UsageError("--start-h and --start-l must lie in [0, 1]");
  }

  const DynamicsTrace trace = BestResponseDynamics(
      params, *scenario,
      DynamicsOptions{.damping = f.damping,
                      .max_rounds = f.max_rounds,
                      .start = StrategyProfile{*scenario, f.start_h,
                                               f.start_l}});
  const EquilibriumOutcome analytic =
      *scenario == Scenario::kOpaque ? SolveOpaque(params, Rule(f.params))
                                     : SolveTransparent(params);

  Output o(f.trace_out, out);
  std::ostream& csv = o.get();
  csv << "round,improve_h,improve_l";
  for (FeatureState s : StatesOf(*scenario)) csv << ",p_" << ToString(s);
  csv << ",firm_payoff,change\n";
  for (const DynamicsRound& r : trace.rounds) {
    csv << r.round << ',' << FormatDouble(r.profile.improve_h) << ','
        << FormatDouble(r.profile.improve_l);
    for (FeatureState s : StatesOf(*scenario)) {
      csv << ',' << FormatDouble(r.policy[s]);
    }
    csv << ',' << FormatDouble(r.payoffs.firm) << ','
        << FormatDouble(r.change) << '\n';
  }
  o.Close();

  auto distance = [&](const StrategyProfile& p) {
    return std::max(std::abs(p.improve_h - analytic.profile.improve_h),
                    std::abs(p.improve_l - analytic.profile.improve_l));
  };
  const Json summary{
      {"converged", trace.converged},
      {"rounds", int(trace.rounds.size()) - 1},
      {"analytic_case", analytic.id.label()},
      {"limit", Json{{"improve_h", trace.limit.improve_h},
                     {"improve_l", trace.limit.improve_l}}},
      {"distance_to_analytic", distance(trace.limit)},
      {"time_average", Json{{"improve_h", trace.time_average.improve_h},
                            {"improve_l", trace.time_average.improve_l}}},
      {"time_average_distance", distance(trace.time_average)}};
  err << "summary " << summary.dump() << '\n';
  if (f.strict && !trace.converged) throw NonConvergence{};
}

// ----- verify ----------------------------------------------------------------

struct VerifyFlags {
  ParamFlags params;
  int samples = 0;
  std::uint64_t seed = 1;
  std::string out;
};

// Returns true when every check passed.
bool RunVerify(const VerifyFlags& f, std::ostream& out) {
  const SelectionRule rule = Rule(f.params);
  Json result;
  bool all_ok = true;
  if (f.samples > 0) {
    ParamSampler sampler(f.seed);
    std::map<std::string, int> failures;
    double max_agent = 0, max_firm = 0;
    Json first_failure = nullptr;
    for (int i = 0; i < f.samples; ++i) {
      const ModelParams p = sampler.Next();
      for (const EquilibriumOutcome& o :
           {SolveOpaque(p, rule), SolveTransparent(p)}) {
        const VerificationReport v = VerifyEquilibrium(o, p);
        max_agent = std::max(max_agent, v.max_agent_gain);
        max_firm = std::max(max_firm, v.max_firm_gain);
        if (!v.is_nash) {
          ++failures[o.id.label()];
          if (first_failure.is_null()) first_failure = ToJson(p.raw());
        }
      }
    }
    all_ok = failures.empty();
    Json by_case = Json::object();
    for (const auto& [label, n] : failures) by_case[label] = n;
    result = Json{{"samples", f.samples},
                  {"seed", f.seed},
                  {"selection_rule", ToString(rule)},
                  {"nash_ok", all_ok},
                  {"failures", by_case},
                  {"max_agent_gain", max_agent},
                  {"max_firm_gain", max_firm},
                  {"first_failure", first_failure}};
  } else {
    const ModelParams p = ValidateOrFail(Resolve(f.params, kAllParams));
    const EquilibriumOutcome o = SolveOpaque(p, rule);
    const EquilibriumOutcome t = SolveTransparent(p);
    const VerificationReport vo = VerifyEquilibrium(o, p);
    const VerificationReport vt = VerifyEquilibrium(t, p);
    all_ok = vo.is_nash && vt.is_nash;
    result = Json{{"params", ToJson(p.raw())},
                  {"selection_rule", ToString(rule)},
                  {"nash_ok", all_ok},
                  {"opaque", Json{{"case", o.id.label()},
                                  {"verification", ToJson(vo)}}},
                  {"transparent", Json{{"case", t.id.label()},
                                       {"verification", ToJson(vt)}}}};
  }
  Output o(f.out, out);
  o.get() << result.dump(2) << '\n';
  o.Close();
  return all_ok;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Equilibria of the opaque and transparent hiring game", "tgame"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tgame 0.1.0");

  AnalyzeFlags analyze;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "solve, compare and verify one point");
  AddParamFlags(analyze_cmd, analyze.params);
  analyze_cmd->add_option("--out", analyze.out, "report path (default stdout)");

  SweepFlags sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "grid over (C_H, C_L)");
  AddParamFlags(sweep_cmd, sweep.params);
  sweep_cmd->add_option("--c-min", sweep.c_min, "lower cost bound (default 0)");
  sweep_cmd->add_option("--c-max", sweep.c_max,
                        "upper cost bound (default 1.5 R)");
  sweep_cmd->add_option("--steps", sweep.steps, "grid points per axis")
      ->capture_default_str();
  sweep_cmd->add_option("--format", sweep.format, "csv | json")
      ->capture_default_str();
  sweep_cmd->add_flag("--verify", sweep.verify, "add nash_ok columns");
  sweep_cmd->add_option("--threads", sweep.threads,
                        "worker threads (0 = TRANSPARENCY_GAME_THREADS or "
                        "hardware count)");
  sweep_cmd->add_option("--out", sweep.out, "output path (default stdout)");

  ThresholdFlags thresholds;
  CLI::App* thresholds_cmd = app.add_subcommand(
      "thresholds", "beta thresholds against one parameter");
  AddParamFlags(thresholds_cmd, thresholds.params);
  thresholds_cmd->add_option("--vary", thresholds.vary, "alpha | lambda | theta")
      ->capture_default_str();
  thresholds_cmd->add_option("--from", thresholds.from,
                             "start of the range (default: feasible interval)");
  thresholds_cmd->add_option("--to", thresholds.to, "end of the range");
  thresholds_cmd->add_option("--steps", thresholds.steps, "samples")
      ->capture_default_str();
  thresholds_cmd->add_option("--out", thresholds.out,
                             "output path (default stdout)");

  SimulateFlags simulate;
  CLI::App* simulate_cmd =
      app.add_subcommand("simulate", "best-response dynamics trace");
  AddParamFlags(simulate_cmd, simulate.params);
  simulate_cmd->add_option("--scenario", simulate.scenario,
                           "opaque | transparent")
      ->capture_default_str();
  simulate_cmd->add_option("--damping", simulate.damping, "step in (0, 1]")
      ->capture_default_str();
  simulate_cmd->add_option("--max-rounds", simulate.max_rounds)
      ->capture_default_str();
  simulate_cmd->add_option("--start-h", simulate.start_h,
                           "initial H improve probability")
      ->capture_default_str();
  simulate_cmd->add_option("--start-l", simulate.start_l,
                           "initial L improve probability")
      ->capture_default_str();
  simulate_cmd->add_option("--trace-out", simulate.trace_out,
                           "trace CSV path (default stdout)");
  simulate_cmd->add_flag("--strict", simulate.strict,
                         "exit 4 when the dynamics do not converge");

  VerifyFlags verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "oracle check of one point or a random campaign");
  AddParamFlags(verify_cmd, verify.params);
  verify_cmd->add_option("--samples", verify.samples,
                         "random valid draws; 0 checks the given point")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed)->capture_default_str();
  verify_cmd->add_option("--out", verify.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) RunAnalyze(analyze, out);
    if (*sweep_cmd) RunSweepCommand(sweep, out);
    if (*thresholds_cmd) RunThresholds(thresholds, out);
    if (*simulate_cmd) RunSimulate(simulate, out, err);
    if (*verify_cmd && !RunVerify(verify, out)) {
      err << Json{{"error", "VerificationFailed"},
                  {"detail", "at least one no-deviation check failed"}}
                 .dump()
          << '\n';
      return kExitDefect;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const AssumptionFailure& e) {
    err << ToJson(e.violations).dump() << '\n';
    return kExitAssumption;
  } catch (const DefectError& e) {
    err << Json{{"error", "InternalDefect"},
                {"kind", ToString(e.kind())},
                {"detail", e.what()}}
               .dump()
        << '\n';
    return kExitDefect;
  } catch (const NonConvergence&) {
    err << Json{{"error", "NonConvergence"}}.dump() << '\n';
    return kExitNonConvergence;
  }
  return kExitOk;
}

}  // namespace tgame::cli
