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

// Acceptance suite. Prints one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion passes. With --known-failures=a,b,...
// it is 0 when the failing set is exactly that list, so a criterion that is
// known to be unattainable still prints FAIL without breaking ctest, and any
// change in the failing set (new failure or unexpected pass) is an error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "testing/base.h"
#include "testing/oracles.h"
#include "tgame/analysis.h"
#include "tgame/errors.h"
#include "tgame/model.h"
#include "tgame/oracle.h"
#include "tgame/payoff.h"
#include "tgame/sampling.h"
#include "tgame/solver.h"

namespace tgame::acceptance {
namespace {

using testing::EvaluatePaths;
using testing::FromParams;
using testing::Primitives;

// Pinned tolerances.
constexpr double kNashTolerance = 1e-9;
constexpr double kPayoffTolerance = 1e-9;
constexpr double kTieTolerance = 1e-9;
constexpr double kIdentityTolerance = 1e-9;
constexpr double kCrossingTolerance = 1e-6;
constexpr double kThresholdWindow = 1e-6;
constexpr double kStaticsTolerance = 1e-5;
constexpr double kDynamicsTolerance = 1e-6;
constexpr double kMixtureTolerance = 0.05;
constexpr double kFixtureTolerance = 1e-9;
constexpr double kRuntimeBudgetSeconds = 10.0;

constexpr int kSamples = 1000;
constexpr int kGridDraws = 20;
constexpr int kGridResolution = 500;
constexpr int kAreaResolution = 400;
constexpr int kPureRounds = 50;
constexpr int kMixedRounds = 10000;
constexpr double kMixedDamping = 0.05;

struct Result {
  bool pass;
  std::string detail;
};

std::string Fmt(const char* format, ...) __attribute__((format(printf, 1, 2)));
std::string Fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

void ParallelFor(int n, int threads, const std::function<void(int)>& body) {
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) body(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

std::vector<ModelParams> Samples(std::uint64_t seed, int n) {
  ParamSampler sampler(seed);
  std::vector<ModelParams> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(sampler.Next());
  return out;
}

// ---------------------------------------------------------------------------

int CountOracleFailures(const std::vector<ModelParams>& samples,
                        SelectionRule rule, std::map<std::string, int>* by_case,
                        double* worst_gain) {
  int failures = 0;
  for (const ModelParams& p : samples) {
    for (const EquilibriumOutcome& o :
         {SolveOpaque(p, rule), SolveTransparent(p)}) {
      const VerificationReport v = VerifyEquilibrium(o, p, kNashTolerance);
      const double gain = std::max(v.max_agent_gain, v.max_firm_gain);
      if (worst_gain) *worst_gain = std::max(*worst_gain, gain);
      if (!v.is_nash) {
        ++failures;
        if (by_case) ++(*by_case)[o.id.label()];
      }
    }
  }
  return failures;
}

Result OracleSoundness(const std::vector<ModelParams>& samples) {
  const auto start = std::chrono::steady_clock::now();
  std::map<std::string, int> by_case;
  double worst = 0;
  const int failures = CountOracleFailures(samples, SelectionRule::kPublished,
                                           &by_case, &worst);
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  const int nash_failures = CountOracleFailures(
      samples, SelectionRule::kNashConsistent, nullptr, nullptr);

  std::string cases;
  for (const auto& [label, n] : by_case) cases += Fmt(" %s=%d", label.c_str(), n);
  return {failures == 0 && seconds < kRuntimeBudgetSeconds,
          Fmt("%d/%d points with a rejected outcome (published map;%s), worst "
              "gain %.3g, %.2fs; nash-consistent map: %d rejected",
              failures, int(samples.size()), cases.empty() ? " none" : cases.c_str(),
              worst, seconds, nash_failures)};
}

// ---------------------------------------------------------------------------

double PayoffError(const PayoffTriple& a, const PayoffTriple& b) {
  return std::max({std::abs(a.firm - b.firm), std::abs(a.agents_h - b.agents_h),
                   std::abs(a.agents_l - b.agents_l)});
}

double PathError(const EquilibriumOutcome& o, const ModelParams& params) {
  testing::Policy policy{};
  const auto states = o.policy.states();
  for (std::size_t i = 0; i < states.size(); ++i) policy[i] = o.policy[states[i]];
  const testing::PathPayoffs r =
      EvaluatePaths(FromParams(params), o.id.scenario == Scenario::kOpaque,
                    o.profile.improve_h, o.profile.improve_l, policy);
  return std::max({std::abs(o.payoffs.firm - r.firm),
                   std::abs(o.payoffs.agents_h - r.agents_h),
                   std::abs(o.payoffs.agents_l - r.agents_l)});
}

Result ClosedFormFidelity(const std::vector<ModelParams>& samples) {
  double worst = 0;
  std::map<std::string, int> played, evaluated;
  const auto check = [&](const EquilibriumOutcome& o, const ModelParams& p,
                         double agent_total) {
    worst = std::max(worst, PayoffError(o.payoffs,
                                        EvaluatePayoffs(o.profile, o.policy, p)));
    worst = std::max(worst, PathError(o, p));
    worst = std::max(worst, std::abs(agent_total - o.payoffs.agents_total()));
  };
  for (const ModelParams& p : samples) {
    for (SelectionRule rule :
         {SelectionRule::kPublished, SelectionRule::kNashConsistent}) {
      const EquilibriumOutcome o = SolveOpaque(p, rule);
      check(o, p, ClosedFormAgentTotal(o.id.opaque(), p));
      ++played[o.id.label()];
    }
    const EquilibriumOutcome t = SolveTransparent(p);
    check(t, p, ClosedFormAgentTotal(t.id.transparent(), p));
    ++played[t.id.label()];

    // Every case's formulas, whether or not it is played here.
    for (int c = 1; c <= 5; ++c) {
      try {
        const EquilibriumOutcome o = OpaqueCaseOutcome(OpaqueCase(c), p);
        check(o, p, ClosedFormAgentTotal(OpaqueCase(c), p));
        ++evaluated[o.id.label()];
      } catch (const DefectError&) {
        // Mixing probability outside [0, 1] at this point.
      }
    }
    for (int c = 1; c <= 3; ++c) {
      const EquilibriumOutcome t2 = TransparentCaseOutcome(TransparentCase(c), p);
      check(t2, p, ClosedFormAgentTotal(TransparentCase(c), p));
      ++evaluated[t2.id.label()];
    }
  }
  std::string coverage;
  bool covered = true;
  for (const char* label : {"O1", "O2", "O3", "O4", "O5", "T1", "T2", "T3"}) {
    covered = covered && played[label] > 0 && evaluated[label] > 0;
    coverage += Fmt(" %s=%d/%d", label, played[label], evaluated[label]);
  }
  return {worst <= kPayoffTolerance && covered,
          Fmt("max |closed form - generic| = %.3g; played/evaluated:%s", worst,
              coverage.c_str())};
}

// ---------------------------------------------------------------------------
// Criteria 3-5 share one set of cost-grid sweeps.

struct SweepTally {
  long feasible = 0;
  long unclassifiable = 0;
  long inconsistent = 0;
  long boundary = 0;
  long firm_checked = 0;
  long firm_mismatch = 0;
  long agents_checked = 0;
  long agents_mismatch = 0;
  std::array<long, 7> by_region{};
  std::vector<std::string> examples;

  void Merge(const SweepTally& o) {
    feasible += o.feasible;
    unclassifiable += o.unclassifiable;
    inconsistent += o.inconsistent;
    boundary += o.boundary;
    firm_checked += o.firm_checked;
    firm_mismatch += o.firm_mismatch;
    agents_checked += o.agents_checked;
    agents_mismatch += o.agents_mismatch;
    for (int i = 0; i < 7; ++i) by_region[i] += o.by_region[i];
    for (const std::string& e : o.examples) {
      if (examples.size() < 3) examples.push_back(e);
    }
  }
};

Preference Sign(double opaque, double transparent) {
  const double gap = transparent - opaque;
  const double scale =
      std::max({1.0, std::abs(opaque), std::abs(transparent)});
  if (std::abs(gap) <= kTieTolerance * scale) return Preference::kIndifferent;
  return gap > 0 ? Preference::kTransparent : Preference::kOpaque;
}

// Firm-side rule: N1/N3/C3 opaque, N2 tie, C4 transparent, C1 and C2 decided
// by beta against beta1 and beta2.
bool FirmRuleHolds(Region region, double beta, double beta1, double beta2,
                   Preference got) {
  const auto threshold = [&](double t) {
    if (std::abs(beta - t) <= kThresholdWindow) {
      return got != (beta > t ? Preference::kOpaque : Preference::kTransparent);
    }
    return got == (beta > t ? Preference::kTransparent : Preference::kOpaque);
  };
  switch (region) {
    case Region::kN1:
    case Region::kN3:
    case Region::kC3:
      return got == Preference::kOpaque;
    case Region::kN2:
      return got == Preference::kIndifferent;
    case Region::kC1:
      return threshold(beta1);
    case Region::kC2:
      return threshold(beta2);
    case Region::kC4:
      return got == Preference::kTransparent;
  }
  return false;
}

// Agent-side rule: N1/C1/C4 opaque, N2 tie, N3/C2/C3 transparent.
bool AgentsRuleHolds(Region region, Preference got) {
  switch (region) {
    case Region::kN1:
    case Region::kC1:
    case Region::kC4:
      return got == Preference::kOpaque;
    case Region::kN2:
      return got == Preference::kIndifferent;
    default:
      return got == Preference::kTransparent;
  }
}

SweepTally SweepDraw(const RawParams& base) {
  SweepTally tally;
  const Primitives prim{base.theta, base.lambda, base.alpha, base.beta,
                        base.reward, 0, 0};
  const double beta1 = testing::SolveBeta1(prim);
  const double beta2 = testing::SolveBeta2(prim);
  const double c_max = 1.5 * base.reward;
  const double step = c_max / kGridResolution;
  for (int i = 0; i < kGridResolution; ++i) {
    for (int j = 0; j < kGridResolution; ++j) {
      RawParams raw = base;
      raw.cost_h = (i + 0.5) * step;
      raw.cost_l = (j + 0.5) * step;
      const ValidationResult v = ModelParams::Validate(raw);
      if (!v) continue;
      const ModelParams& p = v.value();
      ++tally.feasible;

      std::optional<RegionClassification> classified;
      std::optional<EquilibriumOutcome> opaque, transparent;
      try {
        classified = ClassifyRegion(p, SelectionRule::kPublished);
        opaque = SolveOpaque(p, SelectionRule::kPublished);
        transparent = SolveTransparent(p);
      } catch (const DefectError& e) {
        (e.kind() == DefectKind::kUnclassifiablePoint ? tally.unclassifiable
                                                      : tally.inconsistent)++;
        continue;
      }
      const RegionClassification& rc = *classified;
      const EquilibriumOutcome& o = *opaque;
      const EquilibriumOutcome& t = *transparent;
      if (o.id.opaque() != rc.opaque || t.id.transparent() != rc.transparent) {
        ++tally.inconsistent;
        continue;
      }
      ++tally.by_region[int(rc.region)];
      if (rc.boundary || o.boundary || t.boundary) {
        ++tally.boundary;
        continue;
      }

      const Preference firm = Sign(o.payoffs.firm, t.payoffs.firm);
      ++tally.firm_checked;
      if (!FirmRuleHolds(rc.region, base.beta, beta1, beta2, firm)) {
        ++tally.firm_mismatch;
        if (tally.examples.size() < 3) {
          tally.examples.push_back(Fmt("firm %s at (%.6g, %.6g)",
                                       std::string(ToString(rc.region)).c_str(),
                                       raw.cost_h, raw.cost_l));
        }
      }
      const Preference agents =
          Sign(o.payoffs.agents_total(), t.payoffs.agents_total());
      ++tally.agents_checked;
      if (!AgentsRuleHolds(rc.region, agents)) {
        ++tally.agents_mismatch;
        if (tally.examples.size() < 3) {
          tally.examples.push_back(Fmt("agents %s at (%.6g, %.6g)",
                                       std::string(ToString(rc.region)).c_str(),
                                       raw.cost_h, raw.cost_l));
        }
      }
    }
  }
  return tally;
}

SweepTally RunSweeps(std::uint64_t seed, int threads) {
  ParamSampler sampler(seed);
  std::vector<RawParams> bases;
  for (int i = 0; i < kGridDraws; ++i) bases.push_back(sampler.NextBase());
  std::vector<SweepTally> tallies(bases.size());
  ParallelFor(int(bases.size()), threads,
              [&](int i) { tallies[i] = SweepDraw(bases[i]); });
  SweepTally total;
  for (const SweepTally& t : tallies) total.Merge(t);
  return total;
}

std::string Examples(const SweepTally& t) {
  std::string out;
  for (const std::string& e : t.examples) out += "; " + e;
  return out;
}

Result RegionExhaustiveness(const SweepTally& t) {
  std::string regions;
  for (Region r : kAllRegions) {
    regions += Fmt(" %s=%ld", std::string(ToString(r)).c_str(),
                   t.by_region[int(r)]);
  }
  return {t.unclassifiable == 0 && t.inconsistent == 0 && t.feasible > 0,
          Fmt("%d draws x %dx%d grid: %ld feasible points, %ld unclassifiable, "
              "%ld inconsistent;%s",
              kGridDraws, kGridResolution, kGridResolution, t.feasible,
              t.unclassifiable, t.inconsistent, regions.c_str())};
}

Result FirmRegionRule(const SweepTally& t) {
  return {t.firm_mismatch == 0 && t.firm_checked > 0,
          Fmt("%ld/%ld non-boundary points disagree (%ld boundary points "
              "skipped)%s",
              t.firm_mismatch, t.firm_checked, t.boundary, Examples(t).c_str())};
}

Result AgentsRegionRule(const SweepTally& t) {
  return {t.agents_mismatch == 0 && t.agents_checked > 0,
          Fmt("%ld/%ld non-boundary points disagree", t.agents_mismatch,
              t.agents_checked)};
}

// ---------------------------------------------------------------------------

Result ThresholdIdentities(std::uint64_t seed) {
  ParamSampler sampler(seed);
  int order = 0, upper = 0, low_cross = 0, high_cross = 0;
  double worst_upper = 0, worst_low = 0, worst_high = 0;
  for (int i = 0; i < kSamples; ++i) {
    const RawParams raw = sampler.NextBase();
    const ModelParams p = ValidateOrThrow(raw);
    const BetaThresholds t =
        ComputeBetaThresholds(raw.theta, raw.lambda, raw.alpha, raw.reward);
    const AssumptionBounds b = p.bounds();
    if (!(t.beta1 < t.beta2 && t.beta2 < t.beta3)) ++order;
    const double du = std::abs(t.beta3 - b.beta_upper);
    worst_upper = std::max(worst_upper, du);
    if (du > kIdentityTolerance) ++upper;

    // Just inside each open alpha endpoint.
    const double span = b.alpha_upper - b.alpha_lower;
    const BetaThresholds lo = ComputeBetaThresholds(
        raw.theta, raw.lambda, b.alpha_lower + 1e-12 * span, raw.reward);
    const BetaThresholds hi = ComputeBetaThresholds(
        raw.theta, raw.lambda, b.alpha_upper - 1e-12 * span, raw.reward);
    const double dl = std::abs(lo.beta1 - lo.beta2);
    const double dh = std::abs(hi.beta2 - hi.beta3);
    worst_low = std::max(worst_low, dl);
    worst_high = std::max(worst_high, dh);
    if (dl > kCrossingTolerance) ++low_cross;
    if (dh > kCrossingTolerance) ++high_cross;
  }
  return {order + upper + low_cross + high_cross == 0,
          Fmt("%d draws: %d order violations, max |beta3 - beta_upper| = %.3g, "
              "max |beta1 - beta2| at alpha_lower = %.3g, max |beta2 - beta3| "
              "at alpha_upper = %.3g",
              kSamples, order, worst_upper, worst_low, worst_high)};
}

// ---------------------------------------------------------------------------

double RelativeError(double analytic, double numeric) {
  return std::abs(analytic - numeric) / std::abs(analytic);
}

Result ComparativeStaticsCheck(const std::vector<ModelParams>& samples) {
  int sign_failures = 0;
  double worst = 0, worst_zero = 0;
  for (const ModelParams& p : samples) {
    ComparativeStatics s;
    try {
      s = ComputeComparativeStatics(p);
    } catch (const DefectError&) {
      ++sign_failures;
      continue;
    }
    if (!(s.d_beta1_d_lambda > 0 && s.d_beta2_d_lambda > 0 &&
          s.d_beta1_d_theta < 0 && s.d_beta2_d_theta == 0)) {
      ++sign_failures;
    }

    // Central differences of the oracle roots.
    const Primitives base = FromParams(p);
    const auto fd = [&](double Primitives::*field, double lo, double hi,
                        double (*root)(const Primitives&)) {
      const double x = base.*field;
      const double h = std::min({1e-5, (x - lo) / 2, (hi - x) / 2});
      Primitives up = base, down = base;
      up.*field = x + h;
      down.*field = x - h;
      return (root(up) - root(down)) / (2 * h);
    };
    const double b1l = fd(&Primitives::lambda, 0.5, 1, testing::SolveBeta1);
    const double b2l = fd(&Primitives::lambda, 0.5, 1, testing::SolveBeta2);
    const double b1t = fd(&Primitives::theta, 0, 1, testing::SolveBeta1);
    const double b2t = fd(&Primitives::theta, 0, 1, testing::SolveBeta2);
    if (b1l <= 0 || b2l <= 0 || b1t >= 0) ++sign_failures;
    worst = std::max({worst, RelativeError(s.d_beta1_d_lambda, b1l),
                      RelativeError(s.d_beta2_d_lambda, b2l),
                      RelativeError(s.d_beta1_d_theta, b1t),
                      s.max_relative_error});
    worst_zero = std::max(worst_zero, std::abs(b2t));
  }
  return {sign_failures == 0 && worst <= kStaticsTolerance &&
              worst_zero <= kStaticsTolerance,
          Fmt("%d draws: max relative error %.3g, max |d beta2/d theta| "
              "numeric %.3g, %d sign failures",
              int(samples.size()), worst, worst_zero, sign_failures)};
}

// ---------------------------------------------------------------------------

Result AreaMonotonicity() {
  double previous = -1;
  bool monotone = true;
  std::string values;
  for (double lambda : {0.6, 0.7, 0.8, 0.9}) {
    const RegionAreas a =
        ComputeRegionAreas(lambda, 1.0, kAreaResolution, 1.5);
    const double contested = a[Region::kC1] + a[Region::kC2] + a[Region::kC4];
    const double exact = testing::AreaC1(lambda) + testing::AreaC2(lambda) +
                         testing::AreaC4(lambda);
    monotone = monotone && contested >= previous;
    previous = contested;
    values += Fmt(" %.1f:%.4f(exact %.4f)", lambda, contested, exact);
  }
  return {monotone, Fmt("contested area C1+C2+C4 by lambda:%s", values.c_str())};
}

// ---------------------------------------------------------------------------

Result ParetoRegion(std::uint64_t seed) {
  constexpr int kWanted = 1000;
  constexpr long kMaxAttempts = 2000000;
  ParamSampler sampler(seed);
  int hits = 0, exceptions = 0;
  long attempts = 0;
  while (hits < kWanted && attempts < kMaxAttempts) {
    ++attempts;
    const ModelParams p = sampler.Next();
    const RegionClassification rc = ClassifyRegion(p);
    if (rc.region != Region::kC2 || rc.boundary) continue;
    const double beta2 = testing::SolveBeta2(FromParams(p));
    if (p.beta() <= beta2 + kThresholdWindow) continue;
    ++hits;
    const EquilibriumOutcome o = SolveOpaque(p);
    const EquilibriumOutcome t = SolveTransparent(p);
    if (Sign(o.payoffs.firm, t.payoffs.firm) != Preference::kTransparent ||
        Sign(o.payoffs.agents_total(), t.payoffs.agents_total()) !=
            Preference::kTransparent) {
      ++exceptions;
    }
  }
  return {hits > 0 && exceptions == 0,
          Fmt("%d C2 points with beta > beta2 (%ld draws), %d exceptions", hits,
              attempts, exceptions)};
}

// ---------------------------------------------------------------------------

double ProfileDistance(const StrategyProfile& a, const StrategyProfile& b) {
  return std::max(std::abs(a.improve_h - b.improve_h),
                  std::abs(a.improve_l - b.improve_l));
}

struct MixedRun {
  std::string label;
  double distance;
};

Result Dynamics(const std::vector<ModelParams>& samples, int threads) {
  // Pure cases at damping 1.
  std::atomic<int> pure_runs{0}, pure_failures{0}, worst_rounds{0};
  ParallelFor(int(samples.size()), threads, [&](int i) {
    const ModelParams& p = samples[i];
    for (const EquilibriumOutcome& o : {SolveOpaque(p), SolveTransparent(p)}) {
      if (o.mixing || o.boundary) continue;
      DynamicsOptions options;
      options.damping = 1;
      options.max_rounds = kPureRounds;
      const DynamicsTrace trace =
          BestResponseDynamics(p, o.id.scenario, options);
      ++pure_runs;
      const int rounds = int(trace.rounds.size()) - 1;
      int seen = worst_rounds.load();
      while (rounds > seen && !worst_rounds.compare_exchange_weak(seen, rounds)) {
      }
      if (!trace.converged ||
          ProfileDistance(trace.limit, o.profile) > kDynamicsTolerance) {
        ++pure_failures;
      }
    }
  });

  // Mixed cases: the two worked examples plus sampled O4 and O5 points.
  std::vector<ModelParams> mixed = {testing::Base(0.5, 0.7),
                                    testing::Base(0.1, 0.8)};
  int o4 = 0, o5 = 0;
  for (const ModelParams& p : samples) {
    const OpaqueCase c = SolveOpaque(p).id.opaque();
    if (c == OpaqueCase::kO4 && o4 < 10 && !SolveOpaque(p).boundary) {
      mixed.push_back(p);
      ++o4;
    }
    if (c == OpaqueCase::kO5 && o5 < 10 && !SolveOpaque(p).boundary) {
      mixed.push_back(p);
      ++o5;
    }
  }
  std::vector<MixedRun> runs(mixed.size());
  ParallelFor(int(mixed.size()), threads, [&](int i) {
    const EquilibriumOutcome o = SolveOpaque(mixed[i]);
    DynamicsOptions options;
    options.damping = kMixedDamping;
    options.max_rounds = kMixedRounds;
    // Start from the pure profile the mixture branches from. Nobody educating
    // is also an equilibrium inside the O5 region, so that start can lock in
    // there instead.
    if (o.id.opaque() == OpaqueCase::kO5) {
      options.start = StrategyProfile{Scenario::kOpaque, 1, 0};
    }
    const DynamicsTrace trace =
        BestResponseDynamics(mixed[i], Scenario::kOpaque, options);
    runs[i] = {o.id.label(), ProfileDistance(trace.time_average, o.profile)};
  });
  std::map<std::string, std::pair<int, double>> worst;  // failures, distance
  for (const MixedRun& r : runs) {
    auto& [fails, dist] = worst[r.label];
    fails += r.distance > kMixtureTolerance;
    dist = std::max(dist, r.distance);
  }
  int mixed_failures = 0;
  std::string mixed_detail;
  for (const auto& [label, w] : worst) {
    mixed_failures += w.first;
    mixed_detail += Fmt(" %s %d failing, max distance %.3f;", label.c_str(),
                        w.first, w.second);
  }
  return {pure_failures == 0 && mixed_failures == 0 && pure_runs > 0,
          Fmt("pure: %d/%d runs fail (max %d rounds); mixed after %d rounds at "
              "damping %.2f:%s",
              pure_failures.load(), pure_runs.load(), worst_rounds.load(),
              kMixedRounds, kMixedDamping, mixed_detail.c_str())};
}

// ---------------------------------------------------------------------------

// Firm best response to a profile, from the path oracle's state marginals.
testing::Policy OraclePolicy(const Primitives& p, bool opaque, double h,
                             double l) {
  testing::Policy policy{};
  for (int s = 0; s < (opaque ? 4 : 2); ++s) {
    policy[s] = testing::PathStateMarginal(p, opaque, h, l, s) > 0 ? 1 : 0;
  }
  return policy;
}

double OracleFirm(const Primitives& p, bool opaque, double h, double l) {
  return EvaluatePaths(p, opaque, h, l, OraclePolicy(p, opaque, h, l)).firm;
}

Result WorkedExamples() {
  struct Fixture {
    std::string name;
    double literal;
    double oracle;
    double library;
  };
  const ModelParams o1 = testing::Base(0.5, 1.2);
  const ModelParams o4 = testing::Base(0.5, 0.7);
  const ModelParams o5 = testing::Base(0.1, 0.8);
  const Primitives p1 = FromParams(o1), p4 = FromParams(o4),
                   p5 = FromParams(o5);

  const double ph = testing::SolvePH(p4), p4a = testing::SolveP4(p4);
  testing::Policy pol4 = OraclePolicy(p4, true, ph, 0);
  pol4[0] = p4a;
  const double pl = testing::SolvePL(p5), p5d = testing::SolveP5(p5);
  testing::Policy pol5 = OraclePolicy(p5, true, 1, pl);
  pol5[3] = p5d;

  const EquilibriumOutcome so4 = SolveOpaque(o4);
  const EquilibriumOutcome so5 = SolveOpaque(o5);
  const BetaThresholds bt = ComputeBetaThresholds(o1);
  const std::vector<Fixture> fixtures = {
      {"O1 payoff", 0.0625, OracleFirm(p1, true, 0, 0),
       SolveOpaque(o1).payoffs.firm},
      {"O4 p4", 2.0 / 3.0, p4a, so4.mixing ? so4.mixing->firm_probability : NAN},
      {"O4 p_H", 1.0 / 3.0, ph, so4.mixing ? so4.mixing->agent_probability : NAN},
      {"O4 payoff", 1.0 / 6.0, EvaluatePaths(p4, true, ph, 0, pol4).firm,
       so4.payoffs.firm},
      {"O5 p5", 11.0 / 15.0, p5d,
       so5.mixing ? so5.mixing->firm_probability : NAN},
      {"O5 p_L", 2.0 / 3.0, pl, so5.mixing ? so5.mixing->agent_probability : NAN},
      {"O5 payoff", 1.0 / 3.0, EvaluatePaths(p5, true, 1, pl, pol5).firm,
       so5.payoffs.firm},
      {"T2 payoff", 0.5, OracleFirm(p1, false, 1, 0),
       SolveTransparent(o1).payoffs.firm},
      {"T3 payoff", 0.25, OracleFirm(p5, false, 1, 1),
       SolveTransparent(o5).payoffs.firm},
      {"beta1", 0.0625, testing::SolveBeta1(p1), bt.beta1},
      {"beta2", 0.4, testing::SolveBeta2(p1), bt.beta2},
      {"beta3", 0.625, testing::SolveBeta3(p1), bt.beta3},
  };
  int failures = 0;
  std::string detail;
  for (const Fixture& f : fixtures) {
    const bool literal_ok = std::abs(f.oracle - f.literal) <= kFixtureTolerance;
    const bool library_ok = std::abs(f.library - f.oracle) <= kFixtureTolerance;
    if (literal_ok && library_ok) continue;
    ++failures;
    detail += Fmt("; %s: fixture %.12g, oracle %.12g, library %.12g",
                  f.name.c_str(), f.literal, f.oracle, f.library);
  }
  return {failures == 0, Fmt("%d/%d fixtures reproduce%s",
                             int(fixtures.size()) - failures,
                             int(fixtures.size()), detail.c_str())};
}

}  // namespace
}  // namespace tgame::acceptance

int main(int argc, char** argv) {
  using namespace tgame::acceptance;
  CLI::App app{"Acceptance criteria for the transparency game library"};
  std::vector<int> known;
  std::uint64_t seed = 20261015;
  int threads = int(std::max(1u, std::thread::hardware_concurrency()));
  app.add_option("--known-failures", known,
                 "Criteria expected to fail; exit 0 iff exactly these fail")
      ->delimiter(',');
  app.add_option("--seed", seed, "Sampler seed");
  app.add_option("--threads", threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  const std::vector<tgame::ModelParams> samples = Samples(seed, kSamples);
  const SweepTally sweeps = RunSweeps(seed + 1, threads);

  const std::vector<std::pair<std::string, std::function<Result()>>> criteria =
      {
          {"oracle soundness", [&] { return OracleSoundness(samples); }},
          {"closed-form fidelity", [&] { return ClosedFormFidelity(samples); }},
          {"region exhaustiveness",
           [&] { return RegionExhaustiveness(sweeps); }},
          {"firm region rule", [&] { return FirmRegionRule(sweeps); }},
          {"agent region rule", [&] { return AgentsRegionRule(sweeps); }},
          {"threshold identities",
           [&] { return ThresholdIdentities(seed + 2); }},
          {"comparative statics",
           [&] { return ComparativeStaticsCheck(samples); }},
          {"contested area monotonicity", [] { return AreaMonotonicity(); }},
          {"pareto region", [&] { return ParetoRegion(seed + 3); }},
          {"dynamics", [&] { return Dynamics(samples, threads); }},
          {"worked examples", [] { return WorkedExamples(); }},
      };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = int(i) + 1;
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    if (!r.pass) failed.insert(id);
    std::printf("%s %2d %s: %s\n", r.pass ? "PASS" : "FAIL", id,
                criteria[i].first.c_str(), r.detail.c_str());
    std::fflush(stdout);
  }

  const std::set<int> expected(known.begin(), known.end());
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(),
              criteria.size());
  if (app.count("--known-failures") == 0) return failed.empty() ? 0 : 1;
  if (failed != expected) {
    std::printf("failing set differs from --known-failures\n");
    return 1;
  }
  return 0;
}
