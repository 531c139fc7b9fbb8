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

#include "sweep.h"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#include "report.h"
#include "tgame/oracle.h"

namespace tgame::cli {
namespace {

constexpr const char* kColumns[] = {
    "c_h",           "c_l",
    "feasible",      "opaque_case",
    "transparent_case", "region",
    "pi_firm_opaque", "pi_firm_transparent",
    "firm_prefers",  "pi_agents_opaque",
    "pi_agents_transparent", "agents_prefer",
    "dos_opaque",    "dos_transparent",
    "boundary_flag"};

constexpr const char* kVerifyColumns[] = {"nash_ok_opaque",
                                          "nash_ok_transparent"};

const char* Bool(bool b) { return b ? "true" : "false"; }

SweepRow Evaluate(const SweepSpec& spec, double c_h, double c_l) {
  SweepRow row{.c_h = c_h, .c_l = c_l};
  RawParams raw = spec.base;
  raw.cost_h = c_h;
  raw.cost_l = c_l;
  ValidationResult v = ModelParams::Validate(raw);
  if (!v.ok()) return row;
  const ModelParams& params = v.value();
  row.feasible = true;
  row.report = Compare(params, spec.rule);
  if (spec.verify) {
    row.nash_ok_opaque =
        VerifyEquilibrium(SolveOpaque(params, spec.rule), params).is_nash;
    row.nash_ok_transparent =
        VerifyEquilibrium(SolveTransparent(params), params).is_nash;
  }
  return row;
}

// Column values of one row, in header order.
std::vector<std::string> Cells(const SweepRow& row, bool verify) {
  std::vector<std::string> cells = {FormatDouble(row.c_h),
                                    FormatDouble(row.c_l), Bool(row.feasible)};
  if (row.report) {
    const ComparisonReport& r = *row.report;
    cells.insert(cells.end(),
                 {std::string(ToString(r.opaque_case)),
                  std::string(ToString(r.transparent_case)),
                  std::string(ToString(r.region)),
                  FormatDouble(r.pi_firm_opaque),
                  FormatDouble(r.pi_firm_transparent),
                  std::string(ToString(r.firm_prefers)),
                  FormatDouble(r.pi_agents_opaque),
                  FormatDouble(r.pi_agents_transparent),
                  std::string(ToString(r.agents_prefer)),
                  FormatDouble(r.dos_opaque), FormatDouble(r.dos_transparent),
                  Bool(r.boundary)});
    if (verify) {
      cells.push_back(Bool(row.nash_ok_opaque));
      cells.push_back(Bool(row.nash_ok_transparent));
    }
  } else {
    cells.resize(std::size(kColumns) + (verify ? std::size(kVerifyColumns) : 0));
  }
  return cells;
}

std::vector<std::string> Header(bool verify) {
  std::vector<std::string> h(std::begin(kColumns), std::end(kColumns));
  if (verify) h.insert(h.end(), std::begin(kVerifyColumns), std::end(kVerifyColumns));
  return h;
}

}  // namespace

int ResolveThreads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TRANSPARENCY_GAME_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return int(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepRow> RunSweep(const SweepSpec& spec) {
  if (spec.steps < 2) throw std::invalid_argument("steps must be >= 2");
  if (!(spec.c_min >= 0)) throw std::invalid_argument("c_min must be >= 0");
  if (!(spec.c_max > spec.c_min)) {
    throw std::invalid_argument("c_max must exceed c_min");
  }
  const int n = spec.steps;
  const double step = (spec.c_max - spec.c_min) / (n - 1);
  auto coord = [&](int i) {
    return i == n - 1 ? spec.c_max : spec.c_min + i * step;
  };
  std::vector<SweepRow> rows(std::size_t(n) * n);
  const int workers =
      std::min<long>(ResolveThreads(spec.threads), long(rows.size()));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](int w) {
    try {
      for (std::size_t k = w; k < rows.size(); k += workers) {
        rows[k] = Evaluate(spec, coord(int(k / n)), coord(int(k % n)));
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (std::thread& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

void WriteSweepCsv(const std::vector<SweepRow>& rows, bool verify,
                   std::ostream& out) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(Header(verify));
  for (const SweepRow& row : rows) line(Cells(row, verify));
}

void WriteSweepJson(const std::vector<SweepRow>& rows, bool verify,
                    std::ostream& out) {
  const std::vector<std::string> header = Header(verify);
  Json list = Json::array();
  for (const SweepRow& row : rows) {
    Json obj = Json::object();
    obj["c_h"] = row.c_h;
    obj["c_l"] = row.c_l;
    obj["feasible"] = row.feasible;
    const std::vector<std::string> cells = Cells(row, verify);
    for (std::size_t i = 3; i < header.size(); ++i) {
      if (!row.feasible) {
        obj[header[i]] = nullptr;
        continue;
      }
      const std::string& c = cells[i];
      if (c == "true" || c == "false") {
        obj[header[i]] = (c == "true");
      } else if (header[i].rfind("pi_", 0) == 0 ||
                 header[i].rfind("dos_", 0) == 0) {
        obj[header[i]] = std::stod(c);
      } else {
        obj[header[i]] = c;
      }
    }
    list.push_back(std::move(obj));
  }
  out << list.dump(2) << '\n';
}

}  // namespace tgame::cli
