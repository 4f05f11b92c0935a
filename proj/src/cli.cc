// Copyright 2026 The Authors.
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

#include "leximin/cli.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "leximin/errors.h"
#include "leximin/exchange.h"
#include "leximin/fairness.h"
#include "leximin/instgen.h"
#include "leximin/oracle.h"
#include "leximin/serialize.h"
#include "leximin/solver.h"

namespace leximin {
namespace {

using json = nlohmann::json;

// Bad flags or unreadable files.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

int ToInt(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int x = std::stoi(text, &used);
    if (used == text.size()) return x;
  } catch (const std::exception&) {
  }
  throw UsageError("bad " + what + " \"" + text + "\"");
}

std::vector<int> ToInts(const std::string& text, char sep,
                        const std::string& what) {
  std::vector<int> out;
  for (const std::string& part : Split(text, sep)) out.push_back(ToInt(part, what));
  return out;
}

IntRange ToRange(const std::string& text, const std::string& what) {
  const std::vector<int> bounds = ToInts(text, ':', what);
  if (bounds.size() != 2 || bounds[0] > bounds[1]) {
    throw UsageError(what + " must look like lo:hi with lo <= hi");
  }
  return {bounds[0], bounds[1]};
}

std::string Bundle(const ItemSet& s) {
  std::string out;
  s.ForEach([&](ItemId o) { out += (out.empty() ? "" : " ") + ItemName(o); });
  return out.empty() ? "-" : out;
}

void PrintHuman(const Instance& inst, const SolveReport& r, std::ostream& out) {
  out << std::left << std::setw(7) << "agent" << std::setw(9) << "utility"
      << std::setw(5) << "|xc|" << std::setw(5) << "|x0|" << std::setw(6)
      << "|xm1|" << "bundle\n";
  for (AgentId i = 1; i <= inst.num_agents(); ++i) {
    out << std::setw(7) << i << std::setw(9) << r.utilities[i - 1]
        << std::setw(5) << r.decomposition.xc.bundle(i).size() << std::setw(5)
        << r.decomposition.x0.bundle(i).size() << std::setw(6)
        << r.decomposition.xm1.bundle(i).size() << Bundle(r.allocation.bundle(i))
        << "\n";
  }
  out << "sorted:";
  for (Utility u : r.sorted.values()) out << " " << u;
  out << "\nusw: " << r.usw << "\naugmentations: " << r.pareto_augmentations
      << " pareto, " << r.exchange_augmentations << " exchange\n";
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

// solve ----------------------------------------------------------------------

struct SolveFlags {
  std::string instance;
  std::string output;
  bool trace = false;
  bool human = false;
  bool dump_graph = false;
};

int RunSolve(const SolveFlags& f, std::ostream& out, std::ostream& err) {
  const Instance inst = ParseInstance(ReadFile(f.instance));
  CheckSupported(inst);
  TraceWriter trace(err);
  SolverObserver* observer = f.trace ? &trace : nullptr;
  SolverState state = Phase1(inst);
  Phase2(inst, state, observer);
  if (f.dump_graph) {
    err << FormatEdgeList(BuildWeightedGraph(inst, state.xc, state.x0));
  }
  const SolveReport report = Phase3(inst, std::move(state), observer);
  const std::string text = SerializeReport(report);
  if (!f.output.empty()) WriteFile(f.output, text);
  if (f.human) {
    PrintHuman(inst, report, out);
  } else if (f.output.empty()) {
    out << text;
  }
  return kExitOk;
}

// brute ----------------------------------------------------------------------

int RunBrute(const std::string& path, std::ostream& out) {
  const Instance inst = ParseInstance(ReadFile(path));
  const OracleBudget budget = OracleBudget::FromEnvironment();
  const BruteLeximinResult best = BruteLeximin(inst, budget);
  const json witness = json::parse(SerializeAllocation(best.witness));
  out << Dump({{"max_usw", BruteMaxUsw(inst, budget)},
               {"sorted", best.sorted.values()},
               {"witness", witness},
               {"witness_utilities", UtilityVectorOf(inst, best.witness)}});
  return kExitOk;
}

// verify ---------------------------------------------------------------------

struct VerifyFlags {
  std::string instance;
  std::string allocation;
  std::string props = "leximin,prop1,ef1,mms,lorenz,usw";
};

json Verdicts(const AgentVerdicts& v) {
  json out = json::array();
  for (bool ok : v) out.push_back(ok);
  return out;
}

int RunVerify(const VerifyFlags& f, std::ostream& out) {
  const Instance inst = ParseInstance(ReadFile(f.instance));
  const Allocation x = ParseAllocationOrReport(ReadFile(f.allocation));
  if (x.num_agents() != inst.num_agents() ||
      x.num_items() != inst.num_items()) {
    throw UsageError("allocation does not match the instance's agents/items");
  }
  if (!x.complete()) throw UsageError("allocation is not complete");
  static const std::vector<std::string> kKnown = {"leximin", "prop1", "ef1",
                                                  "mms",     "lorenz", "usw"};
  static const std::vector<std::string> kOracleBacked = {"leximin", "mms",
                                                         "lorenz", "usw"};
  std::vector<std::string> props = Split(f.props, ',');
  const OracleBudget budget = OracleBudget::FromEnvironment();
  for (const std::string& p : props) {
    if (std::find(kKnown.begin(), kKnown.end(), p) == kKnown.end()) {
      throw UsageError("unknown property \"" + p + "\"");
    }
    if (std::find(kOracleBacked.begin(), kOracleBacked.end(), p) !=
        kOracleBacked.end()) {
      budget.Check(inst.num_agents(), inst.num_items());
    }
  }
  const UtilityVector u = UtilityVectorOf(inst, x);
  json report = json::object();
  bool all_ok = true;
  for (const std::string& p : props) {
    json entry;
    bool ok = true;
    if (p == "leximin") {
      const BruteLeximinResult best = BruteLeximin(inst, budget);
      const SortedUtilityVector mine(u);
      ok = mine == best.sorted;
      entry = {{"optimal_sorted", best.sorted.values()},
               {"sorted", mine.values()}};
    } else if (p == "prop1") {
      const AgentVerdicts v = CheckProp1(inst, x);
      ok = AllTrue(v);
      entry = {{"agents", Verdicts(v)}};
    } else if (p == "ef1") {
      const Ef1Report ef1 = CheckEf1(inst, x);
      ok = ef1.all();
      json violations = json::array();
      for (const auto& [i, j] : ef1.violations()) {
        const Valuation& v = inst.valuation(i);
        violations.push_back({{"agent", i},
                              {"envied", j},
                              {"own_value", v.Value(x.bundle(i))},
                              {"envied_value", v.Value(x.bundle(j))}});
      }
      entry = {{"violations", violations}};
    } else if (p == "mms") {
      std::vector<Utility> mms;
      for (AgentId i = 1; i <= inst.num_agents(); ++i) {
        mms.push_back(BruteMms(inst, i, budget));
      }
      const AgentVerdicts v = CheckMms(inst, x, mms);
      ok = AllTrue(v);
      entry = {{"agents", Verdicts(v)}, {"mms", mms}, {"utilities", u}};
    } else if (p == "lorenz") {
      ok = BruteLorenzDominating(inst, x, budget);
      entry = json::object();
    } else if (p == "usw") {
      Utility usw = 0;
      for (Utility x_i : u) usw += x_i;
      const Utility best = BruteMaxUsw(inst, budget);
      ok = usw == best;
      entry = {{"max_usw", best}, {"usw", usw}};
    }
    entry["ok"] = ok;
    report[p] = std::move(entry);
    all_ok = all_ok && ok;
  }
  out << Dump({{"ok", all_ok}, {"properties", report}});
  return all_ok ? kExitOk : kExitViolated;
}

// gen ------------------------------------------------------------------------

struct GenFlags {
  std::uint64_t seed = 0;
  int agents = 2;
  int items = 4;
  Utility c = 1;
  std::string ratios = "1:1:1";
  std::string groups = "0:3";
  std::string caps = "0:3";
  int p = 3;
  int q = 1;
  int a = 2;
  std::string edges;
  std::string name;
};

std::vector<std::vector<int>> ParseEdges(const std::string& text) {
  std::vector<std::vector<int>> edges;
  for (const std::string& edge : Split(text, ';')) {
    edges.push_back(ToInts(edge, ',', "edge"));
  }
  return edges;
}

int RunGen(const std::string& family, const GenFlags& f, std::ostream& out) {
  if (family == "additive") {
    const std::vector<int> r = ToInts(f.ratios, ':', "ratios");
    if (r.size() != 3) throw UsageError("ratios must look like c:zero:minus_one");
    out << SerializeInstance(GenRandomAdditive(f.agents, f.items, f.c,
                                               {r[0], r[1], r[2]}, f.seed));
  } else if (family == "capped") {
    out << SerializeInstance(GenCappedGroups(f.agents, f.items, f.c,
                                             ToRange(f.groups, "groups"),
                                             ToRange(f.caps, "caps"), f.seed));
  } else if (family == "hardness") {
    ExPdmInstance expdm;
    if (f.edges == "matching") {
      expdm = MatchingExPdm();
    } else if (f.edges == "no-matching") {
      expdm = NoMatchingExPdm();
    } else {
      expdm = ExPdmInstance{f.p, f.a, ParseEdges(f.edges)};
    }
    out << SerializeInstance(GenHardness(expdm, f.q));
  } else {
    const std::map<std::string, Instance> fixtures = Fixtures();
    const auto it = fixtures.find(f.name);
    if (it == fixtures.end()) throw UsageError("unknown fixture \"" + f.name + "\"");
    out << SerializeInstance(it->second);
  }
  return kExitOk;
}

// validate -------------------------------------------------------------------

int RunValidate(const std::string& path, std::ostream& out) {
  const Instance inst = ParseInstance(ReadFile(path));
  json agents = json::array();
  bool all_ok = true;
  for (AgentId i = 1; i <= inst.num_agents(); ++i) {
    const Valuation& v = inst.valuation(i);
    json entry = {{"agent", i}, {"kind", ValuationKindName(v.kind())}};
    if (inst.num_items() > kMaxExplicitItems) {
      entry["checked"] = false;
      agents.push_back(std::move(entry));
      continue;
    }
    entry["checked"] = true;
    try {
      const SubmodularityReport sub = ValidateSubmodular(v);
      const OrderNeutralityReport neutral = ValidateOrderNeutral(v);
      const RangeReport range = ValidateRange(v, inst.c());
      entry["submodular"] = {{"ok", sub.ok}, {"detail", sub.Describe()}};
      entry["order_neutral"] = {{"ok", neutral.ok},
                                {"detail", neutral.Describe()}};
      entry["range"] = {{"ok", range.ok}, {"detail", range.Describe()}};
      all_ok = all_ok && sub.ok && neutral.ok && range.ok;
    } catch (const MalformedValuation& e) {
      entry["malformed"] = e.what();
      all_ok = false;
    }
    agents.push_back(std::move(entry));
  }
  out << Dump({{"agents", agents}, {"ok", all_ok}});
  return all_ok ? kExitOk : kExitViolated;
}

// bench ----------------------------------------------------------------------

struct BenchFlags {
  std::string family = "capped";
  std::string sizes = "2x6,3x8";
  int seeds = 5;
  std::uint64_t seed_base = 1;
  Utility c = 2;
  int threads = 1;
};

struct BenchRow {
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
  double micros = 0;
  std::int64_t pareto = 0;
  std::int64_t exchange = 0;
};

int RunBench(const BenchFlags& f, std::ostream& out) {
  if (f.family != "additive" && f.family != "capped") {
    throw UsageError("bench family must be additive or capped");
  }
  if (f.seeds < 1 || f.threads < 1) throw UsageError("seeds and threads must be positive");
  std::vector<BenchRow> rows;
  for (const std::string& size : Split(f.sizes, ',')) {
    const std::vector<int> nm = ToInts(size, 'x', "size");
    if (nm.size() != 2 || nm[0] < 1 || nm[1] < 0) {
      throw UsageError("sizes must look like NxM");
    }
    for (int k = 0; k < f.seeds; ++k) {
      rows.push_back({nm[0], nm[1], f.seed_base + k, 0, 0, 0});
    }
  }
  std::vector<std::string> failures(rows.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t r = first; r < rows.size(); r += stride) {
      BenchRow& row = rows[r];
      try {
        const Instance inst =
            f.family == "additive"
                ? GenRandomAdditive(row.n, row.m, f.c, {1, 1, 1}, row.seed)
                : GenCappedGroups(row.n, row.m, f.c, {0, 3}, {0, 3}, row.seed);
        const auto start = std::chrono::steady_clock::now();
        const SolveReport report = Solve(inst);
        const auto stop = std::chrono::steady_clock::now();
        row.micros =
            std::chrono::duration<double, std::micro>(stop - start).count();
        row.pareto = report.pareto_augmentations;
        row.exchange = report.exchange_augmentations;
      } catch (const std::exception& e) {
        failures[r] = e.what();
      }
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(f.threads, std::max<std::size_t>(rows.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work, t, workers);
  work(0, workers);
  for (std::thread& t : pool) t.join();
  for (const std::string& failure : failures) {
    if (!failure.empty()) throw InvariantViolation(failure);
  }
  out << "family,n,m,c,seed,micros,pareto_augmentations,"
         "exchange_augmentations,bound\n";
  for (const BenchRow& row : rows) {
    const long double n = row.n;
    const long double m = row.m;
    out << f.family << "," << row.n << "," << row.m << "," << f.c << ","
        << row.seed << "," << std::fixed << std::setprecision(1) << row.micros
        << "," << row.pareto << "," << row.exchange << ","
        << std::setprecision(0) << m + n * n * n * n * m * m * m << "\n";
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Leximin allocations for {-1, 0, c} order-neutral submodular "
               "valuations",
               "leximin"};
  app.require_subcommand(1, 1);

  SolveFlags solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Run the three-phase solver");
  solve_cmd->add_option("--instance", solve.instance, "Instance JSON")->required();
  solve_cmd->add_option("--output", solve.output, "Write the report here");
  solve_cmd->add_flag("--trace", solve.trace, "Log each augmentation to stderr");
  solve_cmd->add_flag("--human", solve.human, "Print a table instead of JSON");
  solve_cmd->add_flag("--dump-graph", solve.dump_graph,
                      "Print the final weighted exchange graph to stderr");

  std::string brute_instance;
  CLI::App* brute_cmd = app.add_subcommand("brute", "Exhaustive leximin oracle");
  brute_cmd->add_option("--instance", brute_instance, "Instance JSON")->required();

  VerifyFlags verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check fairness properties of an allocation");
  verify_cmd->add_option("--instance", verify.instance, "Instance JSON")->required();
  verify_cmd->add_option("--allocation", verify.allocation,
                         "Allocation or solve report JSON")
      ->required();
  verify_cmd->add_option("--props", verify.props,
                         "Comma-separated subset of "
                         "leximin,prop1,ef1,mms,lorenz,usw");

  GenFlags gen;
  std::string family;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("family", family, "additive, capped, hardness or fixture")
      ->required()
      ->check(CLI::IsMember({"additive", "capped", "hardness", "fixture"}));
  gen_cmd->add_option("--seed", gen.seed, "splitmix64 seed");
  gen_cmd->add_option("--agents", gen.agents, "Number of agents");
  gen_cmd->add_option("--items", gen.items, "Number of items");
  gen_cmd->add_option("--c", gen.c, "The positive value c");
  gen_cmd->add_option("--ratios", gen.ratios, "additive: c:zero:minus_one weights");
  gen_cmd->add_option("--groups", gen.groups, "capped: group count range lo:hi");
  gen_cmd->add_option("--caps", gen.caps, "capped: cap range lo:hi");
  gen_cmd->add_option("--p", gen.p, "hardness: tuple width p");
  gen_cmd->add_option("--q", gen.q, "hardness: coprime value q");
  gen_cmd->add_option("--a", gen.a, "hardness: vertices per part");
  gen_cmd->add_option("--edges", gen.edges,
                      "hardness: \"x,y,z;...\", or matching / no-matching");
  gen_cmd->add_option("--name", gen.name,
                      "fixture: ex2, ex_classic, ex_ef1, ex_mms, non_on, fig1");

  std::string validate_instance;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Run the valuation validators");
  validate_cmd->add_option("--instance", validate_instance, "Instance JSON")
      ->required();

  BenchFlags bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Time the solver (CSV)");
  bench_cmd->add_option("--family", bench.family, "additive or capped");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated NxM list");
  bench_cmd->add_option("--seeds", bench.seeds, "Seeds per size");
  bench_cmd->add_option("--seed-base", bench.seed_base, "First seed");
  bench_cmd->add_option("--c", bench.c, "The positive value c");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return RunSolve(solve, out, err);
    if (*brute_cmd) return RunBrute(brute_instance, out);
    if (*verify_cmd) return RunVerify(verify, out);
    if (*gen_cmd) return RunGen(family, gen, out);
    if (*validate_cmd) return RunValidate(validate_instance, out);
    if (*bench_cmd) return RunBench(bench, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInstance;
  } catch (const InvalidInstance& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInstance;
  } catch (const UnsupportedValuation& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInstance;
  } catch (const MalformedValuation& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInstance;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace leximin
