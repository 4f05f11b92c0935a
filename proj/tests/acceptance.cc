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

// Acceptance gate: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "leximin/cli.h"
#include "leximin/core.h"
#include "leximin/errors.h"
#include "leximin/exchange.h"
#include "leximin/fairness.h"
#include "leximin/instgen.h"
#include "leximin/oracle.h"
#include "leximin/serialize.h"
#include "leximin/solver.h"
#include "leximin/threshold.h"
#include "leximin/valuations.h"
#include "test_util.h"

namespace leximin {
namespace {

using ::leximin::testing::Family;
using ::leximin::testing::Fixture;
using ::leximin::testing::SuiteInstance;

constexpr int kInstancesPerFamily = 200;
constexpr std::uint64_t kSeedBase = 20260;

struct Tally {
  int checked = 0;
  int failed = 0;
  std::string first_failure;

  void Record(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = what;
  }
  bool ok() const { return failed == 0; }
  std::string Summary() const {
    std::ostringstream s;
    s << checked - failed << "/" << checked << " checks";
    if (!ok()) s << "; first failure: " << first_failure;
    return s.str();
  }
};

// Recomputes cleanness, disjointness and the potential after every solver
// step, independently of the solver's own checks.
class InvariantObserver : public SolverObserver {
 public:
  InvariantObserver(const Instance& inst, const SolverState& start)
      : inst_(inst), last_potential_(ScaledPotential(start.xc)) {}

  void OnAugment(const SolverState& after, const AugmentingPath& path) override {
    CheckClean(after);
    const __int128 now = ScaledPotential(after.xc);
    if (path.kind == PathKind::kExchange && !(now < last_potential_)) {
      potential_violations_++;
    }
    last_potential_ = now;
  }

  int clean_violations() const { return clean_violations_; }
  int potential_violations() const { return potential_violations_; }

 private:
  void CheckClean(const SolverState& s) {
    for (AgentId i = 1; i <= inst_.num_agents(); ++i) {
      const Valuation& v = inst_.valuation(i);
      const ItemSet& xc = s.xc.bundle(i);
      const ItemSet& x0 = s.x0.bundle(i);
      bool ok = Beta(v, inst_.c(), xc) == xc.size();
      ok = ok && Beta(v, 0, xc | x0) == xc.size() + x0.size();
      ok = ok && !xc.Intersects(x0);
      for (AgentId j = 1; j <= inst_.num_agents(); ++j) {
        if (j == i) continue;
        ok = ok && !(xc | x0).Intersects(s.xc.bundle(j) | s.x0.bundle(j));
      }
      if (!ok) clean_violations_++;
    }
  }

  const Instance& inst_;
  __int128 last_potential_;
  int clean_violations_ = 0;
  int potential_violations_ = 0;
};

bool RelClose(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({std::abs(a), std::abs(b), 1e-300});
}

std::string Name(Family family, int k) {
  return std::string(family == Family::kAdditive ? "additive" : "capped") + "#" +
         std::to_string(k);
}

struct SuiteTallies {
  Tally equivalence, usw, prop1, ef1, mms, lorenz, welfare, clean, termination;
};

void RunSuite(SuiteTallies& t) {
  for (Family family : {Family::kAdditive, Family::kCappedGroups}) {
    for (int k = 0; k < kInstancesPerFamily; ++k) {
      const Instance inst = SuiteInstance(family, k, kSeedBase);
      const std::string name = Name(family, k);
      const int n = inst.num_agents();
      const int m = inst.num_items();

      SolverState state = Phase1(inst);
      InvariantObserver observer(inst, state);
      Phase2(inst, state, &observer);
      const SolveReport r = Phase3(inst, state, &observer);
      t.clean.Record(observer.clean_violations() == 0, name);
      const std::int64_t bound = static_cast<std::int64_t>(n) * n * n * n * m * m * m;
      t.termination.Record(r.pareto_augmentations <= m &&
                               r.exchange_augmentations <= bound &&
                               observer.potential_violations() == 0,
                           name);

      const BruteLeximinResult best = BruteLeximin(inst);
      t.equivalence.Record(r.sorted == best.sorted && r == Solve(inst), name);
      const Utility max_usw = BruteMaxUsw(inst);
      t.usw.Record(r.usw == max_usw, name);
      t.prop1.Record(AllTrue(CheckProp1(inst, r.allocation)), name);
      t.lorenz.Record(BruteLorenzDominating(inst, r.allocation), name);

      if (family == Family::kAdditive) {
        t.ef1.Record(CheckEf1(inst, r.allocation).all(), name);
        std::vector<Utility> mms;
        for (AgentId i = 1; i <= n; ++i) mms.push_back(BruteMms(inst, i));
        t.mms.Record(AllTrue(CheckMms(inst, r.allocation, mms)), name);
      }

      if (best.sorted[0] >= 0) {
        const std::optional<double> nash = PMeanWelfare(r.utilities, 0.0);
        const std::optional<double> best_nash = BruteMaxPMeanWelfare(inst, 0.0);
        t.welfare.Record(nash && best_nash && RelClose(*nash, *best_nash) &&
                             r.usw == max_usw,
                         name);
      }
    }
  }
}

// The EF1 fixture: agent 1 values its own bundle at 2c-1 and agent 2's at 3c.
void CheckEf1Fixture(Tally& t) {
  const Instance inst = Fixture("ex_ef1");
  const SolveReport r = Solve(inst);
  const Ef1Report ef1 = CheckEf1(inst, r.allocation);
  const Valuation& v1 = inst.valuation(1);
  t.Record(v1.Value(r.allocation.bundle(1)) == 3 &&
               v1.Value(r.allocation.bundle(2)) == 6 && !ef1.ok[0][1],
           "ex_ef1 violation not reproduced");
}

void CheckMmsFixture(Tally& t) {
  const Instance inst = Fixture("ex_mms");
  const SolveReport r = Solve(inst);
  t.Record(BruteMms(inst, 1) == 1 && r.utilities[0] == 0,
           "ex_mms: expected mms_1 = 1 and solver utility 0");
}

// Augmenting along (o2) instead of (o1) must break zero-cleanness.
void CheckForcedRegression(Tally& t) {
  const Instance inst = Fixture("ex_classic");
  const Allocation xc(1, 2);
  Allocation x0(1, 2);
  x0.Move(0, 1);
  const ExchangeState y =
      ApplyPath(xc, x0, {{1}, PathKind::kParetoImproving, 1, kUnallocated, 2});
  const Valuation& v = inst.valuation(1);
  const ItemSet both = y.xc.bundle(1) | y.x0.bundle(1);
  t.Record(Beta(v, 0, both) < both.size(), "forced (o2) stayed zero-clean");
}

void CheckHardness(Tally& t) {
  const Instance yes = GenHardness(MatchingExPdm(), 1);
  const Instance no = GenHardness(NoMatchingExPdm(), 1);
  t.Record(BruteLeximin(yes).sorted[0] == 0, "matching instance min != 0");
  t.Record(BruteLeximin(no).sorted[0] < 0, "no-matching instance min >= 0");
}

void CheckValidators(Tally& t) {
  const OrderNeutralityReport non_on =
      ValidateOrderNeutral(Fixture("non_on").valuation(1));
  t.Record(!non_on.ok && non_on.witness == ItemSet(2, {0, 1}) &&
               non_on.first == std::vector<Utility>{-1, 1} &&
               non_on.second == std::vector<Utility>{0, 0},
           "non_on: " + non_on.Describe());

  const Instance fig1 = Fixture("fig1");
  const Valuation& g = fig1.valuation(1);
  t.Record(ValidateSubmodular(g).ok && ValidateOrderNeutral(g).ok &&
               ValidateRange(g, fig1.c()).ok,
           "fig1 rejected by a validator");

  SplitMix64 rng(kSeedBase);
  for (int k = 0; k < 100; ++k) {
    const int m = rng.Between(1, 6);
    const Valuation v = ::leximin::testing::RandomTwoValueTable(m, rng);
    const bool submodular = ValidateSubmodular(v).ok;
    const OrderNeutralityReport neutral = ValidateOrderNeutral(v);
    t.Record(submodular && neutral.ok,
             "random two-value table #" + std::to_string(k) + ": " +
                 neutral.Describe());
  }
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
  bool operator==(const CliRun&) const = default;
};

void CheckDeterminism(Tally& t) {
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / ("leximin_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  for (const auto& [name, inst] : Fixtures()) {
    const std::string path = (dir / (name + ".json")).string();
    std::ofstream(path) << SerializeInstance(inst);
    CliRun runs[2];
    for (CliRun& run : runs) {
      std::ostringstream out;
      std::ostringstream err;
      run.code = RunCli({"solve", "--instance", path}, out, err);
      run.out = out.str();
      run.err = err.str();
    }
    t.Record(runs[0] == runs[1], name + " differs between runs");
  }
  fs::remove_all(dir);
}

int Report(int id, const std::string& title, const Tally& t) {
  std::cout << (t.ok() ? "PASS" : "FAIL") << "  " << id << ". " << title << ": "
            << t.Summary() << "\n";
  return t.ok() ? 0 : 1;
}

int Main() {
  SuiteTallies suite;
  RunSuite(suite);
  CheckEf1Fixture(suite.ef1);
  CheckMmsFixture(suite.mms);
  CheckForcedRegression(suite.clean);
  Tally hardness;
  CheckHardness(hardness);
  Tally validators;
  CheckValidators(validators);
  Tally determinism;
  CheckDeterminism(determinism);

  int failures = 0;
  failures += Report(1, "oracle equivalence", suite.equivalence);
  failures += Report(2, "max utilitarian welfare", suite.usw);
  failures += Report(3, "PROP1", suite.prop1);
  failures += Report(4, "EF1 (additive) and the EF1 counterexample", suite.ef1);
  failures += Report(5, "MMS (additive) and the MMS counterexample", suite.mms);
  failures += Report(6, "Lorenz dominance", suite.lorenz);
  failures += Report(7, "Nash and utilitarian p-mean welfare", suite.welfare);
  failures += Report(8, "cleanness invariants and forced-path control", suite.clean);
  failures += Report(9, "termination bound and potential decrease", suite.termination);
  failures += Report(10, "hardness reduction", hardness);
  failures += Report(11, "valuation validators", validators);
  failures += Report(12, "determinism", determinism);
  std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures))
            << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace leximin

int main() {
  try {
    return leximin::Main();
  } catch (const std::exception& e) {
    std::cout << "FAIL  acceptance aborted: " << e.what() << "\n";
    return 1;
  }
}
