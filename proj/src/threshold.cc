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

#include "leximin/threshold.h"

#include <algorithm>

#include "leximin/errors.h"

namespace leximin {

int Beta(const Valuation& v, Utility tau, const ItemSet& s) {
  const std::vector<Utility> marginals = v.CanonicalTelescoping(s);
  return static_cast<int>(
      std::count_if(marginals.begin(), marginals.end(),
                    [tau](Utility x) { return x >= tau; }));
}

int BetaMarginal(const Valuation& v, Utility tau, const ItemSet& s, ItemId o) {
  if (s.contains(o)) {
    throw ContractViolation("beta marginal of item " + std::to_string(o) +
                            " already in the bundle");
  }
  return Beta(v, tau, s.With(o)) - Beta(v, tau, s);
}

std::vector<int> BinaryValuation::Marginals(const ItemSet& base) const {
  std::vector<int> out(num_items(), 0);
  const int at_base = Value(base);
  for (ItemId o = 0; o < num_items(); ++o) {
    if (!base.contains(o)) out[o] = Value(base.With(o)) - at_base;
  }
  return out;
}

std::vector<int> ThresholdFunction::Marginals(const ItemSet& base) const {
  const std::vector<Utility> dv = v_->Marginals(base);
  std::vector<int> out(dv.size(), 0);
  for (std::size_t o = 0; o < dv.size(); ++o) {
    if (!base.contains(static_cast<ItemId>(o))) out[o] = dv[o] >= tau_ ? 1 : 0;
  }
  return out;
}

std::vector<int> SetFunctionOracle::Marginals(const ItemSet& base) const {
  std::vector<int> out = BinaryValuation::Marginals(base);
  for (std::size_t o = 0; o < out.size(); ++o) {
    if (out[o] != 0 && out[o] != 1) {
      throw OracleViolation("binary oracle marginal of item " +
                            std::to_string(o) + " is " +
                            std::to_string(out[o]));
    }
  }
  return out;
}

BinaryProfile ThresholdProfile(const Instance& inst, Utility tau) {
  BinaryProfile betas;
  betas.reserve(inst.num_agents());
  for (const Valuation& v : inst.valuations()) {
    betas.push_back(std::make_unique<ThresholdFunction>(v, tau));
  }
  return betas;
}

bool IsClean(const Allocation& x, const BinaryProfile& betas) {
  for (AgentId i = 1; i <= x.num_agents(); ++i) {
    if (betas[i - 1]->Value(x.bundle(i)) != x.bundle(i).size()) return false;
  }
  return true;
}

ThresholdSplit DecomposeThreshold(const Instance& inst, const Allocation& x,
                                  Utility tau) {
  const int n = inst.num_agents();
  const int m = inst.num_items();
  std::vector<ItemSet> clean(n, ItemSet(m));
  std::vector<ItemSet> supplementary(n, ItemSet(m));
  for (AgentId i = 1; i <= n; ++i) {
    const ItemSet& bundle = x.bundle(i);
    const std::vector<Utility> marginals =
        inst.valuation(i).CanonicalTelescoping(bundle);
    std::size_t k = 0;
    bundle.ForEach([&](ItemId o) {
      (marginals[k++] >= tau ? clean : supplementary)[i - 1].insert(o);
    });
  }
  return {Allocation::FromBundles(m, clean),
          Allocation::FromBundles(m, supplementary)};
}

TriDecompositionCheck VerifyTriDecomposition(const Instance& inst,
                                             const Allocation& x,
                                             const TriDecomposition& d) {
  auto fail = [](char clause, AgentId i, std::string detail) {
    return TriDecompositionCheck{false, clause, i, std::move(detail)};
  };
  for (AgentId i = 1; i <= inst.num_agents(); ++i) {
    const ItemSet& c_part = d.xc.bundle(i);
    const ItemSet& zero_part = d.x0.bundle(i);
    const ItemSet& minus_part = d.xm1.bundle(i);
    if (!((c_part | zero_part | minus_part) == x.bundle(i))) {
      return fail('a', i, "parts do not cover the bundle");
    }
    if (c_part.Intersects(zero_part) || c_part.Intersects(minus_part) ||
        zero_part.Intersects(minus_part)) {
      return fail('b', i, "parts overlap");
    }
    const Valuation& v = inst.valuation(i);
    const Utility c_value = inst.c() * c_part.size();
    if (v.Value(c_part) != c_value || v.Value(c_part | zero_part) != c_value) {
      return fail('c', i, "c-part or c-part plus zero-part is not worth c|xc|");
    }
    if (v.Value(x.bundle(i)) != c_value - minus_part.size()) {
      return fail('d', i, "bundle value differs from c|xc| - |xm1|");
    }
  }
  return {};
}

TriDecomposition Decompose3(const Instance& inst, const Allocation& x) {
  ThresholdSplit nonnegative = DecomposeThreshold(inst, x, 0);
  ThresholdSplit top = DecomposeThreshold(inst, nonnegative.clean, inst.c());
  TriDecomposition d{std::move(top.clean), std::move(top.supplementary),
                     std::move(nonnegative.supplementary)};
  const TriDecompositionCheck check = VerifyTriDecomposition(inst, x, d);
  if (!check.ok) {
    throw DecompositionFailure(
        check.clause, "decomposition clause (" + std::string(1, check.clause) +
                          ") fails for agent " + std::to_string(check.agent) +
                          ": " + check.detail);
  }
  return d;
}

}  // namespace leximin
