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

#ifndef LEXIMIN_THRESHOLD_H_
#define LEXIMIN_THRESHOLD_H_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "leximin/core.h"

namespace leximin {

// beta^tau(S): number of entries >= tau in the sorted telescoping vector of S,
// computed along the canonical ascending insertion order.
int Beta(const Valuation& v, Utility tau, const ItemSet& s);

// beta^tau(S + o) - beta^tau(S); in {0, 1} for order-neutral v.
int BetaMarginal(const Valuation& v, Utility tau, const ItemSet& s, ItemId o);

// A set function with marginals in {0, 1}.
class BinaryValuation {
 public:
  virtual ~BinaryValuation() = default;
  virtual int num_items() const = 0;
  virtual int Value(const ItemSet& s) const = 0;
  // Delta(base, o) for every o not in base; entries for o in base are 0.
  virtual std::vector<int> Marginals(const ItemSet& base) const;
};

// beta^tau_i backed by an order-neutral valuation. Marginals use the
// one-insertion identity Delta beta(S, o) = [Delta v(S, o) >= tau].
class ThresholdFunction final : public BinaryValuation {
 public:
  ThresholdFunction(const Valuation& v, Utility tau) : v_(&v), tau_(tau) {}

  int num_items() const override { return v_->num_items(); }
  int Value(const ItemSet& s) const override { return Beta(*v_, tau_, s); }
  std::vector<int> Marginals(const ItemSet& base) const override;

  Utility tau() const { return tau_; }

 private:
  const Valuation* v_;
  Utility tau_;
};

// Wraps an arbitrary set function claimed to be binary submodular. Marginals
// outside {0, 1} raise OracleViolation.
class SetFunctionOracle final : public BinaryValuation {
 public:
  SetFunctionOracle(int num_items, std::function<int(const ItemSet&)> f)
      : num_items_(num_items), f_(std::move(f)) {}

  int num_items() const override { return num_items_; }
  int Value(const ItemSet& s) const override { return f_(s); }
  std::vector<int> Marginals(const ItemSet& base) const override;

 private:
  int num_items_;
  std::function<int(const ItemSet&)> f_;
};

// One binary function per agent, indexed by AgentId - 1.
using BinaryProfile = std::vector<std::unique_ptr<BinaryValuation>>;

BinaryProfile ThresholdProfile(const Instance& inst, Utility tau);

// X is clean w.r.t. the betas when beta_i(X_i) = |X_i| for every agent.
bool IsClean(const Allocation& x, const BinaryProfile& betas);

struct ThresholdSplit {
  Allocation clean;
  Allocation supplementary;
};

// Walks each X_i in ascending item order and keeps an item in `clean` iff its
// running marginal is at least tau.
ThresholdSplit DecomposeThreshold(const Instance& inst, const Allocation& x,
                                  Utility tau);

struct TriDecomposition {
  Allocation xc;
  Allocation x0;
  Allocation xm1;

  friend bool operator==(const TriDecomposition&,
                         const TriDecomposition&) = default;
};

struct TriDecompositionCheck {
  bool ok = true;
  char clause = 0;  // 'a'..'d' on failure
  AgentId agent = 0;
  std::string detail;
};

// Checks, for every agent i:
//   (a) xc_i | x0_i | xm1_i = X_i
//   (b) the three parts are pairwise disjoint
//   (c) v_i(xc_i | x0_i) = v_i(xc_i) = c |xc_i|
//   (d) v_i(X_i) = c |xc_i| - |xm1_i|
TriDecompositionCheck VerifyTriDecomposition(const Instance& inst,
                                             const Allocation& x,
                                             const TriDecomposition& d);

// Splits X at tau = 0 and then splits the non-negative part at tau = c.
// Throws DecompositionFailure if the result does not verify.
TriDecomposition Decompose3(const Instance& inst, const Allocation& x);

}  // namespace leximin

#endif  // LEXIMIN_THRESHOLD_H_
