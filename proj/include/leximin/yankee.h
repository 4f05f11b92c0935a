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

#ifndef LEXIMIN_YANKEE_H_
#define LEXIMIN_YANKEE_H_

#include "leximin/core.h"
#include "leximin/threshold.h"

namespace leximin {

// Clean MAX-USW leximin allocation for binary submodular functions. Active
// agents take turns by (bundle size, index); each turn either augments along
// a shortest path from F(X, i) to X_0 or retires the agent.
Allocation YankeeSwap(int num_items, const BinaryProfile& betas);

}  // namespace leximin

#endif  // LEXIMIN_YANKEE_H_
