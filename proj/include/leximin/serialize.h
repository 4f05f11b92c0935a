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

#ifndef LEXIMIN_SERIALIZE_H_
#define LEXIMIN_SERIALIZE_H_

#include <string>
#include <string_view>

#include "leximin/core.h"
#include "leximin/solver.h"

namespace leximin {

// JSON documents with sorted keys and integer numbers only, so equal values
// serialize to identical bytes. Parse errors raise ParseError with a path to
// the offending node; structurally valid documents describing a bad instance
// raise InvalidInstance.

std::string SerializeInstance(const Instance& inst);
Instance ParseInstance(std::string_view text);

std::string SerializeAllocation(const Allocation& x);
Allocation ParseAllocation(std::string_view text);

std::string SerializeReport(const SolveReport& report);
SolveReport ParseReport(std::string_view text);

// Accepts either an allocation document or a solve report.
Allocation ParseAllocationOrReport(std::string_view text);

}  // namespace leximin

#endif  // LEXIMIN_SERIALIZE_H_
