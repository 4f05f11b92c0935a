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

#include "leximin/item_set.h"

#include <algorithm>

#include "leximin/errors.h"

namespace leximin {

ItemSet::ItemSet(int universe, std::initializer_list<ItemId> items)
    : ItemSet(universe, std::span<const ItemId>(items.begin(), items.size())) {}

ItemSet::ItemSet(int universe, std::span<const ItemId> items)
    : ItemSet(universe) {
  for (ItemId o : items) {
    if (o < 0 || o >= universe) {
      throw ContractViolation("item " + std::to_string(o) +
                              " outside universe of size " +
                              std::to_string(universe));
    }
    insert(o);
  }
}

ItemSet ItemSet::Full(int universe) {
  ItemSet s(universe);
  for (ItemId o = 0; o < universe; ++o) s.insert(o);
  return s;
}

ItemSet ItemSet::FromMask(int universe, std::uint64_t mask) {
  if (universe > 64) throw ContractViolation("FromMask needs universe <= 64");
  ItemSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

int ItemSet::size() const {
  int n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

bool ItemSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

ItemSet ItemSet::With(ItemId o) const {
  ItemSet s = *this;
  s.insert(o);
  return s;
}

ItemSet ItemSet::Without(ItemId o) const {
  ItemSet s = *this;
  s.erase(o);
  return s;
}

ItemSet& ItemSet::operator|=(const ItemSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

ItemSet& ItemSet::operator&=(const ItemSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

ItemSet& ItemSet::operator-=(const ItemSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

bool ItemSet::Intersects(const ItemSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & other.words_[w]) return true;
  }
  return false;
}

bool ItemSet::IsSubsetOf(const ItemSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

std::vector<ItemId> ItemSet::items() const {
  std::vector<ItemId> out;
  out.reserve(size());
  ForEach([&](ItemId o) { out.push_back(o); });
  return out;
}

}  // namespace leximin
