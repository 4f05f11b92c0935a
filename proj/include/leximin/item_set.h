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

#ifndef LEXIMIN_ITEM_SET_H_
#define LEXIMIN_ITEM_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace leximin {

// Items are 0..m-1. Index order is the canonical order for every tie-break.
using ItemId = int;

// Set of items over a fixed universe {0..m-1}. Membership is O(1) and
// iteration is always ascending.
class ItemSet {
 public:
  ItemSet() = default;
  explicit ItemSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  ItemSet(int universe, std::initializer_list<ItemId> items);
  ItemSet(int universe, std::span<const ItemId> items);

  static ItemSet Full(int universe);
  // Bits of `mask` as items; universe must be at most 64.
  static ItemSet FromMask(int universe, std::uint64_t mask);

  int universe() const { return universe_; }
  int size() const;
  bool empty() const;

  bool contains(ItemId o) const {
    return (words_[o >> 6] >> (o & 63)) & 1u;
  }
  void insert(ItemId o) { words_[o >> 6] |= std::uint64_t{1} << (o & 63); }
  void erase(ItemId o) { words_[o >> 6] &= ~(std::uint64_t{1} << (o & 63)); }

  ItemSet With(ItemId o) const;
  ItemSet Without(ItemId o) const;

  ItemSet& operator|=(const ItemSet& other);
  ItemSet& operator&=(const ItemSet& other);
  ItemSet& operator-=(const ItemSet& other);
  friend ItemSet operator|(ItemSet a, const ItemSet& b) { return a |= b; }
  friend ItemSet operator&(ItemSet a, const ItemSet& b) { return a &= b; }
  friend ItemSet operator-(ItemSet a, const ItemSet& b) { return a -= b; }

  bool Intersects(const ItemSet& other) const;
  bool IsSubsetOf(const ItemSet& other) const;

  // Low 64 bits; only meaningful when universe() <= 64.
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

  std::vector<ItemId> items() const;

  template <typename F>
  void ForEach(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<ItemId>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const ItemSet&, const ItemSet&) = default;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace leximin

#endif  // LEXIMIN_ITEM_SET_H_
