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

#include "leximin/serialize.h"

#include <charconv>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "leximin/errors.h"

namespace leximin {
namespace {

using json = nlohmann::json;

json Parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("", e.what());
  }
}

const json& Field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(path, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

std::int64_t AsInt(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<std::int64_t>();
}

int AsCount(const json& j, const std::string& path) {
  const std::int64_t x = AsInt(j, path);
  if (x < 0 || x > (std::int64_t{1} << 30)) {
    throw ParseError(path, "expected a non-negative count");
  }
  return static_cast<int>(x);
}

const json& AsArray(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

std::vector<std::int64_t> AsInts(const json& j, const std::string& path) {
  std::vector<std::int64_t> out;
  const json& arr = AsArray(j, path);
  for (std::size_t k = 0; k < arr.size(); ++k) {
    out.push_back(AsInt(arr[k], path + "/" + std::to_string(k)));
  }
  return out;
}

json ItemsJson(const ItemSet& s) { return json(s.items()); }

std::string TableKey(std::uint64_t mask, int m) {
  std::string key;
  for (int o = 0; o < m; ++o) {
    if ((mask >> o) & 1) {
      if (!key.empty()) key += ",";
      key += std::to_string(o);
    }
  }
  return key;
}

std::uint64_t ParseTableKey(const std::string& key, int m,
                            const std::string& path) {
  std::uint64_t mask = 0;
  int last = -1;
  std::size_t pos = 0;
  while (pos < key.size()) {
    std::size_t comma = key.find(',', pos);
    if (comma == std::string::npos) comma = key.size();
    int o = 0;
    const auto [ptr, ec] =
        std::from_chars(key.data() + pos, key.data() + comma, o);
    if (ec != std::errc() || ptr != key.data() + comma) {
      throw ParseError(path, "bad item list \"" + key + "\"");
    }
    if (o <= last || o >= m) {
      throw ParseError(path, "item list \"" + key +
                                 "\" must be strictly ascending and in range");
    }
    mask |= std::uint64_t{1} << o;
    last = o;
    pos = comma + 1;
    if (comma + 1 == key.size()) throw ParseError(path, "trailing comma");
  }
  return mask;
}

json ValuationJson(const Valuation& v) {
  json j;
  j["kind"] = v.kind() == ValuationKind::kGeneralAdditive ? "general_additive"
              : v.kind() == ValuationKind::kAdditive      ? "additive"
              : v.kind() == ValuationKind::kCappedGroups  ? "capped_groups"
                                                          : "explicit";
  if (const AdditiveSpec* a = v.additive()) {
    j["values"] = a->values;
  } else if (const CappedGroupsSpec* cg = v.capped_groups()) {
    json groups = json::array();
    for (const CappedGroup& g : cg->groups) {
      groups.push_back(
          {{"cap", g.cap}, {"hi", g.hi}, {"items", g.items}, {"lo", g.lo}});
    }
    j["groups"] = std::move(groups);
    j["default"] = cg->default_marginal;
  } else {
    json table = json::object();
    const auto& entries = v.explicit_table()->table;
    for (std::uint64_t mask = 0; mask < entries.size(); ++mask) {
      if (entries[mask]) table[TableKey(mask, v.num_items())] = *entries[mask];
    }
    j["table"] = std::move(table);
  }
  return j;
}

Valuation ParseValuation(const json& j, int m, const std::string& path) {
  const json& kind_node = Field(j, "kind", path);
  if (!kind_node.is_string()) throw ParseError(path + "/kind", "expected a string");
  const std::string kind = kind_node.get<std::string>();
  if (kind == "additive" || kind == "general_additive") {
    std::vector<Utility> values = AsInts(Field(j, "values", path), path + "/values");
    if (static_cast<int>(values.size()) != m) {
      throw ParseError(path + "/values", "expected " + std::to_string(m) +
                                             " values, found " +
                                             std::to_string(values.size()));
    }
    return kind == "additive" ? Valuation::Additive(std::move(values))
                              : Valuation::GeneralAdditive(std::move(values));
  }
  if (kind == "capped_groups") {
    const std::string gpath = path + "/groups";
    const json& arr = AsArray(Field(j, "groups", path), gpath);
    std::vector<CappedGroup> groups;
    for (std::size_t g = 0; g < arr.size(); ++g) {
      const std::string at = gpath + "/" + std::to_string(g);
      CappedGroup group;
      for (std::int64_t o : AsInts(Field(arr[g], "items", at), at + "/items")) {
        if (o < 0 || o >= m) {
          throw ParseError(at + "/items", "item " + std::to_string(o) +
                                              " outside 0.." +
                                              std::to_string(m - 1));
        }
        group.items.push_back(static_cast<ItemId>(o));
      }
      group.cap = AsCount(Field(arr[g], "cap", at), at + "/cap");
      group.hi = AsInt(Field(arr[g], "hi", at), at + "/hi");
      group.lo = AsInt(Field(arr[g], "lo", at), at + "/lo");
      groups.push_back(std::move(group));
    }
    const Utility default_marginal =
        AsInt(Field(j, "default", path), path + "/default");
    return Valuation::CappedGroups(m, std::move(groups), default_marginal);
  }
  if (kind == "explicit") {
    if (m > kMaxExplicitItems) {
      throw InvalidInstance("explicit tables support at most " +
                            std::to_string(kMaxExplicitItems) + " items");
    }
    const json& table = Field(j, "table", path);
    if (!table.is_object()) throw ParseError(path + "/table", "expected an object");
    std::vector<std::optional<Utility>> entries(std::size_t{1} << m);
    for (const auto& [key, value] : table.items()) {
      const std::string at = path + "/table/" + key;
      entries[ParseTableKey(key, m, at)] = AsInt(value, at);
    }
    return Valuation::Explicit(m, std::move(entries));
  }
  throw ParseError(path + "/kind", "unknown valuation kind \"" + kind + "\"");
}

json AllocationJson(const Allocation& x) {
  json bundles = json::array();
  for (AgentId h = 1; h <= x.num_agents(); ++h) {
    bundles.push_back(ItemsJson(x.bundle(h)));
  }
  return {{"bundles", std::move(bundles)},
          {"unallocated", ItemsJson(x.unallocated())}};
}

Allocation ParseAllocationJson(const json& j, const std::string& path) {
  const std::string bpath = path + "/bundles";
  const json& arr = AsArray(Field(j, "bundles", path), bpath);
  std::vector<std::vector<std::int64_t>> raw;
  for (std::size_t h = 0; h < arr.size(); ++h) {
    raw.push_back(AsInts(arr[h], bpath + "/" + std::to_string(h)));
  }
  const std::vector<std::int64_t> pool =
      AsInts(Field(j, "unallocated", path), path + "/unallocated");
  std::size_t m = pool.size();
  for (const auto& bundle : raw) m += bundle.size();
  const int num_items = static_cast<int>(m);
  std::vector<bool> seen(m, false);
  auto to_set = [&](const std::vector<std::int64_t>& items,
                    const std::string& at) {
    ItemSet s(num_items);
    for (std::int64_t o : items) {
      if (o < 0 || o >= num_items || seen[o]) {
        throw ParseError(at, "items must be distinct and cover 0.." +
                                 std::to_string(num_items - 1));
      }
      seen[o] = true;
      s.insert(static_cast<ItemId>(o));
    }
    return s;
  };
  std::vector<ItemSet> bundles;
  for (std::size_t h = 0; h < raw.size(); ++h) {
    bundles.push_back(to_set(raw[h], bpath + "/" + std::to_string(h)));
  }
  const ItemSet unallocated = to_set(pool, path + "/unallocated");
  return Allocation::FromParts(num_items, bundles, unallocated);
}

json ReportJson(const SolveReport& r) {
  return {{"allocation", AllocationJson(r.allocation)},
          {"decomposition",
           {{"x0", AllocationJson(r.decomposition.x0)},
            {"xc", AllocationJson(r.decomposition.xc)},
            {"xm1", AllocationJson(r.decomposition.xm1)}}},
          {"exchange_augmentations", r.exchange_augmentations},
          {"pareto_augmentations", r.pareto_augmentations},
          {"sorted", r.sorted.values()},
          {"usw", r.usw},
          {"utilities", r.utilities}};
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string SerializeInstance(const Instance& inst) {
  json agents = json::array();
  for (const Valuation& v : inst.valuations()) agents.push_back(ValuationJson(v));
  return Dump({{"agents", std::move(agents)},
               {"c", inst.c()},
               {"num_agents", inst.num_agents()},
               {"num_items", inst.num_items()}});
}

Instance ParseInstance(std::string_view text) {
  const json j = Parse(text);
  const int n = AsCount(Field(j, "num_agents", ""), "/num_agents");
  const int m = AsCount(Field(j, "num_items", ""), "/num_items");
  const Utility c = AsInt(Field(j, "c", ""), "/c");
  const json& agents = AsArray(Field(j, "agents", ""), "/agents");
  if (static_cast<int>(agents.size()) != n) {
    throw ParseError("/agents", "expected " + std::to_string(n) +
                                    " agents, found " +
                                    std::to_string(agents.size()));
  }
  std::vector<Valuation> valuations;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    valuations.push_back(
        ParseValuation(agents[i], m, "/agents/" + std::to_string(i)));
  }
  return Instance(n, m, c, std::move(valuations));
}

std::string SerializeAllocation(const Allocation& x) {
  return Dump(AllocationJson(x));
}

Allocation ParseAllocation(std::string_view text) {
  return ParseAllocationJson(Parse(text), "");
}

std::string SerializeReport(const SolveReport& report) {
  return Dump(ReportJson(report));
}

SolveReport ParseReport(std::string_view text) {
  const json j = Parse(text);
  SolveReport r;
  r.allocation = ParseAllocationJson(Field(j, "allocation", ""), "/allocation");
  const json& d = Field(j, "decomposition", "");
  r.decomposition.xc = ParseAllocationJson(Field(d, "xc", "/decomposition"),
                                           "/decomposition/xc");
  r.decomposition.x0 = ParseAllocationJson(Field(d, "x0", "/decomposition"),
                                           "/decomposition/x0");
  r.decomposition.xm1 = ParseAllocationJson(Field(d, "xm1", "/decomposition"),
                                            "/decomposition/xm1");
  r.exchange_augmentations =
      AsInt(Field(j, "exchange_augmentations", ""), "/exchange_augmentations");
  r.pareto_augmentations =
      AsInt(Field(j, "pareto_augmentations", ""), "/pareto_augmentations");
  r.utilities = AsInts(Field(j, "utilities", ""), "/utilities");
  r.sorted = SortedUtilityVector(AsInts(Field(j, "sorted", ""), "/sorted"));
  r.usw = AsInt(Field(j, "usw", ""), "/usw");
  return r;
}

Allocation ParseAllocationOrReport(std::string_view text) {
  const json j = Parse(text);
  if (j.is_object() && j.contains("allocation")) {
    return ParseAllocationJson(j["allocation"], "/allocation");
  }
  return ParseAllocationJson(j, "");
}

}  // namespace leximin
